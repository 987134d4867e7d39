use std::fmt;

use serde::{Deserialize, Serialize};

use super::MvOps;
use crate::{Error, Result};

/// A term over variables, 0, ⊕ and ¬. The derived connectives are
/// constructors that expand into these.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MvTerm {
    Var(usize),
    Zero,
    Oplus(Box<MvTerm>, Box<MvTerm>),
    Neg(Box<MvTerm>),
}

impl MvTerm {
    pub fn var(i: usize) -> Self {
        MvTerm::Var(i)
    }

    pub fn one() -> Self {
        MvTerm::Zero.not()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        MvTerm::Neg(Box::new(self))
    }

    pub fn oplus(self, other: Self) -> Self {
        MvTerm::Oplus(Box::new(self), Box::new(other))
    }

    /// `¬(¬x ⊕ ¬y)`
    pub fn odot(self, other: Self) -> Self {
        self.not().oplus(other.not()).not()
    }

    pub fn ominus(self, other: Self) -> Self {
        self.odot(other.not())
    }

    /// `¬(¬x ⊕ y) ⊕ y`
    pub fn join(self, other: Self) -> Self {
        self.not().oplus(other.clone()).not().oplus(other)
    }

    pub fn meet(self, other: Self) -> Self {
        self.not().join(other.not()).not()
    }

    /// One more than the largest variable index, or 0 for closed terms.
    pub fn arity(&self) -> usize {
        match self {
            MvTerm::Var(i) => i + 1,
            MvTerm::Zero => 0,
            MvTerm::Oplus(a, b) => a.arity().max(b.arity()),
            MvTerm::Neg(a) => a.arity(),
        }
    }

    /// Nesting depth of ⊕ and ¬; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            MvTerm::Var(_) | MvTerm::Zero => 0,
            MvTerm::Oplus(a, b) => 1 + a.depth().max(b.depth()),
            MvTerm::Neg(a) => 1 + a.depth(),
        }
    }
}

impl fmt::Display for MvTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MvTerm::Var(i) => write!(f, "x{i}"),
            MvTerm::Zero => f.write_str("0"),
            MvTerm::Oplus(a, b) => write!(f, "({a} ⊕ {b})"),
            MvTerm::Neg(a) => write!(f, "¬{a}"),
        }
    }
}

/// Bottom-up evaluation in any MV signature.
pub fn eval_term<A: MvOps>(alg: &A, t: &MvTerm, assignment: &[A::Elem]) -> Result<A::Elem> {
    Ok(match t {
        MvTerm::Var(i) => assignment.get(*i).cloned().ok_or(Error::UnboundVariable(*i))?,
        MvTerm::Zero => alg.zero(),
        MvTerm::Oplus(a, b) => {
            let x = eval_term(alg, a, assignment)?;
            let y = eval_term(alg, b, assignment)?;
            alg.oplus(&x, &y)
        }
        MvTerm::Neg(a) => alg.neg(&eval_term(alg, a, assignment)?),
    })
}
