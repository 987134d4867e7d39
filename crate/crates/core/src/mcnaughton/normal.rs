use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::functors::parse_rational;
use crate::{Error, Result};

/// One simple function `ρ(a·x + b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Piece {
    pub a: Vec<i64>,
    pub b: i64,
}

impl Piece {
    pub fn new(a: Vec<i64>, b: i64) -> Self {
        Self { a, b }
    }

    /// `d · ρ(a·k/d + b)` for integer numerators `k` over a common `d > 0`.
    fn eval_scaled(&self, k: &[BigInt], d: &BigInt) -> BigInt {
        let mut y = BigInt::from(self.b) * d;
        for (ai, ki) in self.a.iter().zip(k) {
            if *ai != 0 {
                y += BigInt::from(*ai) * ki;
            }
        }
        if y.is_negative() {
            BigInt::zero()
        } else if &y > d {
            d.clone()
        } else {
            y
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &ai) in self.a.iter().enumerate() {
            let var = if self.a.len() == 1 { "x".to_string() } else { format!("x{}", i + 1) };
            match ai {
                0 => {}
                1 => terms.push(format!("+{var}")),
                -1 => terms.push(format!("-{var}")),
                _ => terms.push(format!("{ai:+}{var}")),
            }
        }
        if self.b != 0 || terms.is_empty() {
            terms.push(format!("{:+}", self.b));
        }
        let s = terms.concat();
        write!(f, "ρ({})", s.strip_prefix('+').unwrap_or(&s))
    }
}

#[derive(Deserialize)]
struct RawNormalForm {
    arity: usize,
    meets: Vec<Vec<Piece>>,
}

/// `φ(x) = ∧_meets ∨_joins ρ(a·x + b)`. Nonempty at both levels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawNormalForm")]
pub struct NormalForm {
    arity: usize,
    meets: Vec<Vec<Piece>>,
}

impl TryFrom<RawNormalForm> for NormalForm {
    type Error = Error;

    fn try_from(r: RawNormalForm) -> Result<Self> {
        NormalForm::new(r.arity, r.meets)
    }
}

impl NormalForm {
    pub fn new(arity: usize, meets: Vec<Vec<Piece>>) -> Result<Self> {
        if meets.is_empty() {
            return Err(Error::Invalid("a normal form needs at least one meet".into()));
        }
        for (i, join) in meets.iter().enumerate() {
            if join.is_empty() {
                return Err(Error::Invalid(format!("meet {i} has no pieces")));
            }
            for p in join {
                if p.a.len() != arity {
                    return Err(Error::ArityMismatch { expected: arity, found: p.a.len() });
                }
            }
        }
        Ok(Self { arity, meets })
    }

    pub fn single(piece: Piece) -> Result<Self> {
        Self::new(piece.a.len(), vec![vec![piece]])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn meets(&self) -> &[Vec<Piece>] {
        &self.meets
    }

    pub fn pieces(&self) -> impl Iterator<Item = &Piece> {
        self.meets.iter().flatten()
    }

    /// Conjunction of the two meet lists.
    pub fn and(&self, other: &NormalForm) -> Result<NormalForm> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        let mut meets = self.meets.clone();
        meets.extend(other.meets.iter().cloned());
        NormalForm::new(self.arity, meets)
    }

    /// `d · φ(k/d)`, exact. Used by the samplers, which share a denominator.
    pub fn eval_scaled(&self, k: &[BigInt], d: &BigInt) -> Result<BigInt> {
        if k.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: k.len() });
        }
        if !d.is_positive() {
            return Err(Error::Invalid("denominator must be positive".into()));
        }
        Ok(self
            .meets
            .iter()
            .map(|join| join.iter().map(|p| p.eval_scaled(k, d)).max().expect("nonempty join"))
            .min()
            .expect("nonempty meet"))
    }

    /// Largest `‖a‖₁` over all pieces.
    pub fn max_l1(&self) -> u64 {
        self.pieces().map(|p| p.a.iter().map(|v| v.unsigned_abs()).sum()).max().unwrap_or(0)
    }

    /// A random normal form with `1..=max_meets` meets of `1..=max_joins`
    /// pieces and coefficients in `-bound..=bound`.
    pub fn random<R: Rng>(rng: &mut R, arity: usize, bound: i64, max_meets: usize, max_joins: usize) -> Self {
        let meets = (0..rng.gen_range(1..=max_meets))
            .map(|_| {
                (0..rng.gen_range(1..=max_joins))
                    .map(|_| Piece {
                        a: (0..arity).map(|_| rng.gen_range(-bound..=bound)).collect(),
                        b: rng.gen_range(-bound..=bound),
                    })
                    .collect()
            })
            .collect();
        Self::new(arity, meets).expect("generated shape is valid")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joins: Vec<String> = self
            .meets
            .iter()
            .map(|join| {
                let ps: Vec<String> = join.iter().map(Piece::to_string).collect();
                if ps.len() == 1 || self.meets.len() == 1 {
                    ps.join(" ∨ ")
                } else {
                    format!("({})", ps.join(" ∨ "))
                }
            })
            .collect();
        f.write_str(&joins.join(" ∧ "))
    }
}

/// A point of `[0, 1]ⁿ` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoint(Vec<BigRational>);

impl RatPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        for c in &coords {
            if c.is_negative() || *c > BigRational::one() {
                return Err(Error::Constraint(format!("coordinate {c} is outside [0, 1]")));
            }
        }
        Ok(Self(coords))
    }

    pub fn origin(n: usize) -> Self {
        Self(vec![BigRational::zero(); n])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for RatPoint {
    type Err = Error;

    /// Comma-separated rationals, optionally parenthesised: `3/4`, `(1/2, 1)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = t.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>()?;
        RatPoint::new(coords)
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `ρ(q) = max(0, min(1, q))`.
pub fn rho(q: &BigRational) -> BigRational {
    if q.is_negative() {
        BigRational::zero()
    } else if *q > BigRational::one() {
        BigRational::one()
    } else {
        q.clone()
    }
}

fn common_denominator(x: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let d = x.iter().fold(BigInt::one(), |acc, c| num::integer::lcm(acc, c.denom().clone()));
    let k = x.iter().map(|c| c.numer() * (&d / c.denom())).collect();
    (k, d)
}

pub fn eval_nf(phi: &NormalForm, x: &RatPoint) -> Result<BigRational> {
    let (k, d) = common_denominator(x.coords());
    let v = phi.eval_scaled(&k, &d)?;
    Ok(BigRational::new(v, d))
}

/// Every constant term is zero.
pub fn is_syntactically_homogeneous(phi: &NormalForm) -> bool {
    phi.pieces().all(|p| p.b == 0)
}

/// Some join has all constants `≤ 0`. Asserted equal to `φ(0) = 0`.
pub fn zero_at_origin_criterion(phi: &NormalForm) -> Result<bool> {
    let by_constants = phi.meets().iter().any(|join| join.iter().all(|p| p.b <= 0));
    let by_value = eval_nf(phi, &RatPoint::origin(phi.arity()))?.is_zero();
    if by_constants != by_value {
        return Err(Error::Inconsistent(format!(
            "zero-at-origin criterion gives {by_constants} but φ(0) = 0 is {by_value} for {phi}"
        )));
    }
    Ok(by_constants)
}

/// `ρ(a·x + b) ↦ ρ(a·x + b·y)` in one more variable.
pub fn homogenize(phi: &NormalForm) -> NormalForm {
    let meets = phi
        .meets()
        .iter()
        .map(|join| {
            join.iter()
                .map(|p| {
                    let mut a = p.a.clone();
                    a.push(p.b);
                    Piece { a, b: 0 }
                })
                .collect()
        })
        .collect();
    NormalForm::new(phi.arity() + 1, meets).expect("shape is preserved")
}
