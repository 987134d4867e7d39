use std::fmt;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::lgroup::{Coord, LIdealDescriptor, LexElem, LexGroup, UnitalLGroup};
use crate::mv::{lukasiewicz, FiniteMvAlgebra, MvOps, Order};
use crate::poset::SpecPoset;
use crate::{Error, Result};

/// How a symbolic algebra was presented; derived from the unital group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "m")]
pub enum Presentation {
    GammaOfUnitalLex,
    Chang,
    Komori(u64),
}

/// `Γ(G, u)` for a lexicographic `G`: the interval `[0, u]` with truncated
/// addition and `¬a = u − a`. Carriers are never materialised.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicMvAlgebra {
    lgroup: UnitalLGroup,
    presentation: Presentation,
}

impl SymbolicMvAlgebra {
    pub fn new(lgroup: UnitalLGroup) -> Self {
        let g = lgroup.group();
        let u = lgroup.unit();
        let mut presentation = Presentation::GammaOfUnitalLex;
        if g.coords() == [Coord::Integer, Coord::Integer] && u.coord(1).is_zero() && u.coord(0).is_integer() {
            match u.coord(0).to_integer().to_u64() {
                Some(1) => presentation = Presentation::Chang,
                Some(m) => presentation = Presentation::Komori(m),
                None => {}
            }
        }
        Self { lgroup, presentation }
    }

    pub fn lgroup(&self) -> &UnitalLGroup {
        &self.lgroup
    }

    pub fn group(&self) -> &LexGroup {
        self.lgroup.group()
    }

    pub fn unit(&self) -> &LexElem {
        self.lgroup.unit()
    }

    pub fn rank(&self) -> usize {
        self.group().rank()
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    pub fn contains(&self, x: &LexElem) -> bool {
        self.group().contains(x) && *x >= LexElem::zero(self.rank()) && x <= self.unit()
    }

    /// Validates `x` as an element: in the group and within `[0, u]`.
    pub fn element(&self, x: LexElem) -> Result<LexElem> {
        self.group().check(&x)?;
        if x < LexElem::zero(self.rank()) || x > *self.unit() {
            return Err(Error::Constraint(format!("{x} lies outside [0, {}]", self.unit())));
        }
        Ok(x)
    }

    pub fn element_from_ints(&self, v: &[i64]) -> Result<LexElem> {
        if v.len() != self.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), found: v.len() });
        }
        self.element(LexElem::from_ints(v))
    }

    /// `ord(x)` is finite exactly when the leading coordinate of `x` is
    /// positive; then it is the least `n` with `n·x ≥ u`.
    pub fn ord(&self, x: &LexElem) -> Order {
        let x0 = x.coord(0);
        if !x0.is_positive() {
            return Order::Infinite;
        }
        let ratio = self.unit().coord(0) / x0;
        let mut n = ratio.ceil().to_integer();
        if x.scale_big(&n) < *self.unit() {
            n += 1;
        }
        Order::Finite(n.to_usize().expect("order fits in usize"))
    }

    fn leading_is_integer(&self) -> bool {
        self.group().coords()[0] == Coord::Integer
    }

    /// Perfect iff no element has leading coordinate strictly between 0 and
    /// `u₀`, i.e. the leading factor is ℤ and `u₀ = 1`.
    pub fn is_perfect(&self) -> bool {
        self.leading_is_integer() && self.unit().coord(0) == &BigRational::from_integer(1.into())
    }

    /// The radical class of `x` is determined by its leading coordinate.
    pub fn radical_class(&self, x: &LexElem) -> BigRational {
        x.coord(0).clone()
    }

    /// Number of radical classes minus one, i.e. `u₀`.
    pub fn rank_value(&self) -> Result<usize> {
        if !self.leading_is_integer() {
            return Err(Error::Unsupported("infinitely many radical classes".into()));
        }
        self.unit()
            .coord(0)
            .to_integer()
            .to_usize()
            .ok_or_else(|| Error::Unsupported("rank does not fit in usize".into()))
    }

    /// The prime ideal `C_k ∩ [0, u]` for each proper convex subgroup `C_k`.
    pub fn prime_descriptors(&self) -> Vec<LIdealDescriptor> {
        (0..self.rank()).map(|k| LIdealDescriptor { rank: self.rank(), k }).collect()
    }

    /// `Γ(G/C_k, u/C_k)`: the quotient by the prime for `C_k`.
    pub fn quotient_by(&self, p: LIdealDescriptor) -> Result<SymbolicMvAlgebra> {
        let keep = self.rank() - p.k;
        let g = self.group().truncate(keep);
        let u = LexElem(self.unit().0[..keep].to_vec());
        Ok(SymbolicMvAlgebra::new(UnitalLGroup::new(g, u)?))
    }

    /// Materialises `Γ(ℤ, m)`; other presentations are infinite.
    pub fn materialize(&self) -> Result<FiniteMvAlgebra> {
        if self.group().coords() != [Coord::Integer] {
            return Err(Error::Unsupported(format!("Γ({}, {}) is infinite", self.group(), self.unit())));
        }
        let m = self
            .unit()
            .coord(0)
            .to_integer()
            .to_usize()
            .ok_or_else(|| Error::Unsupported("unit too large".into()))?;
        lukasiewicz(m)
    }

    /// Elements whose coordinates are integers in `-bound..=bound` (and
    /// additionally the quarter-integers when the coordinate is ℚ).
    pub fn sample_elements(&self, bound: i64) -> Vec<LexElem> {
        let mut values: Vec<Vec<BigRational>> = Vec::new();
        for c in self.group().coords() {
            let mut v: Vec<BigRational> = (-bound..=bound)
                .map(|i| BigRational::from_integer(i.into()))
                .collect();
            if *c == Coord::Rational {
                v.extend((-4 * bound..=4 * bound).filter(|i| i % 4 != 0).map(|i| {
                    BigRational::new(BigInt::from(i), BigInt::from(4))
                }));
            }
            v.sort();
            values.push(v);
        }
        let mut out = vec![LexElem(vec![])];
        for v in &values {
            out = out
                .into_iter()
                .flat_map(|p| {
                    v.iter().map(move |q| {
                        let mut e = p.0.clone();
                        e.push(q.clone());
                        LexElem(e)
                    })
                })
                .collect();
        }
        out.retain(|x| self.contains(x));
        out
    }

    /// Human-readable form: `nc` and `1−nc` for the Chang algebra, tuples
    /// otherwise.
    pub fn display(&self, x: &LexElem) -> String {
        if self.presentation == Presentation::Chang {
            if let Some(e) = super::chang::ChangElem::from_lex(x) {
                return e.to_string();
            }
        }
        x.to_string()
    }
}

impl fmt::Display for SymbolicMvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.presentation {
            Presentation::Chang => f.write_str("C = Γ(ZxZ, (1,0))"),
            Presentation::Komori(m) => write!(f, "K_{m} = Γ(ZxZ, ({m},0))"),
            Presentation::GammaOfUnitalLex => write!(f, "Γ({}, {})", self.group(), self.unit()),
        }
    }
}

impl LexElem {
    fn scale_big(&self, n: &BigInt) -> LexElem {
        let n = BigRational::from_integer(n.clone());
        LexElem(self.0.iter().map(|a| a * &n).collect())
    }
}

impl MvOps for SymbolicMvAlgebra {
    type Elem = LexElem;

    fn zero(&self) -> LexElem {
        LexElem::zero(self.rank())
    }

    fn oplus(&self, x: &LexElem, y: &LexElem) -> LexElem {
        let s = x.add(y);
        if s > *self.unit() {
            self.unit().clone()
        } else {
            s
        }
    }

    fn neg(&self, x: &LexElem) -> LexElem {
        self.unit().sub(x)
    }

    fn one(&self) -> LexElem {
        self.unit().clone()
    }

    fn join(&self, x: &LexElem, y: &LexElem) -> LexElem {
        x.max(y).clone()
    }

    fn meet(&self, x: &LexElem, y: &LexElem) -> LexElem {
        x.min(y).clone()
    }

    fn leq(&self, x: &LexElem, y: &LexElem) -> bool {
        x <= y
    }
}

/// Either a materialised table or a symbolic interval algebra.
#[derive(Clone, Debug)]
pub enum GammaAlgebra {
    Finite(FiniteMvAlgebra),
    Symbolic(SymbolicMvAlgebra),
}

/// `Γ(G, u)`. For `G = ℤ` the chain `Ł_u` is materialised.
pub fn gamma(gu: &UnitalLGroup) -> Result<GammaAlgebra> {
    let s = SymbolicMvAlgebra::new(gu.clone());
    if gu.group().coords() == [Coord::Integer] {
        Ok(GammaAlgebra::Finite(s.materialize()?))
    } else {
        Ok(GammaAlgebra::Symbolic(s))
    }
}

/// `Δ(G) = Γ(ℤ lex G, (1, 0, …, 0))`.
pub fn delta(g: &LexGroup) -> Result<SymbolicMvAlgebra> {
    let zg = g.prepend_integer()?;
    let mut u = LexElem::zero(zg.rank());
    u.0[0] = BigRational::from_integer(1.into());
    Ok(SymbolicMvAlgebra::new(UnitalLGroup::new(zg, u)?))
}

fn check_m(m: u64) -> Result<()> {
    if m < 1 {
        return Err(Error::Invalid("m must be at least 1".into()));
    }
    Ok(())
}

/// `K_m = Γ(ℤ lex ℤ, (m, 0))`.
pub fn komori(m: u64) -> Result<SymbolicMvAlgebra> {
    check_m(m)?;
    let g = LexGroup::integers(2)?;
    let u = LexElem(vec![BigRational::from_integer(m.into()), BigRational::zero()]);
    Ok(SymbolicMvAlgebra::new(UnitalLGroup::new(g, u)?))
}

/// The Chang algebra `C = K_1`.
pub fn chang() -> SymbolicMvAlgebra {
    komori(1).expect("m = 1 is valid")
}

/// `Δ_m(ℚ) = Γ(ℤ lex ℚ, (m, 0))`, the exact stand-in for `Δ_m(ℝ)`.
pub fn delta_m_rational(m: u64) -> Result<SymbolicMvAlgebra> {
    check_m(m)?;
    let g = LexGroup::new(vec![Coord::Integer, Coord::Rational])?;
    let u = LexElem(vec![BigRational::from_integer(m.into()), BigRational::zero()]);
    Ok(SymbolicMvAlgebra::new(UnitalLGroup::new(g, u)?))
}

/// Prime spectrum of a symbolic algebra: primes correspond to the proper
/// convex subgroups `C_0 ⊂ … ⊂ C_{d−1}` of the group, giving a `d`-chain.
pub fn symbolic_spec(s: &SymbolicMvAlgebra) -> Result<SpecPoset> {
    let primes = s.prime_descriptors();
    let labels = primes
        .iter()
        .map(|p| match (p.k, s.presentation()) {
            (0, _) => "{0}".to_string(),
            (1, Presentation::Chang | Presentation::Komori(_)) => "Rad".to_string(),
            _ => format!("[0,u] ∩ {{{}}}", p.describe()),
        })
        .collect();
    SpecPoset::from_relation(labels, |i, j| primes[i].k <= primes[j].k)
}
