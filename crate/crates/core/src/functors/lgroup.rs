use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poset::SpecPoset;
use crate::{Error, Result};

/// Coordinates beyond this are refused. Rank 3 is the public bound for
/// groups; one more is needed for `Δ` of a rank-3 group.
pub const MAX_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coord {
    Integer,
    Rational,
}

impl Coord {
    fn symbol(self) -> &'static str {
        match self {
            Coord::Integer => "Z",
            Coord::Rational => "Q",
        }
    }
}

/// A lexicographic product of copies of ℤ and ℚ, most significant
/// coordinate first. Rank 0 is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LexGroup {
    coords: Vec<Coord>,
}

/// An element of a [`LexGroup`]; comparison is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexElem(pub Vec<BigRational>);

impl LexElem {
    pub fn zero(rank: usize) -> Self {
        LexElem(vec![BigRational::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        LexElem(v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.0[i]
    }

    pub fn add(&self, other: &LexElem) -> LexElem {
        LexElem(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LexElem) -> LexElem {
        LexElem(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LexElem {
        LexElem(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, n: i64) -> LexElem {
        let n = BigRational::from_integer(BigInt::from(n));
        LexElem(self.0.iter().map(|a| a * &n).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|a| !a.is_zero())
    }

    pub fn is_positive(&self) -> bool {
        self.leading_index().is_some_and(|i| self.0[i].is_positive())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for LexElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("cannot parse {s:?} as a rational"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl FromStr for LexElem {
    type Err = Error;

    /// Accepts `(a,b,…)`, `a,b,…` or a single value; entries may be
    /// fractions `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(LexElem(vec![]));
        }
        inner.split(',').map(parse_rational).collect::<Result<_>>().map(LexElem)
    }
}

impl Serialize for LexElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LexElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        parts
            .iter()
            .map(|p| parse_rational(p))
            .collect::<Result<_>>()
            .map(LexElem)
            .map_err(serde::de::Error::custom)
    }
}

impl LexGroup {
    pub fn new(coords: Vec<Coord>) -> Result<Self> {
        if coords.len() > MAX_RANK {
            return Err(Error::Unsupported(format!(
                "lexicographic groups of rank {} (at most {MAX_RANK})",
                coords.len()
            )));
        }
        Ok(Self { coords })
    }

    pub fn trivial() -> Self {
        Self { coords: vec![] }
    }

    pub fn integers(rank: usize) -> Result<Self> {
        Self::new(vec![Coord::Integer; rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    /// `ℤ lex G`
    pub fn prepend_integer(&self) -> Result<Self> {
        let mut coords = vec![Coord::Integer];
        coords.extend_from_slice(&self.coords);
        Self::new(coords)
    }

    /// The quotient by the convex subgroup whose last `k` coordinates are
    /// free: the lexicographic product of the first `rank − k` factors.
    pub fn truncate(&self, keep: usize) -> Self {
        Self { coords: self.coords[..keep].to_vec() }
    }

    pub fn contains(&self, x: &LexElem) -> bool {
        x.rank() == self.rank()
            && x.0.iter().zip(&self.coords).all(|(a, c)| *c == Coord::Rational || a.is_integer())
    }

    pub fn check(&self, x: &LexElem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Constraint(format!("{x} is not an element of {self}")))
        }
    }
}

impl fmt::Display for LexGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<&str> = self.coords.iter().map(|c| c.symbol()).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for LexGroup {
    type Err = Error;

    /// `Z`, `Q`, `ZxZ`, `Z lex Q`, … ; `trivial` or `0` for the zero group.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("trivial") || t == "0" {
            return Ok(Self::trivial());
        }
        let normalized = t.replace("lex", "x").replace(['×', '*'], "x");
        let coords = normalized
            .split('x')
            .map(|p| match p.trim() {
                "Z" | "ℤ" => Ok(Coord::Integer),
                "Q" | "ℚ" => Ok(Coord::Rational),
                other => Err(Error::Invalid(format!("unknown factor {other:?} in group {s:?}"))),
            })
            .collect::<Result<_>>()?;
        Self::new(coords)
    }
}

/// A lexicographic group with a strong unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitalLGroup {
    group: LexGroup,
    unit: LexElem,
}

impl UnitalLGroup {
    /// In a lexicographic product every element is below some multiple of
    /// `u` exactly when the leading coordinate of `u` is positive.
    pub fn new(group: LexGroup, unit: LexElem) -> Result<Self> {
        group.check(&unit).map_err(|e| Error::InvalidUnit(e.to_string()))?;
        if group.rank() == 0 {
            return Err(Error::InvalidUnit("the trivial group has no positive element".into()));
        }
        if !unit.0[0].is_positive() {
            return Err(Error::InvalidUnit(format!(
                "{unit} is not a strong unit: its leading coordinate must be positive"
            )));
        }
        Ok(Self { group, unit })
    }

    pub fn group(&self) -> &LexGroup {
        &self.group
    }

    pub fn unit(&self) -> &LexElem {
        &self.unit
    }
}

/// The convex subgroup `C_k` of a rank-`d` lexicographic group whose first
/// `d − k` coordinates vanish. `C_0 = 0` and `C_d` is the whole group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LIdealDescriptor {
    pub rank: usize,
    pub k: usize,
}

impl LIdealDescriptor {
    pub fn contains(&self, x: &LexElem) -> bool {
        x.0[..self.rank - self.k].iter().all(Zero::is_zero)
    }

    pub fn is_proper(&self) -> bool {
        self.k < self.rank
    }

    pub fn describe(&self) -> String {
        match (self.k, self.rank - self.k) {
            (0, _) => "0".into(),
            (_, 0) => "G".into(),
            (_, z) => format!("x1..x{z}=0"),
        }
    }
}

/// The convex subgroups of a lexicographic product of archimedean factors,
/// ascending: `C_0 ⊂ C_1 ⊂ … ⊂ C_d`.
pub fn convex_subgroups(g: &LexGroup) -> Vec<LIdealDescriptor> {
    (0..=g.rank()).map(|k| LIdealDescriptor { rank: g.rank(), k }).collect()
}

/// Prime ℓ-ideals of a totally ordered group are its proper convex
/// subgroups, so the spectrum is a chain of `rank` points.
pub fn lgroup_prime_spectrum(g: &LexGroup) -> Result<SpecPoset> {
    if g.rank() > 3 {
        return Err(Error::Unsupported(format!("ℓ-group spectra of rank {} (at most 3)", g.rank())));
    }
    let primes: Vec<LIdealDescriptor> = convex_subgroups(g).into_iter().filter(|c| c.is_proper()).collect();
    let labels = primes.iter().map(LIdealDescriptor::describe).collect();
    SpecPoset::from_relation(labels, |i, j| primes[i].k <= primes[j].k)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
