use std::fmt;

use num::{BigRational, One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::normal::{eval_nf, is_syntactically_homogeneous, NormalForm, RatPoint};
use crate::{Error, Result};

/// A closed subset of `[0, 1]` given as sorted, disjoint, non-touching
/// closed intervals; a point is an interval with equal ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Interval1D {
    parts: Vec<(BigRational, BigRational)>,
}

impl Interval1D {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Normalises an arbitrary list of closed intervals inside `[0, 1]`.
    pub fn from_parts(mut parts: Vec<(BigRational, BigRational)>) -> Result<Self> {
        for (lo, hi) in &parts {
            if lo > hi || lo < &BigRational::zero() || hi > &BigRational::one() {
                return Err(Error::Invalid(format!("[{lo}, {hi}] is not an interval inside [0, 1]")));
            }
        }
        parts.sort();
        let mut out: Vec<(BigRational, BigRational)> = Vec::new();
        for (lo, hi) in parts {
            match out.last_mut() {
                Some(last) if lo <= last.1 => {
                    if hi > last.1 {
                        last.1 = hi;
                    }
                }
                _ => out.push((lo, hi)),
            }
        }
        Ok(Self { parts: out })
    }

    pub fn parts(&self) -> &[(BigRational, BigRational)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.parts.iter().any(|(lo, hi)| lo <= x && x <= hi)
    }

    fn is_exactly(&self, lo: &BigRational, hi: &BigRational) -> bool {
        self.parts.len() == 1 && &self.parts[0].0 == lo && &self.parts[0].1 == hi
    }
}

impl fmt::Display for Interval1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|(lo, hi)| if lo == hi { format!("{{{lo}}}") } else { format!("[{lo}, {hi}]") })
            .collect();
        f.write_str(&parts.join(" ∪ "))
    }
}

impl Serialize for Interval1D {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.parts.len()))?;
        for (lo, hi) in &self.parts {
            seq.serialize_element(&[lo.to_string(), hi.to_string()])?;
        }
        seq.end()
    }
}

fn require_unary(phi: &NormalForm) -> Result<()> {
    if phi.arity() != 1 {
        return Err(Error::ArityMismatch { expected: 1, found: phi.arity() });
    }
    Ok(())
}

/// The points of `[0, 1]` where some piece crosses 0 or 1, with both ends.
pub fn breakpoints(phi: &NormalForm) -> Result<Vec<BigRational>> {
    require_unary(phi)?;
    let mut pts = vec![BigRational::zero(), BigRational::one()];
    for p in phi.pieces() {
        let a = p.a[0];
        if a == 0 {
            continue;
        }
        for level in [0, 1] {
            let x = BigRational::new((level - p.b).into(), a.into());
            if x > BigRational::zero() && x < BigRational::one() {
                pts.push(x);
            }
        }
    }
    pts.sort();
    pts.dedup();
    Ok(pts)
}

/// The exact zero set of a unary normal form. Each piece is affine between
/// consecutive breakpoints, so whether `φ` vanishes is constant on each open
/// gap; breakpoints and gap midpoints are evaluated and assembled.
pub fn zeroset_1d(phi: &NormalForm) -> Result<Interval1D> {
    let pts = breakpoints(phi)?;
    let is_zero = |x: &BigRational| -> Result<bool> { Ok(eval_nf(phi, &RatPoint::new(vec![x.clone()])?)?.is_zero()) };
    let two = BigRational::from_integer(2.into());
    let mut parts = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        if is_zero(p)? {
            parts.push((p.clone(), p.clone()));
        }
        if let Some(q) = pts.get(i + 1) {
            if is_zero(&((p + q) / &two))? {
                // The zero set is closed, so the gap's ends are zeros too.
                parts.push((p.clone(), q.clone()));
            }
        }
    }
    Interval1D::from_parts(parts)
}

/// The subsets of `[0, 1]` closed under `x ↦ λx` (for `λx ∈ [0, 1]`) that
/// arise as unary zero sets: `∅`, `{0}` and `[0, 1]`.
pub fn is_cone_1d(z: &Interval1D) -> bool {
    let zero = BigRational::zero();
    z.is_empty() || z.is_exactly(&zero, &zero) || z.is_exactly(&zero, &BigRational::one())
}

/// A point of `z` and a scale factor that leave `z` while staying in
/// `[0, 1]`, when `z` is not a cone.
pub fn cone_violation(z: &Interval1D) -> Option<(BigRational, BigRational)> {
    if is_cone_1d(z) {
        return None;
    }
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let parts = z.parts();
    for (i, (lo, hi)) in parts.iter().enumerate() {
        if hi.is_zero() {
            continue;
        }
        if !lo.is_zero() {
            // Shrink towards the origin into the gap below this part.
            return Some((hi.clone(), lo / (hi * &two)));
        }
        if hi < &one {
            // Stretch into the gap above this part.
            let target = match parts.get(i + 1) {
                Some((next, _)) => (hi + next) / &two,
                None => one.clone(),
            };
            return Some((hi.clone(), target / hi));
        }
    }
    None
}

/// If `φ` is syntactically homogeneous its zero set must be a cone; returns
/// whether that implication holds.
pub fn homogeneous_zeroset_check(phi: &NormalForm) -> Result<bool> {
    require_unary(phi)?;
    Ok(!is_syntactically_homogeneous(phi) || is_cone_1d(&zeroset_1d(phi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::rational;
    use crate::mcnaughton::normal::Piece;

    fn nf(meets: Vec<Vec<(i64, i64)>>) -> NormalForm {
        NormalForm::new(1, meets.into_iter().map(|j| j.into_iter().map(|(a, b)| Piece::new(vec![a], b)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(zeroset_1d(&nf(vec![vec![(1, 0)]])).unwrap().to_string(), "{0}");
        assert_eq!(zeroset_1d(&nf(vec![vec![(1, 0)], vec![(2, -1)]])).unwrap().to_string(), "[0, 1/2]");
        assert!(zeroset_1d(&nf(vec![vec![(0, 1)]])).unwrap().is_empty());
        assert_eq!(zeroset_1d(&nf(vec![vec![(-1, 0)]])).unwrap().to_string(), "[0, 1]");
        assert_eq!(zeroset_1d(&nf(vec![vec![(2, 0)], vec![(-1, 0)]])).unwrap().to_string(), "[0, 1]");
        // Zero only at the isolated point 1/3.
        let one_point = nf(vec![vec![(3, -1), (-3, 1)], vec![(3, -2), (-3, 2), (-1, 1)]]);
        let z = zeroset_1d(&one_point).unwrap();
        assert_eq!(z.to_string(), "{1/3}");
        let (x, l) = cone_violation(&z).unwrap();
        assert!(!z.contains(&(x * l)));
    }

    #[test]
    fn cones() {
        let zero = BigRational::zero();
        let one = BigRational::one();
        let half = rational(1, 2);
        assert!(is_cone_1d(&Interval1D::from_parts(vec![(zero.clone(), zero.clone())]).unwrap()));
        assert!(is_cone_1d(&Interval1D::from_parts(vec![(zero.clone(), one.clone())]).unwrap()));
        assert!(is_cone_1d(&Interval1D::empty()));
        let z = Interval1D::from_parts(vec![(zero.clone(), half.clone())]).unwrap();
        assert!(!is_cone_1d(&z));
        let (x, l) = cone_violation(&z).unwrap();
        assert_eq!((x.clone(), l.clone()), (half, rational(2, 1)));
        assert!(!z.contains(&(x * l)));
        assert!(homogeneous_zeroset_check(&nf(vec![vec![(1, 0)]])).unwrap());
        assert!(homogeneous_zeroset_check(&nf(vec![vec![(-1, 0)]])).unwrap());
        assert!(homogeneous_zeroset_check(&nf(vec![vec![(2, 0)], vec![(-1, 0)]])).unwrap());
    }

    #[test]
    fn normalisation_merges_touching_parts() {
        let q = |n, d| rational(n, d);
        let z = Interval1D::from_parts(vec![(q(1, 2), q(1, 1)), (q(0, 1), q(1, 2)), (q(1, 4), q(1, 4))]).unwrap();
        assert_eq!(z.to_string(), "[0, 1]");
        assert!(Interval1D::from_parts(vec![(q(1, 2), q(1, 4))]).is_err());
    }
}
