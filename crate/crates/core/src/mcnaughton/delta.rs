use std::collections::HashMap;

use num::{BigInt, BigRational, Signed, Zero};
use serde::Serialize;

use crate::functors::{delta_m_rational, LexElem};
use crate::mv::{eval_term, MvTerm};
use crate::{Error, Result};

/// The element of `Δ(ℚ)` with Boolean part `v` and infinitesimal part
/// `x ≥ 0`: `(0, x)` for `v = 0` and `(1, −x)` for `v = 1`.
pub fn delta_point(v: bool, x: BigRational) -> Result<LexElem> {
    if x.is_negative() {
        return Err(Error::Constraint(format!("infinitesimal part {x} is negative")));
    }
    Ok(if v {
        LexElem(vec![BigRational::from_integer(1.into()), -x])
    } else {
        LexElem(vec![BigRational::zero(), x])
    })
}

/// Inverse of [`delta_point`].
pub fn split_delta(p: &LexElem) -> Result<(bool, BigRational)> {
    let s = delta_m_rational(1)?;
    let p = s.element(p.clone())?;
    Ok((!p.coord(0).is_zero(), p.coord(1).abs()))
}

/// Exact evaluation of `t` in `Δ_m(ℚ)` at the point `p`.
pub fn eval_delta_term(t: &MvTerm, p: &[LexElem], m: u64) -> Result<LexElem> {
    let s = delta_m_rational(m)?;
    let p = p.iter().map(|x| s.element(x.clone())).collect::<Result<Vec<_>>>()?;
    eval_term(&s, t, &p)
}

/// `{x ≥ 0 : a·x ≤ 0 for every listed a}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cone {
    pub inequalities: Vec<Vec<BigRational>>,
}

impl Cone {
    /// The whole positive quadrant.
    pub fn quadrant() -> Self {
        Self::default()
    }

    /// `{0}`, cut out by `x_i ≤ 0` for each coordinate.
    pub fn origin(n: usize) -> Self {
        let unit = |i: usize| (0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))).collect();
        Self { inequalities: (0..n).map(unit).collect() }
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        x.iter().all(|c| !c.is_negative())
            && self.inequalities.iter().all(|a| {
                let dot: BigRational = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum();
                !dot.is_positive()
            })
    }
}

/// `{((v₁,x₁),…,(vₙ,xₙ)) : v ∈ S and x ∈ C_v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZerosetForm1 {
    pub arity: usize,
    pub sectors: Vec<(Vec<bool>, Cone)>,
}

impl ZerosetForm1 {
    pub fn new(arity: usize, sectors: Vec<(Vec<bool>, Cone)>) -> Result<Self> {
        for (v, c) in &sectors {
            if v.len() != arity || c.inequalities.iter().any(|a| a.len() != arity) {
                return Err(Error::ArityMismatch { expected: arity, found: v.len() });
            }
        }
        Ok(Self { arity, sectors })
    }
}

pub fn form1_member(z: &ZerosetForm1, p: &[LexElem]) -> Result<bool> {
    if p.len() != z.arity {
        return Err(Error::ArityMismatch { expected: z.arity, found: p.len() });
    }
    let (v, x): (Vec<bool>, Vec<BigRational>) = p.iter().map(split_delta).collect::<Result<Vec<_>>>()?.into_iter().unzip();
    Ok(z.sectors.iter().any(|(s, c)| *s == v && c.contains(&x)))
}

/// A value of `Δ(ℚ)` as integers: Boolean part and infinitesimal part in
/// units of `1/SAMPLE_DENOMINATOR`. Sums and negations of sample values
/// stay on this lattice, so the fast kernel below is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Fast(i64, i64);

const SAMPLE_DENOMINATOR: i64 = 2;

impl Fast {
    fn oplus(self, o: Fast) -> Result<Fast> {
        let s = Fast(self.0 + o.0, self.1.checked_add(o.1).ok_or_else(|| Error::Invalid("overflow".into()))?);
        Ok(if s > Fast(1, 0) { Fast(1, 0) } else { s })
    }

    fn neg(self) -> Fast {
        Fast(1 - self.0, -self.1)
    }

    fn from_point(v: bool, x: i64) -> Fast {
        if v {
            Fast(1, -x)
        } else {
            Fast(0, x)
        }
    }

    fn to_lex(self) -> LexElem {
        LexElem(vec![
            BigRational::from_integer(self.0.into()),
            BigRational::new(self.1.into(), SAMPLE_DENOMINATOR.into()),
        ])
    }
}

/// One sampled point: Boolean parts and infinitesimal parts (in units of
/// `1/SAMPLE_DENOMINATOR`), with the index of its ray and its scale.
#[derive(Clone, Debug)]
struct Sample {
    sector: Vec<bool>,
    x: Vec<i64>,
    ray: Option<usize>,
}

/// Ray directions (integer vectors) and the positive scales applied to them.
fn sample_points(n: usize) -> Vec<Sample> {
    let directions: Vec<Vec<i64>> = match n {
        1 => vec![vec![1]],
        2 => vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![1, 2],
            vec![2, 1],
            vec![1, 3],
            vec![3, 1],
            vec![2, 3],
            vec![3, 2],
        ],
        _ => unreachable!("checked by caller"),
    };
    // Scales 1/2, 1, 2, 3 in units of 1/2.
    let scales = [1i64, 2, 4, 6];
    let mut out = Vec::new();
    for mask in 0..(1usize << n) {
        let sector: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        out.push(Sample { sector: sector.clone(), x: vec![0; n], ray: None });
        for (r, d) in directions.iter().enumerate() {
            for s in scales {
                out.push(Sample { sector: sector.clone(), x: d.iter().map(|c| c * s).collect(), ray: Some(r) });
            }
        }
    }
    out
}

/// A failure of the decomposition of a term's zero set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Form1Violation {
    pub term: String,
    pub sector: Vec<u8>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Form1Report {
    pub variables: usize,
    pub depth: usize,
    /// Distinct functions on the sample set among terms of the given depth.
    pub functions: usize,
    pub samples: usize,
    /// Functions re-evaluated symbolically through [`eval_delta_term`].
    pub cross_checked: usize,
    pub violation: Option<Form1Violation>,
}

/// Enumerates every term in `variables ≤ 2` variables of depth `≤ depth`
/// (counting `⊕` and `¬`), deduplicated by their values on the sample set,
/// and checks that on each Boolean sector the zero set is empty when the
/// Boolean part is 1, contains the sector's origin when it is 0, and is
/// constant along every sampled ray.
pub fn check_form1(variables: usize, depth: usize) -> Result<Form1Report> {
    if !(1..=2).contains(&variables) {
        return Err(Error::Unsupported("form (1) sampling supports 1 or 2 variables".into()));
    }
    let samples = sample_points(variables);
    let mut seen: HashMap<Vec<Fast>, MvTerm> = HashMap::new();
    let mut levels: Vec<Vec<(Vec<Fast>, MvTerm)>> = Vec::new();
    let mut base = Vec::new();
    let leaves = (0..variables)
        .map(|i| (MvTerm::var(i), samples.iter().map(|s| Fast::from_point(s.sector[i], s.x[i])).collect::<Vec<_>>()))
        .chain(std::iter::once((MvTerm::Zero, vec![Fast(0, 0); samples.len()])));
    for (t, f) in leaves {
        if !seen.contains_key(&f) {
            seen.insert(f.clone(), t.clone());
            base.push((f, t));
        }
    }
    levels.push(base);
    for _ in 0..depth {
        let prev = levels.last().expect("nonempty");
        let mut next = Vec::new();
        let mut push = |f: Vec<Fast>, t: MvTerm, next: &mut Vec<(Vec<Fast>, MvTerm)>| {
            if !seen.contains_key(&f) {
                seen.insert(f.clone(), t.clone());
                next.push((f, t));
            }
        };
        for (f, t) in prev {
            push(f.iter().map(|v| v.neg()).collect(), t.clone().not(), &mut next);
        }
        let earlier: Vec<&(Vec<Fast>, MvTerm)> = levels.iter().flatten().collect();
        let prev_start = earlier.len() - prev.len();
        for (i, (f, t)) in prev.iter().enumerate() {
            for (g, u) in earlier.iter().take(prev_start + i + 1).map(|e| (&e.0, &e.1)) {
                let h = f.iter().zip(g).map(|(a, b)| a.oplus(*b)).collect::<Result<Vec<_>>>()?;
                push(h, t.clone().oplus(u.clone()), &mut next);
            }
        }
        levels.push(next);
    }
    let all: Vec<&(Vec<Fast>, MvTerm)> = levels.iter().flatten().collect();
    let mut report = Form1Report {
        variables,
        depth,
        functions: all.len(),
        samples: samples.len(),
        cross_checked: 0,
        violation: None,
    };
    for (f, t) in &all {
        cross_check(t, f, &samples)?;
        report.cross_checked += 1;
        if let Some(v) = sector_violation(t, f, &samples) {
            report.violation = Some(v);
            break;
        }
    }
    Ok(report)
}

fn cross_check(t: &MvTerm, f: &[Fast], samples: &[Sample]) -> Result<()> {
    for (s, expected) in samples.iter().zip(f) {
        let p = s
            .sector
            .iter()
            .zip(&s.x)
            .map(|(&v, &x)| delta_point(v, BigRational::new(x.into(), SAMPLE_DENOMINATOR.into())))
            .collect::<Result<Vec<_>>>()?;
        if eval_delta_term(t, &p, 1)? != expected.to_lex() {
            return Err(Error::Inconsistent(format!("fast evaluation of {t} disagrees with the symbolic one")));
        }
    }
    Ok(())
}

fn sector_violation(t: &MvTerm, f: &[Fast], samples: &[Sample]) -> Option<Form1Violation> {
    let fail = |sector: &[bool], reason: String| Form1Violation {
        term: t.to_string(),
        sector: sector.iter().map(|&b| b as u8).collect(),
        reason,
    };
    let mut boolean: HashMap<&[bool], i64> = HashMap::new();
    let mut ray_zero: HashMap<(&[bool], usize), bool> = HashMap::new();
    for (s, v) in samples.iter().zip(f) {
        let key = s.sector.as_slice();
        let b = *boolean.entry(key).or_insert(v.0);
        if b != v.0 {
            return Some(fail(key, "Boolean part varies inside the sector".into()));
        }
        let zero = *v == Fast(0, 0);
        match s.ray {
            None => {
                if (b == 0) != zero {
                    return Some(fail(key, format!("Boolean part {b} but origin membership {zero}")));
                }
            }
            Some(r) => {
                let z = *ray_zero.entry((key, r)).or_insert(zero);
                if z != zero {
                    let x: Vec<String> = s.x.iter().map(|c| BigRational::new((*c).into(), 2.into()).to_string()).collect();
                    return Some(fail(key, format!("membership changes along the ray through ({})", x.join(", "))));
                }
            }
        }
    }
    None
}

/// The exact form (1) of a unary term's zero set: in one variable a cone is
/// either `{0}` or the whole ray, and sector membership is read off `x = 0`
/// and `x = 1`.
pub fn form1_of_unary(t: &MvTerm) -> Result<ZerosetForm1> {
    let mut sectors = Vec::new();
    for v in [false, true] {
        let at = |x: i64| -> Result<bool> {
            Ok(eval_delta_term(t, &[delta_point(v, BigRational::from_integer(x.into()))?], 1)?.is_zero())
        };
        if at(0)? {
            sectors.push((vec![v], if at(1)? { Cone::quadrant() } else { Cone::origin(1) }));
        }
    }
    ZerosetForm1::new(1, sectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::rational;

    fn z() -> MvTerm {
        MvTerm::var(0)
    }

    fn p(v: bool, n: i64, d: i64) -> LexElem {
        delta_point(v, rational(n, d)).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let sq = z().odot(z());
        assert!(eval_delta_term(&sq, &[p(false, 7, 3)], 1).unwrap().is_zero());
        assert!(!eval_delta_term(&sq, &[p(true, 2, 1)], 1).unwrap().is_zero());
        let taut = z().oplus(z().not());
        for pt in [p(false, 0, 1), p(false, 5, 2), p(true, 3, 1), p(true, 0, 1)] {
            assert_eq!(eval_delta_term(&taut, &[pt], 1).unwrap(), LexElem::from_ints(&[1, 0]));
        }
        assert!(eval_delta_term(&taut, &[LexElem::from_ints(&[0, -1])], 1).is_err());
        assert!(eval_delta_term(&taut, &[LexElem::from_ints(&[2, -1])], 2).is_ok());
    }

    #[test]
    fn membership_examples() {
        let zsq = ZerosetForm1::new(1, vec![(vec![false], Cone::quadrant())]).unwrap();
        assert!(form1_member(&zsq, &[LexElem::from_ints(&[0, 5])]).unwrap());
        assert!(!form1_member(&zsq, &[LexElem::from_ints(&[1, -2])]).unwrap());
        let empty = ZerosetForm1::new(1, vec![]).unwrap();
        assert!(!form1_member(&empty, &[LexElem::from_ints(&[0, 0])]).unwrap());
        assert_eq!(form1_of_unary(&z().odot(z())).unwrap(), zsq);
        for k in 0..=12 {
            for v in [false, true] {
                let pt = p(v, k, 3);
                let direct = eval_delta_term(&z().odot(z()), std::slice::from_ref(&pt), 1).unwrap().is_zero();
                assert_eq!(form1_member(&zsq, &[pt]).unwrap(), direct);
            }
        }
    }

    #[test]
    fn cones() {
        let c = Cone { inequalities: vec![vec![rational(1, 1), rational(-2, 1)]] };
        assert!(c.contains(&[rational(2, 1), rational(1, 1)]));
        assert!(!c.contains(&[rational(3, 1), rational(1, 1)]));
        assert!(Cone::origin(2).contains(&[rational(0, 1), rational(0, 1)]));
        assert!(!Cone::origin(2).contains(&[rational(0, 1), rational(1, 3)]));
    }

    #[test]
    fn shallow_terms_decompose() {
        for n in 1..=2 {
            let r = check_form1(n, 2).unwrap();
            assert!(r.violation.is_none(), "{:?}", r.violation);
            assert!(r.functions > n + 1);
        }
    }
}
