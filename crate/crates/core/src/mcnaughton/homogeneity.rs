use num::{BigInt, BigRational, Zero};
use serde::Serialize;

use super::normal::{eval_nf, NormalForm, RatPoint};
use crate::{Error, Result};

/// Sampling parameters for the semantic local-homogeneity check.
///
/// The neighbourhood is `‖x‖∞ ≤ r` with `r = min(cap, 1/(2S + 2))`, where
/// `S` is the largest `‖a‖₁`. Inside it every piece with `b ≤ 0` is either
/// `0` or `a·x`, and every piece with `b > 0` exceeds `1/2`, so the claimed
/// identity must hold there exactly. Sample points are `r·g` with `g` on
/// `grid_steps`, which must lie in `[0, 1/max_multiplier]`.
#[derive(Clone, Debug)]
pub struct LocalSampling {
    pub radius_cap: BigRational,
    pub grid_steps: Vec<BigRational>,
    pub max_multiplier: u32,
}

impl Default for LocalSampling {
    fn default() -> Self {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        Self {
            radius_cap: q(1, 8),
            grid_steps: vec![q(0, 1), q(1, 24), q(1, 8), q(1, 4)],
            max_multiplier: 4,
        }
    }
}

/// A sampled violation of `φ(n·x) = n·φ(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneityViolation {
    pub x: Vec<String>,
    pub n: u32,
    pub phi_x: String,
    pub phi_nx: String,
}

pub fn neighbourhood_radius(phi: &NormalForm, cfg: &LocalSampling) -> BigRational {
    let s = phi.max_l1();
    let r = BigRational::new(BigInt::from(1), BigInt::from(2 * s + 2));
    r.min(cfg.radius_cap.clone())
}

/// The first sampled violation of `φ(n·x) = n·φ(x)` for `2 ≤ n ≤ max`, if
/// any. The origin is always sampled.
pub fn sample_homogeneity(phi: &NormalForm, cfg: &LocalSampling) -> Result<Option<HomogeneityViolation>> {
    let r = neighbourhood_radius(phi, cfg);
    let limit = BigRational::from_integer(cfg.max_multiplier.into()).recip();
    if cfg.grid_steps.iter().any(|g| g > &limit || g < &BigRational::zero()) {
        return Err(Error::Invalid("grid steps must lie in [0, 1/max_multiplier]".into()));
    }
    // Common denominator for r·g and all multiples.
    let d = cfg
        .grid_steps
        .iter()
        .map(|g| (&r * g).denom().clone())
        .fold(BigInt::from(1), num::integer::lcm);
    let numer = |g: &BigRational| -> BigInt { ((&r * g) * BigRational::from_integer(d.clone())).to_integer() };
    let steps: Vec<BigInt> = cfg.grid_steps.iter().map(numer).collect();
    let n = phi.arity();
    let mut idx = vec![0usize; n];
    loop {
        let k: Vec<BigInt> = idx.iter().map(|&i| steps[i].clone()).collect();
        let base = phi.eval_scaled(&k, &d)?;
        for m in 2..=cfg.max_multiplier {
            let km: Vec<BigInt> = k.iter().map(|v| v * m).collect();
            let scaled = phi.eval_scaled(&km, &d)?;
            if scaled != &base * m {
                let q = |v: &BigInt| BigRational::new(v.clone(), d.clone()).to_string();
                return Ok(Some(HomogeneityViolation {
                    x: k.iter().map(q).collect(),
                    n: m,
                    phi_x: q(&base),
                    phi_nx: q(&scaled),
                }));
            }
        }
        // Advance the odometer.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < steps.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Locally homogeneous in zero iff `φ(0) = 0`. The verdict is validated on
/// the sampled neighbourhood, and disagreement is an error.
pub fn is_locally_homogeneous(phi: &NormalForm) -> Result<bool> {
    is_locally_homogeneous_with(phi, &LocalSampling::default())
}

pub fn is_locally_homogeneous_with(phi: &NormalForm, cfg: &LocalSampling) -> Result<bool> {
    let verdict = eval_nf(phi, &RatPoint::origin(phi.arity()))?.is_zero();
    let violation = sample_homogeneity(phi, cfg)?;
    if verdict == violation.is_some() {
        return Err(Error::Inconsistent(format!(
            "φ(0) = 0 is {verdict} but sampling found {violation:?} for {phi}"
        )));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcnaughton::normal::Piece;

    #[test]
    fn examples() {
        let x_and_rho =
            NormalForm::new(1, vec![vec![Piece::new(vec![1], 0)], vec![Piece::new(vec![2], -1)]]).unwrap();
        assert!(is_locally_homogeneous(&x_and_rho).unwrap());
        let shifted = NormalForm::single(Piece::new(vec![1], 1)).unwrap();
        assert!(!is_locally_homogeneous(&shifted).unwrap());
        let v = sample_homogeneity(&shifted, &LocalSampling::default()).unwrap().unwrap();
        assert_eq!(v.x, vec!["0"]);
        let zero = NormalForm::single(Piece::new(vec![0, 0], 0)).unwrap();
        assert!(is_locally_homogeneous(&zero).unwrap());
    }

    #[test]
    fn mixed_joins() {
        // (ρ(x − y) ∨ ρ(x + 1)) ∧ (ρ(3x + 2y) ∨ ρ(−x − 2))
        let phi = NormalForm::new(
            2,
            vec![
                vec![Piece::new(vec![1, -1], 0), Piece::new(vec![1, 0], 1)],
                vec![Piece::new(vec![3, 2], 0), Piece::new(vec![-1, 0], -2)],
            ],
        )
        .unwrap();
        assert!(is_locally_homogeneous(&phi).unwrap());
    }

    #[test]
    fn grid_bound_enforced() {
        let cfg = LocalSampling { grid_steps: vec![BigRational::from_integer(1.into())], ..LocalSampling::default() };
        let phi = NormalForm::single(Piece::new(vec![1], 0)).unwrap();
        assert!(is_locally_homogeneous_with(&phi, &cfg).is_err());
    }
}
