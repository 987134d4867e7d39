use serde::Serialize;

use super::lgroup::{lgroup_prime_spectrum, LexGroup};
use super::symbolic::{delta, symbolic_spec};
use crate::bits;
use crate::poset::SpecPoset;
use crate::Result;

/// Both sides of the comparison `Spec_ℓ(G) ≅ Spec(Δ(G)) ∖ {M}`.
#[derive(Clone, Debug, Serialize)]
pub struct LspecReport {
    pub group: String,
    pub delta_spectrum: SpecPoset,
    pub lgroup_spectrum: SpecPoset,
    /// The unique maximal point of `Spec(Δ(G))`, if there is exactly one.
    pub closed_point: Option<String>,
    pub isomorphic: bool,
}

impl LspecReport {
    pub fn holds(&self) -> bool {
        self.closed_point.is_some() && self.isomorphic
    }
}

/// Computes `Spec(Δ(G))`, removes its unique closed point and compares the
/// remainder with the prime ℓ-ideals of `G` up to order isomorphism.
pub fn verify_lspec(g: &LexGroup) -> Result<LspecReport> {
    let lgroup_spectrum = lgroup_prime_spectrum(g)?;
    let delta_spectrum = symbolic_spec(&delta(g)?)?;
    let maximal = delta_spectrum.maximal();
    let (closed_point, isomorphic) = if maximal.count_ones() == 1 {
        let m = maximal.trailing_zeros() as usize;
        let rest = delta_spectrum.restrict(delta_spectrum.all() & !bits::bit(m));
        (Some(delta_spectrum.labels()[m].clone()), rest.is_order_isomorphic(&lgroup_spectrum))
    } else {
        (None, false)
    };
    Ok(LspecReport { group: g.to_string(), delta_spectrum, lgroup_spectrum, closed_point, isomorphic })
}
