//! Decision procedures for algebra and ideal classes. Wherever a class has
//! several characterisations, each is computed and disagreement is an
//! [`Error::Inconsistent`].

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigRational, Signed};
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::functors::{Coord, LexElem, SymbolicMvAlgebra};
use crate::mv::{lukasiewicz, ord, product, quotient, FiniteMvAlgebra, MvOps};
use crate::spectra::{enumerate_ideals, is_ideal, is_maximal, is_prime, maximals, radical, spec, IdealSet};
use crate::{Error, Result};

fn inconsistent(what: &str, a: bool, b: bool) -> Error {
    Error::Inconsistent(format!("{what}: routes disagree ({a} vs {b})"))
}

fn require_ideal(a: &FiniteMvAlgebra, i: IdealSet) -> Result<()> {
    a.check_mask(i.mask())?;
    if !is_ideal(a, i.mask()) {
        return Err(Error::NotAnIdeal(i.members()));
    }
    Ok(())
}

fn quotient_of(a: &FiniteMvAlgebra, i: IdealSet) -> Result<FiniteMvAlgebra> {
    Ok(quotient(&Arc::new(a.clone()), &i)?.0)
}

/// An element `x` for which not exactly one of `ord(x)`, `ord(¬x)` is
/// finite; `None` iff the algebra is perfect by definition.
pub fn perfect_witness(a: &FiniteMvAlgebra) -> Result<Option<usize>> {
    for x in a.elements() {
        if ord(a, x)?.is_finite() == ord(a, a.not(x))?.is_finite() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Perfect: exactly one of `x`, `¬x` has finite order, for every `x`. The
/// trivial algebra is not perfect. For nontrivial algebras the verdict is
/// cross-checked against `A = Rad ∪ ¬Rad` and against "`aⁿ = 0` for some
/// `n` iff `(¬a)ᵐ ≠ 0` for all `m`".
pub fn is_perfect(a: &FiniteMvAlgebra) -> Result<bool> {
    let by_definition = perfect_witness(a)?.is_none();
    if a.is_trivial() {
        return Ok(by_definition);
    }
    let rad = radical(a)?;
    let by_radical = a.elements().all(|x| rad.contains(x) || rad.contains(a.not(x)));
    if by_radical != by_definition {
        return Err(inconsistent("perfect (radical)", by_definition, by_radical));
    }
    let nilpotent = |x: usize| bits::has(a.powers(x), 0);
    let by_powers = a.elements().all(|x| nilpotent(x) != nilpotent(a.not(x)));
    if by_powers != by_definition {
        return Err(inconsistent("perfect (powers)", by_definition, by_powers));
    }
    Ok(by_definition)
}

/// An element of `Γ(G, u)` with leading coordinate strictly between 0 and
/// `u₀`, if one exists.
fn symbolic_mixed_element(s: &SymbolicMvAlgebra) -> Option<LexElem> {
    let u0 = s.unit().coord(0);
    let q = match s.group().coords()[0] {
        Coord::Rational => u0 / BigRational::from_integer(2.into()),
        Coord::Integer => BigRational::from_integer(1.into()),
    };
    if !q.is_positive() || &q >= u0 {
        return None;
    }
    let mut x = LexElem::zero(s.rank());
    x.0[0] = q;
    Some(x)
}

/// Perfectness of a symbolic interval algebra in closed form, re-checked
/// through `ord` on a witness or on sampled elements.
pub fn is_perfect_symbolic(s: &SymbolicMvAlgebra) -> Result<bool> {
    let closed_form = s.is_perfect();
    let exactly_one = |x: &LexElem| s.ord(x).is_finite() != s.ord(&s.neg(x)).is_finite();
    let by_ord = match symbolic_mixed_element(s) {
        Some(w) => exactly_one(&w),
        None => s.sample_elements(3).iter().all(exactly_one),
    };
    if by_ord != closed_form {
        return Err(inconsistent("symbolic perfect", closed_form, by_ord));
    }
    Ok(closed_form)
}

/// `I` is perfect iff for every `a`: `aⁿ ∈ I` for some `n` exactly when
/// `(¬a)ᵐ ∉ I` for all `m`. Cross-checked against `is_perfect(A/I)`.
pub fn is_perfect_ideal(a: &FiniteMvAlgebra, i: IdealSet) -> Result<bool> {
    require_ideal(a, i)?;
    let reaches = |x: usize| a.powers(x) & i.mask() != 0;
    let by_biconditional = a.elements().all(|x| reaches(x) != reaches(a.not(x)));
    let by_quotient = is_perfect(&quotient_of(a, i)?)?;
    if by_biconditional != by_quotient {
        return Err(inconsistent("perfect ideal", by_biconditional, by_quotient));
    }
    Ok(by_biconditional)
}

/// Local: exactly one maximal ideal. For nontrivial algebras cross-checked
/// against "`ord(x) < ∞` or `ord(¬x) < ∞` for every `x`".
pub fn is_local(a: &FiniteMvAlgebra) -> Result<bool> {
    let by_maximals = maximals(a)?.len() == 1;
    if !a.is_trivial() {
        let mut by_order = true;
        for x in a.elements() {
            if !ord(a, x)?.is_finite() && !ord(a, a.not(x))?.is_finite() {
                by_order = false;
                break;
            }
        }
        if by_order != by_maximals {
            return Err(inconsistent("local", by_maximals, by_order));
        }
    }
    Ok(by_maximals)
}

/// A pair `(x, y)` with `x ⊙ y ∈ I` but no ⊙-power of either in `I`.
pub fn primary_witness(a: &FiniteMvAlgebra, i: IdealSet) -> Result<Option<(usize, usize)>> {
    require_ideal(a, i)?;
    if i.is_whole(a) {
        return Err(Error::NotProper);
    }
    let reaches = |x: usize| a.powers(x) & i.mask() != 0;
    for x in a.elements() {
        for y in a.elements() {
            if i.contains(a.prod(x, y)) && !reaches(x) && !reaches(y) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Primary: `x ⊙ y ∈ I` implies `xⁿ ∈ I` or `yⁿ ∈ I` for some `n`, with
/// powers under ⊙. Only proper ideals are accepted.
pub fn is_primary(a: &FiniteMvAlgebra, i: IdealSet) -> Result<bool> {
    Ok(primary_witness(a, i)?.is_none())
}

/// Semisimple: the radical is `{0}`.
pub fn is_semisimple(a: &FiniteMvAlgebra) -> Result<bool> {
    Ok(radical(a)? == IdealSet::zero())
}

/// Supermaximal: `A/M = {0, 1}`.
pub fn is_supermaximal(a: &FiniteMvAlgebra, m: IdealSet) -> Result<bool> {
    require_ideal(a, m)?;
    if !is_maximal(a, m)? {
        return Err(Error::NotMaximal(m.members()));
    }
    Ok(quotient_of(a, m)?.size() == 2)
}

/// `|A / Rad(A)| − 1`. The trivial algebra has rank 0.
pub fn rank(a: &FiniteMvAlgebra) -> Result<usize> {
    Ok(quotient_of(a, radical(a)?)?.size() - 1)
}

/// The rank of the chain `A/P`.
pub fn rank_of_prime(a: &FiniteMvAlgebra, p: IdealSet) -> Result<usize> {
    require_ideal(a, p)?;
    if !is_prime(a, p)? {
        return Err(Error::NotPrime(p.members()));
    }
    rank(&quotient_of(a, p)?)
}

/// The maximal ideal above a prime `P` (unique in an MV-algebra).
pub fn maximal_above(a: &FiniteMvAlgebra, p: IdealSet) -> Result<IdealSet> {
    let above: Vec<IdealSet> = maximals(a)?.into_iter().filter(|m| p.is_subset(*m)).collect();
    match above.as_slice() {
        [m] => Ok(*m),
        _ => Err(Error::Inconsistent(format!("{} maximal ideals above {:?}", above.len(), p.members()))),
    }
}

/// `A` presented as a quotient `B/I` with `B = A × Ł₂` (or `A × Ł₁` when
/// that exceeds the size guard) and `I = {0} × Ł_k`. Returns `B`, `I`.
fn presentation(a: &FiniteMvAlgebra) -> Result<(FiniteMvAlgebra, IdealSet)> {
    let factor = if a.size().saturating_mul(3) <= crate::guard::size_guard() { 2 } else { 1 };
    let f = lukasiewicz(factor)?;
    let b = product(a, &f)?;
    let i = IdealSet::from_mask(bits::from_iter(0..f.size()));
    Ok((b, i))
}

/// The primes of `B` that contain `I`.
fn v_of(b: &FiniteMvAlgebra, i: IdealSet) -> Result<Vec<IdealSet>> {
    Ok(spec(b)?.primes.into_iter().filter(|p| i.is_subset(*p)).collect())
}

/// A maximal ideal that is not supermaximal.
pub fn vc_witness(a: &FiniteMvAlgebra) -> Result<Option<IdealSet>> {
    for m in maximals(a)? {
        if !is_supermaximal(a, m)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Membership in the variety generated by the Chang algebra, three ways:
/// every maximal is supermaximal; every prime is a perfect ideal; every
/// prime above `I` is perfect for a presentation `A ≅ B/I`.
pub fn in_vc(a: &FiniteMvAlgebra) -> Result<bool> {
    let by_maximals = vc_witness(a)?.is_none();
    let mut by_primes = true;
    for p in spec(a)?.primes {
        by_primes &= is_perfect_ideal(a, p)?;
    }
    if by_primes != by_maximals {
        return Err(inconsistent("V(C) (primes)", by_maximals, by_primes));
    }
    let (b, i) = presentation(a)?;
    let mut by_presentation = true;
    for p in v_of(&b, i)? {
        by_presentation &= is_perfect_ideal(&b, p)?;
    }
    if by_presentation != by_maximals {
        return Err(inconsistent("V(C) (presentation)", by_maximals, by_presentation));
    }
    Ok(by_maximals)
}

/// Symbolic membership in `V(C)` from the chain of primes `C_k ∩ [0, u]`:
/// every prime quotient is perfect, cross-checked against the quotient by
/// the maximal prime being `{0, 1}`.
pub fn in_vc_symbolic(s: &SymbolicMvAlgebra) -> Result<bool> {
    let mut by_primes = true;
    for p in s.prime_descriptors() {
        by_primes &= is_perfect_symbolic(&s.quotient_by(p)?)?;
    }
    let top = s.prime_descriptors().into_iter().max_by_key(|p| p.k);
    let by_maximal = match top {
        None => true,
        Some(m) => {
            let q = s.quotient_by(m)?;
            q.group().coords() == [Coord::Integer] && q.materialize()?.size() == 2
        }
    };
    if by_primes != by_maximal {
        return Err(inconsistent("symbolic V(C)", by_maximal, by_primes));
    }
    Ok(by_primes)
}

/// A maximal ideal whose rank does not divide `m`.
pub fn vkm_witness(a: &FiniteMvAlgebra, m: usize) -> Result<Option<IdealSet>> {
    for mx in maximals(a)? {
        if !m.is_multiple_of(rank_of_prime(a, mx)?) {
            return Ok(Some(mx));
        }
    }
    Ok(None)
}

/// Membership in `V(K_m)`: every prime has rank dividing `m`, cross-checked
/// against the maximal ideals alone and against the primes above `I` in a
/// presentation `A ≅ B/I`.
pub fn in_vkm(a: &FiniteMvAlgebra, m: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::Invalid("m must be at least 1".into()));
    }
    let mut by_primes = true;
    for p in spec(a)?.primes {
        by_primes &= m.is_multiple_of(rank_of_prime(a, p)?);
    }
    let by_maximals = vkm_witness(a, m)?.is_none();
    if by_primes != by_maximals {
        return Err(inconsistent("V(K_m) (maximals)", by_primes, by_maximals));
    }
    let (b, i) = presentation(a)?;
    let mut by_presentation = true;
    for p in v_of(&b, i)? {
        by_presentation &= m.is_multiple_of(rank_of_prime(&b, p)?);
    }
    if by_presentation != by_primes {
        return Err(inconsistent("V(K_m) (presentation)", by_primes, by_presentation));
    }
    Ok(by_primes)
}

/// The three conditions on `C = V(I)` that are claimed equivalent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalProfile {
    pub quotient_local: bool,
    pub one_closed_point: bool,
    pub intersection_primary: bool,
}

impl LocalProfile {
    pub fn agree(&self) -> bool {
        self.quotient_local == self.one_closed_point && self.one_closed_point == self.intersection_primary
    }
}

/// Evaluates each condition independently. `∩V(I)` of the whole algebra is
/// the whole algebra, which is never primary.
pub fn local_spectrum_profile(a: &FiniteMvAlgebra, i: IdealSet) -> Result<LocalProfile> {
    require_ideal(a, i)?;
    let s = spec(a)?;
    let vi: Vec<usize> = (0..s.len()).filter(|&k| i.is_subset(s.primes[k])).collect();
    let closed = s.poset.restrict(bits::from_iter(vi.iter().copied())).maximal();
    let cap = vi.iter().fold(IdealSet::whole(a), |acc, &k| acc.intersect(s.primes[k]));
    let intersection_primary = !cap.is_whole(a) && is_primary(a, cap)?;
    Ok(LocalProfile {
        quotient_local: is_local(&quotient_of(a, i)?)?,
        one_closed_point: closed.count_ones() == 1,
        intersection_primary,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// An element for which `ord(x)` and `ord(¬x)` are both finite or both
    /// infinite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<usize>,
    /// Two distinct maximal ideals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local: Option<[Vec<usize>; 2]>,
    /// A nonzero element of the radical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semisimple: Option<usize>,
    /// A maximal ideal that is not supermaximal.
    #[serde(rename = "inVC", skip_serializing_if = "Option::is_none")]
    pub in_vc: Option<Vec<usize>>,
    /// Per `m`, a maximal ideal whose rank does not divide `m`.
    #[serde(rename = "inVK", skip_serializing_if = "BTreeMap::is_empty")]
    pub in_vk: BTreeMap<usize, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub perfect: bool,
    pub local: bool,
    pub semisimple: bool,
    pub rank: usize,
    #[serde(rename = "inVC")]
    pub in_vc: bool,
    #[serde(rename = "inVK")]
    pub in_vk: BTreeMap<usize, bool>,
    pub witnesses: Witnesses,
}

pub fn classify(a: &FiniteMvAlgebra, ms: &[usize]) -> Result<ClassificationReport> {
    let mut w = Witnesses { perfect: perfect_witness(a)?, ..Witnesses::default() };
    let perfect = is_perfect(a)?;
    let local = is_local(a)?;
    if !local {
        let mx = maximals(a)?;
        if mx.len() >= 2 {
            w.local = Some([mx[0].members(), mx[1].members()]);
        }
    }
    let semisimple = is_semisimple(a)?;
    let rad = radical(a)?;
    w.semisimple = rad.members().into_iter().find(|&x| x != 0);
    let in_vc = in_vc(a)?;
    w.in_vc = vc_witness(a)?.map(IdealSet::members);
    let mut in_vk = BTreeMap::new();
    for &m in ms {
        in_vk.insert(m, in_vkm(a, m)?);
        if let Some(mx) = vkm_witness(a, m)? {
            w.in_vk.insert(m, mx.members());
        }
    }
    Ok(ClassificationReport { perfect, local, semisimple, rank: rank(a)?, in_vc, in_vk, witnesses: w })
}

/// Every ideal of `a` paired with its perfectness, for exhaustive checks.
pub fn perfect_ideals(a: &FiniteMvAlgebra) -> Result<Vec<(IdealSet, bool)>> {
    enumerate_ideals(a)?
        .into_iter()
        .filter(|i| !i.is_whole(a))
        .map(|i| Ok((i, is_perfect_ideal(a, i)?)))
        .collect()
}

/// The rank of a symbolic algebra: its number of radical classes minus one.
pub fn rank_symbolic(s: &SymbolicMvAlgebra) -> Result<usize> {
    s.rank_value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::{chang, komori};
    use crate::mv::{boolean, trivial};

    fn l(m: usize) -> FiniteMvAlgebra {
        lukasiewicz(m).unwrap()
    }

    fn ideal(v: &[usize]) -> IdealSet {
        IdealSet::from_members(v.iter().copied())
    }

    #[test]
    fn perfect_examples() {
        assert!(!is_perfect(&l(2)).unwrap());
        assert!(is_perfect(&boolean()).unwrap());
        assert!(!is_perfect(&trivial()).unwrap());
        assert!(is_perfect_symbolic(&chang()).unwrap());
        assert!(!is_perfect_symbolic(&komori(3).unwrap()).unwrap());
    }

    #[test]
    fn perfect_ideal_examples() {
        assert!(is_perfect_ideal(&boolean(), IdealSet::zero()).unwrap());
        let sq = product(&l(2), &l(2)).unwrap();
        // Ł₂ × {0} is indices 0, 3, 6.
        assert!(!is_perfect_ideal(&sq, ideal(&[0, 3, 6])).unwrap());
        let b2 = product(&boolean(), &boolean()).unwrap();
        assert!(is_perfect_ideal(&b2, ideal(&[0, 2])).unwrap());
        assert!(matches!(is_perfect_ideal(&b2, ideal(&[1])), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn local_primary_semisimple() {
        assert!(is_local(&l(4)).unwrap());
        let sq = product(&l(2), &l(2)).unwrap();
        assert!(!is_local(&sq).unwrap());
        assert!(is_local(&boolean()).unwrap());
        assert!(is_primary(&l(4), IdealSet::zero()).unwrap());
        // (1,0) ⊙ (0,1) = (0,0) with indices 6 and 2.
        assert_eq!(primary_witness(&sq, IdealSet::zero()).unwrap().map(|(x, y)| sq.prod(x, y)), Some(0));
        assert!(!is_primary(&sq, IdealSet::zero()).unwrap());
        assert!(matches!(is_primary(&l(2), IdealSet::whole(&l(2))), Err(Error::NotProper)));
        assert!(is_semisimple(&l(5)).unwrap());
        assert!(is_semisimple(&boolean()).unwrap());
    }

    #[test]
    fn supermaximal_and_rank() {
        assert!(is_supermaximal(&boolean(), IdealSet::zero()).unwrap());
        assert!(!is_supermaximal(&l(2), IdealSet::zero()).unwrap());
        let sq = product(&l(2), &l(2)).unwrap();
        assert!(!is_supermaximal(&sq, ideal(&[0, 3, 6])).unwrap());
        assert!(matches!(is_supermaximal(&sq, IdealSet::zero()), Err(Error::NotMaximal(_))));
        assert_eq!(rank(&boolean()).unwrap(), 1);
        assert_eq!(rank(&l(3)).unwrap(), 3);
        assert_eq!(rank(&trivial()).unwrap(), 0);
        assert_eq!(rank_symbolic(&komori(2).unwrap()).unwrap(), 2);
        assert_eq!(rank_of_prime(&sq, ideal(&[0, 3, 6])).unwrap(), 2);
    }

    #[test]
    fn varieties() {
        let b2 = product(&boolean(), &boolean()).unwrap();
        assert!(in_vc(&b2).unwrap());
        assert!(!in_vc(&l(2)).unwrap());
        assert!(in_vc_symbolic(&chang()).unwrap());
        assert!(!in_vc_symbolic(&komori(2).unwrap()).unwrap());
        assert!(in_vkm(&l(2), 4).unwrap());
        assert!(!in_vkm(&l(3), 4).unwrap());
        for m in 1..=6 {
            assert!(in_vkm(&boolean(), m).unwrap());
        }
        // With the unshifted count |A/Rad| a chain would never lie in the
        // variety of its own Komori algebra.
        for d in 1..=6 {
            assert!(in_vkm(&l(d), d).unwrap());
            assert_eq!(quotient_of(&l(d), radical(&l(d)).unwrap()).unwrap().size() % d, 1 % d);
        }
    }

    #[test]
    fn local_profiles() {
        let all = |p: LocalProfile| p.quotient_local && p.one_closed_point && p.intersection_primary;
        let none = |p: LocalProfile| !p.quotient_local && !p.one_closed_point && !p.intersection_primary;
        assert!(all(local_spectrum_profile(&l(4), IdealSet::zero()).unwrap()));
        let sq = product(&l(2), &l(2)).unwrap();
        assert!(none(local_spectrum_profile(&sq, IdealSet::zero()).unwrap()));
        assert!(all(local_spectrum_profile(&boolean(), IdealSet::zero()).unwrap()));
    }

    #[test]
    fn report_witnesses_reverify() {
        let sq = product(&l(2), &l(2)).unwrap();
        let r = classify(&sq, &[2, 3]).unwrap();
        assert!(!r.perfect && !r.local && r.semisimple && !r.in_vc);
        assert_eq!(r.rank, 8);
        let x = r.witnesses.perfect.unwrap();
        assert_eq!(ord(&sq, x).unwrap().is_finite(), ord(&sq, sq.not(x)).unwrap().is_finite());
        let m = IdealSet::from_members(r.witnesses.in_vc.clone().unwrap());
        assert!(!is_supermaximal(&sq, m).unwrap());
        assert!(r.in_vk[&2]);
        assert!(!r.in_vk[&3]);
        let m = IdealSet::from_members(r.witnesses.in_vk[&3].clone());
        assert_ne!(3 % rank_of_prime(&sq, m).unwrap(), 0);
        let json = serde_json::to_value(&r).unwrap();
        assert!(json.get("inVC").is_some() && json["inVK"].get("3").is_some());
    }
}
