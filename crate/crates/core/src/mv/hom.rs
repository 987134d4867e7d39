use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FiniteMvAlgebra;
use crate::bits;
use crate::spectra::IdealSet;
use crate::{Error, Result};

/// A map between finite MV-algebras given by its table. Construction only
/// checks that the table has the right shape; whether it preserves the
/// operations is decided by [`validate_hom`], and [`MvHom::checked`] insists
/// on it.
#[derive(Clone, Debug)]
pub struct MvHom {
    source: Arc<FiniteMvAlgebra>,
    target: Arc<FiniteMvAlgebra>,
    map: Vec<usize>,
}

impl MvHom {
    pub fn new(source: Arc<FiniteMvAlgebra>, target: Arc<FiniteMvAlgebra>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::ArityMismatch { expected: source.size(), found: map.len() });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::Malformed(format!(
                "image {bad} is outside the target of size {}",
                target.size()
            )));
        }
        Ok(Self { source, target, map })
    }

    pub fn checked(source: Arc<FiniteMvAlgebra>, target: Arc<FiniteMvAlgebra>, map: Vec<usize>) -> Result<Self> {
        let h = Self::new(source, target, map)?;
        let check = validate_hom(&h)?;
        match check.witness {
            None => Ok(h),
            Some(w) => Err(Error::NotAHomomorphism(format!("{w:?}"))),
        }
    }

    pub fn identity(a: Arc<FiniteMvAlgebra>) -> Self {
        let map = a.elements().collect();
        Self { source: a.clone(), target: a, map }
    }

    pub fn source(&self) -> &Arc<FiniteMvAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteMvAlgebra> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        let image = bits::from_iter(self.map.iter().copied());
        image == self.target.all()
    }

    /// `h⁻¹(S)` for a subset `S` of the target.
    pub fn preimage(&self, mask: bits::Mask) -> bits::Mask {
        bits::from_iter(self.source.elements().filter(|&x| bits::has(mask, self.map[x])))
    }

    pub fn image(&self, mask: bits::Mask) -> bits::Mask {
        bits::from_iter(bits::iter(mask).map(|x| self.map[x]))
    }
}

/// The first failure found by [`validate_hom`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "law", rename_all = "lowercase")]
pub enum HomViolation {
    Zero { image: usize },
    Oplus { x: usize, y: usize },
    Neg { x: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCheck {
    pub ok: bool,
    pub witness: Option<HomViolation>,
}

pub fn validate_hom(h: &MvHom) -> Result<HomCheck> {
    let (a, b, f) = (&h.source, &h.target, &h.map);
    if f.len() != a.size() {
        return Err(Error::ArityMismatch { expected: a.size(), found: f.len() });
    }
    let fail = |w| Ok(HomCheck { ok: false, witness: Some(w) });
    if f[0] != 0 {
        return fail(HomViolation::Zero { image: f[0] });
    }
    for x in a.elements() {
        if f[a.not(x)] != b.not(f[x]) {
            return fail(HomViolation::Neg { x });
        }
    }
    for x in a.elements() {
        for y in x..a.size() {
            if f[a.add(x, y)] != b.add(f[x], f[y]) {
                return fail(HomViolation::Oplus { x, y });
            }
        }
    }
    Ok(HomCheck { ok: true, witness: None })
}

/// `ker h = h⁻¹(0)`.
pub fn kernel(h: &MvHom) -> IdealSet {
    IdealSet::from_mask(h.preimage(bits::bit(0)))
}

/// Given `h: A → B` and a surjection `π: A → A/J`, returns the unique
/// `g: A/J → B` with `g ∘ π = h` when it exists and is a homomorphism.
pub fn factor_through(h: &MvHom, pi: &MvHom) -> Result<Option<MvHom>> {
    if !Arc::ptr_eq(h.source(), pi.source()) && h.source() != pi.source() {
        return Err(Error::Invalid("maps have different sources".into()));
    }
    let q = pi.target();
    let mut g = vec![usize::MAX; q.size()];
    for x in h.source.elements() {
        let c = pi.apply(x);
        if g[c] == usize::MAX {
            g[c] = h.apply(x);
        } else if g[c] != h.apply(x) {
            return Ok(None);
        }
    }
    if g.contains(&usize::MAX) {
        return Err(Error::NotSurjective);
    }
    let g = MvHom::new(q.clone(), h.target.clone(), g)?;
    Ok(validate_hom(&g)?.ok.then_some(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::{boolean, lukasiewicz, product, quotient};

    #[test]
    fn identity_is_hom() {
        let l2 = Arc::new(lukasiewicz(2).unwrap());
        let id = MvHom::identity(l2);
        assert_eq!(validate_hom(&id).unwrap(), HomCheck { ok: true, witness: None });
    }

    #[test]
    fn collapsing_half_to_zero_breaks_negation() {
        let l2 = Arc::new(lukasiewicz(2).unwrap());
        let b = Arc::new(boolean());
        let h = MvHom::new(l2, b, vec![0, 0, 1]).unwrap();
        let check = validate_hom(&h).unwrap();
        assert!(!check.ok);
        assert_eq!(check.witness, Some(HomViolation::Neg { x: 1 }));
    }

    #[test]
    fn arity_mismatch() {
        let l2 = Arc::new(lukasiewicz(2).unwrap());
        let b = Arc::new(boolean());
        assert!(matches!(
            MvHom::new(l2, b, vec![0, 1]),
            Err(Error::ArityMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn projection_factors_through_its_kernel() {
        let l2 = Arc::new(lukasiewicz(2).unwrap());
        let sq = Arc::new(product(&l2, &l2).unwrap());
        let proj = MvHom::checked(sq.clone(), l2.clone(), sq.elements().map(|k| k / 3).collect()).unwrap();
        let ker = kernel(&proj);
        assert_eq!(ker.members(), vec![0, 1, 2]);
        let (_, pi) = quotient(&sq, &ker).unwrap();
        let g = factor_through(&proj, &pi).unwrap().expect("kernel quotient factors");
        for x in sq.elements() {
            assert_eq!(g.apply(pi.apply(x)), proj.apply(x));
        }
    }
}
