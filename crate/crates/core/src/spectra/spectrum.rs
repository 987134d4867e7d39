use serde::{Deserialize, Serialize};

use super::ideals::{enumerate_ideals, is_maximal, is_prime, require_ideal, IdealSet};
use crate::bits::{self, Mask};
use crate::mv::{FiniteMvAlgebra, MvHom};
use crate::poset::SpecPoset;
use crate::{Error, Result};

/// The prime ideals of a finite algebra, ascending by mask, with the
/// inclusion order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub primes: Vec<IdealSet>,
    pub poset: SpecPoset,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn index_of(&self, p: IdealSet) -> Option<usize> {
        self.primes.iter().position(|&q| q == p)
    }

    pub fn points(&self, mask: Mask) -> Vec<IdealSet> {
        bits::iter(mask).map(|i| self.primes[i]).collect()
    }
}

pub fn ideal_label(a: &FiniteMvAlgebra, i: IdealSet) -> String {
    let names: Vec<String> = i.members().into_iter().map(|x| a.label(x)).collect();
    format!("{{{}}}", names.join(","))
}

pub fn spec(a: &FiniteMvAlgebra) -> Result<Spectrum> {
    let mut primes = Vec::new();
    for i in enumerate_ideals(a)? {
        if is_prime(a, i)? {
            primes.push(i);
        }
    }
    let labels = primes.iter().map(|&p| ideal_label(a, p)).collect();
    let poset = SpecPoset::from_relation(labels, |i, j| primes[i].is_subset(primes[j]))?;
    Ok(Spectrum { primes, poset })
}

/// The maximal ideals, ascending by mask. These are exactly the maximal
/// points of the spectrum; both descriptions are computed and compared.
pub fn maximals(a: &FiniteMvAlgebra) -> Result<Vec<IdealSet>> {
    let s = spec(a)?;
    let by_order = s.points(s.poset.maximal());
    let mut by_definition = Vec::new();
    for i in enumerate_ideals(a)? {
        if is_maximal(a, i)? {
            by_definition.push(i);
        }
    }
    if by_order != by_definition {
        return Err(Error::Inconsistent(
            "maximal points of the spectrum differ from the maximal ideals".into(),
        ));
    }
    Ok(by_definition)
}

/// `V(I)`: the primes containing `I`.
pub fn v(a: &FiniteMvAlgebra, s: &Spectrum, i: IdealSet) -> Result<Mask> {
    require_ideal(a, i)?;
    Ok(bits::from_iter(
        (0..s.len()).filter(|&k| i.is_subset(s.primes[k])),
    ))
}

/// `O(x)`: the primes not containing `x`.
pub fn o(a: &FiniteMvAlgebra, s: &Spectrum, x: usize) -> Result<Mask> {
    a.check_element(x)?;
    Ok(bits::from_iter((0..s.len()).filter(|&k| !s.primes[k].contains(x))))
}

/// The intersection of the maximal ideals. For the trivial algebra, with no
/// maximal ideals, this is the whole carrier `{0}`.
pub fn radical(a: &FiniteMvAlgebra) -> Result<IdealSet> {
    Ok(maximals(a)?
        .into_iter()
        .fold(IdealSet::whole(a), IdealSet::intersect))
}

/// `h⁻¹(P)` for a prime `P` of the target.
pub fn pullback_prime(h: &MvHom, p: IdealSet) -> Result<IdealSet> {
    if !is_prime(h.target(), p)? {
        return Err(Error::NotPrime(p.members()));
    }
    let q = IdealSet::from_mask(h.preimage(p.mask()));
    if !is_prime(h.source(), q)? {
        return Err(Error::Inconsistent(format!(
            "preimage {:?} of a prime is not prime",
            q.members()
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::mv::{boolean, lukasiewicz, product, quotient, trivial};

    #[test]
    fn small_spectra() {
        let l2 = lukasiewicz(2).unwrap();
        let s = spec(&l2).unwrap();
        assert_eq!(s.primes, vec![IdealSet::zero()]);
        let sq = product(&l2, &l2).unwrap();
        let s = spec(&sq).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.poset.is_order_isomorphic(&SpecPoset::antichain(2)));
        assert_eq!(spec(&boolean()).unwrap().len(), 1);
        assert!(spec(&trivial()).unwrap().is_empty());
    }

    #[test]
    fn basic_sets() {
        let l2 = lukasiewicz(2).unwrap();
        let sq = product(&l2, &l2).unwrap();
        let s = spec(&sq).unwrap();
        assert_eq!(v(&sq, &s, IdealSet::zero()).unwrap(), s.poset.all());
        assert_eq!(o(&sq, &s, 8).unwrap(), s.poset.all());
        // (1/2, 0) lies in Ł_2 × {0} only.
        let open = o(&sq, &s, 3).unwrap();
        assert_eq!(s.points(open), vec![IdealSet::from_members([0, 1, 2])]);
    }

    #[test]
    fn radicals() {
        let l2 = lukasiewicz(2).unwrap();
        assert_eq!(radical(&product(&l2, &l2).unwrap()).unwrap(), IdealSet::zero());
        assert_eq!(radical(&boolean()).unwrap(), IdealSet::zero());
        assert_eq!(radical(&lukasiewicz(4).unwrap()).unwrap(), IdealSet::zero());
    }

    #[test]
    fn pullbacks() {
        let l2 = Arc::new(lukasiewicz(2).unwrap());
        let sq = Arc::new(product(&l2, &l2).unwrap());
        let proj = MvHom::checked(sq.clone(), l2.clone(), sq.elements().map(|k| k / 3).collect()).unwrap();
        assert_eq!(pullback_prime(&proj, IdealSet::zero()).unwrap().members(), vec![0, 1, 2]);
        assert!(matches!(pullback_prime(&proj, IdealSet::whole(&l2)), Err(Error::NotPrime(_))));

        let j = IdealSet::from_members([0, 3, 6]);
        let (q, pi) = quotient(&sq, &j).unwrap();
        for p in spec(&q).unwrap().primes {
            assert!(j.is_subset(pullback_prime(&pi, p).unwrap()));
        }
    }
}
