use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::guard;
use crate::mv::FiniteMvAlgebra;
use crate::{Error, Result};

/// A subset of a carrier, as a member mask. Whether it is an ideal (or
/// prime, or maximal) is decided against an algebra by the predicates in
/// this module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSet(Mask);

impl IdealSet {
    pub fn zero() -> Self {
        IdealSet(1)
    }

    pub fn whole(a: &FiniteMvAlgebra) -> Self {
        IdealSet(a.all())
    }

    pub fn from_mask(mask: Mask) -> Self {
        IdealSet(mask)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        IdealSet(bits::from_iter(members))
    }

    pub fn mask(self) -> Mask {
        self.0
    }

    pub fn members(self) -> Vec<usize> {
        bits::to_vec(self.0)
    }

    pub fn contains(self, x: usize) -> bool {
        bits::has(self.0, x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IdealSet) -> bool {
        bits::subset(self.0, other.0)
    }

    pub fn intersect(self, other: IdealSet) -> IdealSet {
        IdealSet(self.0 & other.0)
    }

    pub fn is_whole(self, a: &FiniteMvAlgebra) -> bool {
        self.0 == a.all()
    }
}

impl Serialize for IdealSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IdealSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i >= bits::MAX_BITS) {
            return Err(serde::de::Error::custom("member index out of range"));
        }
        Ok(IdealSet::from_members(v))
    }
}

/// Contains 0, closed under ⊕, and downward closed.
pub fn is_ideal(a: &FiniteMvAlgebra, mask: Mask) -> bool {
    bits::subset(mask, a.all())
        && bits::has(mask, 0)
        && bits::iter(mask).all(|x| bits::subset(a.below(x), mask))
        && bits::iter(mask).all(|x| bits::iter(mask).all(|y| bits::has(mask, a.add(x, y))))
}

pub(crate) fn require_ideal(a: &FiniteMvAlgebra, i: IdealSet) -> Result<()> {
    a.check_mask(i.mask())?;
    if is_ideal(a, i.mask()) {
        Ok(())
    } else {
        Err(Error::NotAnIdeal(i.members()))
    }
}

/// Least subset containing `S ∪ {0}` closed under ⊕ and under going down.
pub fn ideal_generated(a: &FiniteMvAlgebra, s: Mask) -> Result<IdealSet> {
    a.check_mask(s)?;
    let mut cur = s | 1;
    loop {
        let mut next = cur;
        for x in bits::iter(cur) {
            next |= a.below(x);
            for y in bits::iter(cur) {
                next |= bits::bit(a.add(x, y));
            }
        }
        if next == cur {
            return Ok(IdealSet(cur));
        }
        cur = next;
    }
}

/// The ⊕ of a family of ideals: the ideal generated by their union.
pub fn ideal_sum(a: &FiniteMvAlgebra, family: &[IdealSet]) -> Result<IdealSet> {
    for &i in family {
        require_ideal(a, i)?;
    }
    ideal_generated(a, family.iter().fold(0, |m, i| m | i.mask()))
}

/// All ideals, ascending by mask. Starting from `{0}`, every ideal `I` is
/// extended by `ideal(I ∪ {x})` for each `x ∉ I`; every ideal is reached
/// along a chain of such one-element extensions.
pub fn enumerate_ideals(a: &FiniteMvAlgebra) -> Result<Vec<IdealSet>> {
    guard::check_size(a.size())?;
    let start = ideal_generated(a, 0)?;
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for x in bits::iter(a.all() & !i.mask()) {
            let j = ideal_generated(a, i.mask() | bits::bit(x))?;
            if seen.insert(j) {
                queue.push_back(j);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Proper, and `x ∧ y ∈ P` forces `x ∈ P` or `y ∈ P`.
pub fn is_prime(a: &FiniteMvAlgebra, p: IdealSet) -> Result<bool> {
    require_ideal(a, p)?;
    if p.is_whole(a) {
        return Ok(false);
    }
    Ok(a.elements().all(|x| {
        a.elements()
            .all(|y| !p.contains(a.inf(x, y)) || p.contains(x) || p.contains(y))
    }))
}

/// Proper, and adjoining any outside element generates the whole algebra.
pub fn is_maximal(a: &FiniteMvAlgebra, m: IdealSet) -> Result<bool> {
    require_ideal(a, m)?;
    if m.is_whole(a) {
        return Ok(false);
    }
    for x in bits::iter(a.all() & !m.mask()) {
        if !ideal_generated(a, m.mask() | bits::bit(x))?.is_whole(a) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::{boolean, lukasiewicz, product};

    #[test]
    fn generated_ideals() {
        let l2 = lukasiewicz(2).unwrap();
        assert!(ideal_generated(&l2, 0b010).unwrap().is_whole(&l2));
        assert_eq!(ideal_generated(&l2, 0).unwrap(), IdealSet::zero());
        let sq = product(&l2, &l2).unwrap();
        // (1/2, 0) has index 3; Ł_2 × {0} is {0, 3, 6}.
        assert_eq!(ideal_generated(&sq, bits::bit(3)).unwrap().members(), vec![0, 3, 6]);
    }

    #[test]
    fn enumeration() {
        let l2 = lukasiewicz(2).unwrap();
        assert_eq!(enumerate_ideals(&l2).unwrap(), vec![IdealSet::zero(), IdealSet::whole(&l2)]);
        let b = boolean();
        assert_eq!(enumerate_ideals(&b).unwrap().len(), 2);
        let sq = product(&l2, &l2).unwrap();
        let ideals: Vec<Vec<usize>> = enumerate_ideals(&sq).unwrap().into_iter().map(IdealSet::members).collect();
        assert_eq!(ideals, vec![vec![0], vec![0, 1, 2], vec![0, 3, 6], (0..9).collect()]);
    }

    #[test]
    fn primality() {
        let l2 = lukasiewicz(2).unwrap();
        assert!(is_prime(&l2, IdealSet::zero()).unwrap());
        assert!(!is_prime(&l2, IdealSet::whole(&l2)).unwrap());
        let sq = product(&l2, &l2).unwrap();
        assert!(!is_prime(&sq, IdealSet::zero()).unwrap());
        assert!(is_prime(&sq, IdealSet::from_members([0, 3, 6])).unwrap());
        assert!(matches!(is_prime(&sq, IdealSet::from_members([0, 4])), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn maximality() {
        let l4 = lukasiewicz(4).unwrap();
        assert!(is_maximal(&l4, IdealSet::zero()).unwrap());
        let b = boolean();
        let b2 = product(&b, &b).unwrap();
        assert!(!is_maximal(&b2, IdealSet::zero()).unwrap());
        assert!(is_maximal(&b2, IdealSet::from_members([0, 1])).unwrap());
    }

    #[test]
    fn sums() {
        let b = boolean();
        let b2 = product(&b, &b).unwrap();
        let s = ideal_sum(&b2, &[IdealSet::from_members([0, 1]), IdealSet::from_members([0, 2])]).unwrap();
        assert!(s.is_whole(&b2));
        assert_eq!(ideal_sum(&b2, &[]).unwrap(), IdealSet::zero());
    }
}
