use std::collections::BTreeMap;

use crate::bits::{self, Mask};
use crate::lattice::{FiniteDistLattice, LatticeTables};
use crate::mv::FiniteMvAlgebra;
use crate::spectra::{ideal_generated, ideal_label, ideal_sum, spec, IdealSet};
use crate::{guard, Error, Result};

/// The Belluce lattice: the carrier modulo "lies in the same primes", with
/// the induced `∨` and `∧`. Classes are ordered by least representative.
pub fn belluce(a: &FiniteMvAlgebra) -> Result<FiniteDistLattice> {
    guard::check_size(a.size())?;
    let s = spec(a)?;
    let signature = |x: usize| -> Mask { bits::from_iter((0..s.len()).filter(|&i| s.primes[i].contains(x))) };
    let mut class_of = vec![0usize; a.size()];
    let mut reps: Vec<usize> = Vec::new();
    let mut by_sig: BTreeMap<Mask, usize> = BTreeMap::new();
    for x in a.elements() {
        let next = reps.len();
        let c = *by_sig.entry(signature(x)).or_insert(next);
        if c == next {
            reps.push(x);
        }
        class_of[x] = c;
    }
    let n = reps.len();
    let mut join = vec![vec![usize::MAX; n]; n];
    let mut meet = vec![vec![usize::MAX; n]; n];
    for x in a.elements() {
        for y in a.elements() {
            let (cx, cy) = (class_of[x], class_of[y]);
            for (table, v, name) in [(&mut join, a.sup(x, y), "join"), (&mut meet, a.inf(x, y), "meet")] {
                let cv = class_of[v];
                if table[cx][cy] == usize::MAX {
                    table[cx][cy] = cv;
                } else if table[cx][cy] != cv {
                    return Err(Error::Inconsistent(format!(
                        "induced {name} is not well defined at ({}, {})",
                        a.label(x),
                        a.label(y)
                    )));
                }
            }
        }
    }
    let labels = reps.iter().map(|&r| format!("[{}]", a.label(r))).collect();
    FiniteDistLattice::from_tables(&LatticeTables { size: n, join, meet, labels: Some(labels) })
}

/// The principal ideals of `a` as a lattice under inclusion, ordered by
/// size then mask. Joins are taken as `ideal(x ⊕ y)` and meets as
/// `ideal(x ∧ y)`; both are checked against the sum and intersection.
pub fn idc(a: &FiniteMvAlgebra) -> Result<FiniteDistLattice> {
    guard::check_size(a.size())?;
    let mut gen: BTreeMap<(usize, Mask), usize> = BTreeMap::new();
    for x in a.elements() {
        let i = ideal_generated(a, bits::bit(x))?;
        gen.entry((i.len(), i.mask())).or_insert(x);
    }
    let ideals: Vec<(IdealSet, usize)> = gen.iter().map(|(&(_, m), &g)| (IdealSet::from_mask(m), g)).collect();
    let index = |i: IdealSet| -> Result<usize> {
        ideals
            .iter()
            .position(|&(j, _)| j == i)
            .ok_or_else(|| Error::Inconsistent(format!("{} is not principal", ideal_label(a, i))))
    };
    let n = ideals.len();
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for (p, &(i, x)) in ideals.iter().enumerate() {
        for (q, &(j, y)) in ideals.iter().enumerate() {
            let by_gen = ideal_generated(a, bits::bit(a.add(x, y)))?;
            if by_gen != ideal_sum(a, &[i, j])? {
                return Err(Error::Inconsistent(format!(
                    "ideal({}) differs from the sum of the ideals they generate",
                    a.label(a.add(x, y))
                )));
            }
            let cap = i.intersect(j);
            if ideal_generated(a, bits::bit(a.inf(x, y)))? != cap {
                return Err(Error::Inconsistent(format!(
                    "ideal({}) differs from the intersection",
                    a.label(a.inf(x, y))
                )));
            }
            join[p][q] = index(by_gen)?;
            meet[p][q] = index(cap)?;
        }
    }
    let labels = ideals.iter().map(|&(i, _)| ideal_label(a, i)).collect();
    FiniteDistLattice::from_tables(&LatticeTables { size: n, join, meet, labels: Some(labels) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::lattices_isomorphic;
    use crate::mv::{boolean, lukasiewicz, product, trivial};
    use crate::spectra::compact_opens_lattice;

    #[test]
    fn small_examples() {
        let l2 = lukasiewicz(2).unwrap();
        let b = belluce(&l2).unwrap();
        assert_eq!(b.size(), 2);
        assert_eq!(b.label(1), "[1/2]");
        assert_eq!(idc(&l2).unwrap().size(), 2);
        assert_eq!(belluce(&boolean()).unwrap().size(), 2);
        assert_eq!(idc(&boolean()).unwrap().size(), 2);
        let sq = product(&l2, &l2).unwrap();
        let bs = belluce(&sq).unwrap();
        let is = idc(&sq).unwrap();
        let b2 = FiniteDistLattice::boolean(2).unwrap();
        assert!(lattices_isomorphic(&bs, &b2));
        assert!(lattices_isomorphic(&is, &b2));
        assert_eq!(belluce(&trivial()).unwrap().size(), 1);
        assert_eq!(idc(&trivial()).unwrap().size(), 1);
    }

    #[test]
    fn three_descriptions_agree() {
        let l1 = lukasiewicz(1).unwrap();
        let l3 = lukasiewicz(3).unwrap();
        let algs = [
            lukasiewicz(5).unwrap(),
            product(&l1, &l3).unwrap(),
            product(&product(&l1, &l1).unwrap(), &l1).unwrap(),
        ];
        for a in &algs {
            let b = belluce(a).unwrap();
            let i = idc(a).unwrap();
            let k = compact_opens_lattice(&spec(a).unwrap().poset).unwrap();
            assert!(lattices_isomorphic(&b, &i));
            assert!(lattices_isomorphic(&k, &i));
        }
    }
}
