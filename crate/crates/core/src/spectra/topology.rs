use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::guard;
use crate::lattice::{lattices_isomorphic, FiniteDistLattice, LatticeTables};
use crate::poset::SpecPoset;
use crate::{Error, Result};

/// A topology on `0..points` given by its closed sets. Knows nothing about
/// spectra, so the sobriety and spectrality checks below do not presuppose
/// any fact about prime ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteTopology {
    points: usize,
    closed: Vec<Mask>,
}

impl FiniteTopology {
    pub fn new(points: usize, closed: Vec<Mask>) -> Result<Self> {
        if points > bits::MAX_BITS {
            return Err(Error::SizeGuard { size: points, limit: bits::MAX_BITS });
        }
        let all = bits::full(points);
        let mut closed = closed;
        closed.sort_unstable();
        closed.dedup();
        if closed.iter().any(|&c| !bits::subset(c, all)) {
            return Err(Error::Malformed("closed set names a missing point".into()));
        }
        let present = |m: Mask| closed.binary_search(&m).is_ok();
        if !present(0) || !present(all) {
            return Err(Error::Invalid("closed sets must include ∅ and the whole space".into()));
        }
        for &c in &closed {
            for &d in &closed {
                if !present(c | d) || !present(c & d) {
                    return Err(Error::Invalid(format!(
                        "closed sets are not closed under ∪ and ∩ at {:?}, {:?}",
                        bits::to_vec(c),
                        bits::to_vec(d)
                    )));
                }
            }
        }
        Ok(Self { points, closed })
    }

    pub fn discrete(points: usize) -> Result<Self> {
        if points > 20 {
            return Err(Error::Unsupported("discrete topology on more than 20 points".into()));
        }
        Self::new(points, (0..1u64 << points).collect())
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn closed_sets(&self) -> &[Mask] {
        &self.closed
    }

    pub fn open_sets(&self) -> Vec<Mask> {
        let all = bits::full(self.points);
        let mut v: Vec<Mask> = self.closed.iter().map(|&c| all & !c).collect();
        v.sort_unstable();
        v
    }

    pub fn closure(&self, mask: Mask) -> Mask {
        self.closed
            .iter()
            .filter(|&&c| bits::subset(mask, c))
            .fold(bits::full(self.points), |a, &c| a & c)
    }

    /// Nonempty and not the union of two proper closed subsets.
    pub fn is_irreducible(&self, c: Mask) -> bool {
        if c == 0 {
            return false;
        }
        let proper: Vec<Mask> = self
            .closed
            .iter()
            .copied()
            .filter(|&d| d != c && bits::subset(d, c))
            .collect();
        !proper.iter().any(|&d| proper.iter().any(|&e| d | e == c))
    }

    /// Every irreducible closed set is the closure of exactly one point.
    pub fn is_sober(&self) -> bool {
        self.closed.iter().filter(|&&c| self.is_irreducible(c)).all(|&c| {
            (0..self.points)
                .filter(|&p| self.closure(bits::bit(p)) == c)
                .count()
                == 1
        })
    }

    /// Sober, compact, and the compact opens form a basis closed under
    /// binary intersection. With finitely many open sets every open cover is
    /// already finite, so every open set is compact; the basis and
    /// intersection conditions are still checked on that family.
    pub fn is_spectral(&self) -> bool {
        let compact_opens = self.open_sets();
        let all = bits::full(self.points);
        let is_compact_open = |u: Mask| compact_opens.binary_search(&u).is_ok();
        let compact_space = is_compact_open(all);
        let basis = self.open_sets().iter().all(|&u| {
            compact_opens
                .iter()
                .filter(|&&k| bits::subset(k, u))
                .fold(0, |a, &k| a | k)
                == u
        });
        let meets = compact_opens
            .iter()
            .all(|&k| compact_opens.iter().all(|&l| is_compact_open(k & l)));
        self.is_sober() && compact_space && basis && meets
    }
}

/// Closed sets are the up-sets of the spectrum.
pub fn zariski_topology(s: &SpecPoset) -> Result<FiniteTopology> {
    FiniteTopology::new(s.len(), s.upsets(usize::MAX)?)
}

/// Every principal up-set is a chain.
pub fn is_root_system(s: &SpecPoset) -> bool {
    (0..s.len()).all(|i| s.is_chain(s.up(i)))
}

/// The lattice of compact open sets, which for a finite spectrum is the
/// lattice of down-sets under ∪ and ∩. Elements are numbered ascending by
/// mask, so ∅ is 0.
pub fn compact_opens_lattice(s: &SpecPoset) -> Result<FiniteDistLattice> {
    let opens = s.downsets(guard::size_guard())?;
    let index: HashMap<Mask, usize> = opens.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let table = |op: fn(Mask, Mask) -> Mask| -> Vec<Vec<usize>> {
        opens
            .iter()
            .map(|&a| opens.iter().map(|&b| index[&op(a, b)]).collect())
            .collect()
    };
    let labels = opens
        .iter()
        .map(|&m| {
            let names: Vec<&str> = bits::iter(m).map(|i| s.labels()[i].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    FiniteDistLattice::from_tables(&LatticeTables {
        size: opens.len(),
        join: table(|a, b| a | b),
        meet: table(|a, b| a & b),
        labels: Some(labels),
    })
}

/// Homeomorphism of finite spectral spaces, decided twice: by isomorphism of
/// the compact-open lattices and by order isomorphism of the posets.
pub fn homeomorphic(a: &SpecPoset, b: &SpecPoset) -> Result<bool> {
    let by_order = a.is_order_isomorphic(b);
    let by_lattice = lattices_isomorphic(&compact_opens_lattice(a)?, &compact_opens_lattice(b)?);
    if by_order != by_lattice {
        return Err(Error::Inconsistent(format!(
            "order isomorphism says {by_order}, compact-open lattices say {by_lattice}"
        )));
    }
    Ok(by_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee() -> SpecPoset {
        SpecPoset::from_relation(vec!["b".into(), "t1".into(), "t2".into()], |i, j| i == j || i == 0).unwrap()
    }

    #[test]
    fn closed_set_counts() {
        assert_eq!(zariski_topology(&SpecPoset::chain(1)).unwrap().closed_sets().len(), 2);
        assert_eq!(zariski_topology(&SpecPoset::chain(2)).unwrap().closed_sets(), &[0b00, 0b10, 0b11]);
        assert_eq!(zariski_topology(&SpecPoset::antichain(2)).unwrap().closed_sets().len(), 4);
    }

    #[test]
    fn indiscrete_pair_is_not_sober() {
        let t = FiniteTopology::new(2, vec![0, 0b11]).unwrap();
        assert!(!t.is_sober());
        assert!(!t.is_spectral());
    }

    #[test]
    fn discrete_is_spectral() {
        let t = FiniteTopology::discrete(3).unwrap();
        assert!(t.is_sober());
        assert!(t.is_spectral());
    }

    #[test]
    fn rejects_non_topologies() {
        assert!(FiniteTopology::new(2, vec![0b01, 0b11]).is_err());
        assert!(FiniteTopology::new(3, vec![0, 0b001, 0b010, 0b111]).is_err());
    }

    #[test]
    fn root_systems() {
        assert!(is_root_system(&SpecPoset::chain(2)));
        assert!(!is_root_system(&vee()));
    }

    #[test]
    fn compact_open_lattices() {
        assert_eq!(compact_opens_lattice(&SpecPoset::chain(1)).unwrap().size(), 2);
        let c = compact_opens_lattice(&SpecPoset::chain(2)).unwrap();
        assert!(c.size() == 3 && c.is_chain());
        let b = compact_opens_lattice(&SpecPoset::antichain(2)).unwrap();
        assert!(lattices_isomorphic(&b, &FiniteDistLattice::boolean(2).unwrap()));
    }

    #[test]
    fn homeomorphism() {
        assert!(homeomorphic(&SpecPoset::chain(1), &SpecPoset::chain(1)).unwrap());
        assert!(!homeomorphic(&SpecPoset::chain(2), &SpecPoset::antichain(2)).unwrap());
        assert!(homeomorphic(&SpecPoset::empty(), &SpecPoset::empty()).unwrap());
    }
}
