use serde::{Deserialize, Serialize};

use super::{FiniteDistLattice, LatticeHom};
use crate::bits::{self, Mask};
use crate::poset::SpecPoset;
use crate::{Error, Result};

/// A down-set of a lattice, as a member mask. Lattice ideals are the
/// nonempty join-closed down-sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DownSet(pub Mask);

impl DownSet {
    pub fn principal(l: &FiniteDistLattice, x: usize) -> Self {
        DownSet(l.down(x))
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
}

impl Serialize for DownSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DownSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i >= bits::MAX_BITS) {
            return Err(serde::de::Error::custom("member index out of range"));
        }
        Ok(DownSet(bits::from_iter(v)))
    }
}

/// Upper bound on the number of down-sets enumerated for a lattice.
const DOWNSET_LIMIT: usize = 1 << 16;

fn order_poset(l: &FiniteDistLattice) -> SpecPoset {
    SpecPoset::from_relation((0..l.size()).map(|x| l.label(x)).collect(), |x, y| l.le(x, y))
        .expect("a lattice order is a partial order")
}

pub fn is_lattice_ideal(l: &FiniteDistLattice, mask: Mask) -> bool {
    mask != 0
        && bits::subset(mask, l.all())
        && l.is_downset(mask)
        && bits::iter(mask).all(|x| bits::iter(mask).all(|y| bits::has(mask, l.join(x, y))))
}

/// All ideals, ascending by mask: the down-sets of the order are enumerated
/// and the join-closed nonempty ones kept.
pub fn lattice_ideals(l: &FiniteDistLattice) -> Result<Vec<DownSet>> {
    Ok(order_poset(l)
        .downsets(DOWNSET_LIMIT)?
        .into_iter()
        .filter(|&d| is_lattice_ideal(l, d))
        .map(DownSet)
        .collect())
}

pub fn is_lattice_prime(l: &FiniteDistLattice, p: Mask) -> bool {
    is_lattice_ideal(l, p)
        && p != l.all()
        && l.elements().all(|x| {
            l.elements()
                .all(|y| !bits::has(p, l.meet(x, y)) || bits::has(p, x) || bits::has(p, y))
        })
}

pub fn lattice_primes(l: &FiniteDistLattice) -> Result<Vec<DownSet>> {
    Ok(lattice_ideals(l)?
        .into_iter()
        .filter(|d| is_lattice_prime(l, d.0))
        .collect())
}

/// `{a ∨ b : a ∈ A, b ∈ B}`
pub fn elementwise_join(l: &FiniteDistLattice, a: Mask, b: Mask) -> Mask {
    let mut out = 0;
    for x in bits::iter(a) {
        for y in bits::iter(b) {
            out |= bits::bit(l.join(x, y));
        }
    }
    out
}

/// The least ideal containing `I ∪ J`.
pub fn ideal_join(l: &FiniteDistLattice, i: DownSet, j: DownSet) -> Result<DownSet> {
    for d in [i, j] {
        if !is_lattice_ideal(l, d.0) {
            return Err(Error::NotAnIdeal(d.members()));
        }
    }
    let mut s = l.down_closure(i.0 | j.0);
    loop {
        let next = l.down_closure(elementwise_join(l, s, s));
        if next == s {
            return Ok(DownSet(s));
        }
        s = next;
    }
}

/// Closedness by the definition: `f(a₀) ≤ f(a₁) ∨ c` implies some `x` with
/// `a₀ ≤ a₁ ∨ x` and `f(x) ≤ c`.
pub fn is_closed_epi_defn(f: &LatticeHom) -> Result<bool> {
    f.require_surjective()?;
    let (l, m) = (f.source(), f.target());
    for a0 in l.elements() {
        for a1 in l.elements() {
            for c in m.elements() {
                if !m.le(f.apply(a0), m.join(f.apply(a1), c)) {
                    continue;
                }
                let found = l
                    .elements()
                    .any(|x| l.le(a0, l.join(a1, x)) && m.le(f.apply(x), c));
                if !found {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Closedness through principal down-sets: `f⁻¹(Db ∨ Dc) ⊆ f⁻¹(Db) ∨ f⁻¹(Dc)`
/// for all `b, c`, with `∨` the elementwise join of sets.
pub fn is_closed_epi_downsets(f: &LatticeHom) -> Result<bool> {
    f.require_surjective()?;
    let (l, m) = (f.source(), f.target());
    for b in m.elements() {
        for c in m.elements() {
            let lhs = f.preimage(elementwise_join(m, m.down(b), m.down(c)));
            let rhs = elementwise_join(l, f.preimage(m.down(b)), f.preimage(m.down(c)));
            if !bits::subset(lhs, rhs) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closedness through ideals: `f⁻¹(I ∨ J) = f⁻¹(I) ∨ f⁻¹(J)` for all ideals.
pub fn is_closed_epi_ideals(f: &LatticeHom) -> Result<bool> {
    f.require_surjective()?;
    let (l, m) = (f.source(), f.target());
    let ideals = lattice_ideals(m)?;
    for &i in &ideals {
        for &j in &ideals {
            let lhs = f.preimage(ideal_join(m, i, j)?.0);
            let rhs = ideal_join(l, DownSet(f.preimage(i.0)), DownSet(f.preimage(j.0)))?;
            if lhs != rhs.0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `P ↦ f⁻¹(P)` from the primes of the target to the primes of the source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoneDual {
    pub target_primes: Vec<DownSet>,
    pub source_primes: Vec<DownSet>,
    /// `map[i]` indexes `source_primes`.
    pub map: Vec<usize>,
}

impl StoneDual {
    pub fn target_poset(&self) -> SpecPoset {
        primes_poset(&self.target_primes)
    }

    pub fn source_poset(&self) -> SpecPoset {
        primes_poset(&self.source_primes)
    }

    pub fn image(&self, points: Mask) -> Mask {
        bits::from_iter(bits::iter(points).map(|i| self.map[i]))
    }
}

fn primes_poset(primes: &[DownSet]) -> SpecPoset {
    let labels = primes.iter().map(|p| format!("{:?}", p.members())).collect();
    SpecPoset::from_relation(labels, |i, j| bits::subset(primes[i].0, primes[j].0))
        .expect("inclusion is a partial order")
}

pub fn stone_dual(f: &LatticeHom) -> Result<StoneDual> {
    let target_primes = lattice_primes(f.target())?;
    let source_primes = lattice_primes(f.source())?;
    let map = target_primes
        .iter()
        .map(|p| {
            let q = f.preimage(p.0);
            source_primes
                .iter()
                .position(|s| s.0 == q)
                .ok_or_else(|| Error::Inconsistent(format!("preimage {:?} of a prime is not prime", bits::to_vec(q))))
        })
        .collect::<Result<_>>()?;
    Ok(StoneDual { target_primes, source_primes, map })
}

/// Outcome of [`dual_preserves_closed`]. On failure, `witness_prime` is a
/// prime `P ⊇ f⁻¹(I)` that is not `f⁻¹(Q)` for any prime `Q ⊇ I`; the
/// inclusion-largest such prime is reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreservesClosed {
    pub preserves: bool,
    pub witness_prime: Option<DownSet>,
    pub witness_ideal: Option<DownSet>,
}

/// Whether the Stone dual of `f` sends closed sets to closed sets, decided
/// both by the prime-lifting criterion and by mapping every up-set of the
/// target spectrum. The two must agree.
pub fn dual_preserves_closed(f: &LatticeHom) -> Result<PreservesClosed> {
    let dual = stone_dual(f)?;
    let m = f.target();

    let mut witness: Option<(DownSet, DownSet)> = None;
    for i in lattice_ideals(m)? {
        let pre = f.preimage(i.0);
        for p in &dual.source_primes {
            if !bits::subset(pre, p.0) {
                continue;
            }
            let lifted = dual
                .target_primes
                .iter()
                .enumerate()
                .any(|(k, q)| bits::subset(i.0, q.0) && dual.source_primes[dual.map[k]] == *p);
            if lifted {
                continue;
            }
            let better = match &witness {
                None => true,
                Some((w, _)) => p.0.count_ones() > w.0.count_ones(),
            };
            if better {
                witness = Some((*p, i));
            }
        }
    }
    let criterion = witness.is_none();

    let target = dual.target_poset();
    let source = dual.source_poset();
    let topological = target
        .upsets(DOWNSET_LIMIT)?
        .into_iter()
        .all(|c| source.is_upset(dual.image(c)));

    if criterion != topological {
        return Err(Error::Inconsistent(format!(
            "prime-lifting criterion says {criterion}, closed-set images say {topological}"
        )));
    }
    Ok(PreservesClosed {
        preserves: criterion,
        witness_prime: witness.map(|w| w.0),
        witness_ideal: witness.map(|w| w.1),
    })
}

/// The three conditions characterising duals of closed epimorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureEqualities {
    /// `f⁻¹` commutes with unions and intersections of families of primes.
    pub commutes: bool,
    /// `f⁻¹` sends ideals to ideals.
    pub sends_ideals: bool,
    /// `cl g(C ∩ D) = cl g(C) ∩ cl g(D)` for all closed `C, D`.
    pub closure_equality: bool,
}

impl ClosureEqualities {
    pub fn holds(&self) -> bool {
        self.commutes && self.sends_ideals && self.closure_equality
    }
}

/// Largest prime family for which every subfamily is checked; above it only
/// pairs are.
const FAMILY_LIMIT: usize = 12;

pub fn dual_closure_equalities(f: &LatticeHom) -> Result<ClosureEqualities> {
    f.require_surjective()?;
    let dual = stone_dual(f)?;
    let (l, m) = (f.source(), f.target());
    let k = dual.target_primes.len();

    let families: Vec<Mask> = if k <= FAMILY_LIMIT {
        (1..1u64 << k).collect()
    } else {
        (0..k).flat_map(|i| (i..k).map(move |j| bits::bit(i) | bits::bit(j))).collect()
    };
    let commutes = families.iter().all(|&fam| {
        let sets: Vec<Mask> = bits::iter(fam).map(|i| dual.target_primes[i].0).collect();
        let inter = sets.iter().fold(m.all(), |a, &s| a & s);
        let union = sets.iter().fold(0, |a, &s| a | s);
        let pre_inter = sets.iter().fold(l.all(), |a, &s| a & f.preimage(s));
        let pre_union = sets.iter().fold(0, |a, &s| a | f.preimage(s));
        f.preimage(inter) == pre_inter && f.preimage(union) == pre_union
    });

    let sends_ideals = lattice_ideals(m)?
        .iter()
        .all(|i| is_lattice_ideal(l, f.preimage(i.0)));

    // Closure of a set X of source primes: the primes containing ⋂X.
    let closure = |points: Mask| -> Mask {
        let meet = bits::iter(points).fold(l.all(), |a, i| a & dual.source_primes[i].0);
        bits::from_iter(
            (0..dual.source_primes.len()).filter(|&j| bits::subset(meet, dual.source_primes[j].0)),
        )
    };
    let closed = dual.target_poset().upsets(DOWNSET_LIMIT)?;
    let closure_equality = closed.iter().all(|&c| {
        closed.iter().all(|&d| {
            closure(dual.image(c & d)) == closure(dual.image(c)) & closure(dual.image(d))
        })
    });

    Ok(ClosureEqualities { commutes, sends_ideals, closure_equality })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn chain_collapse() -> LatticeHom {
        let c4 = Arc::new(FiniteDistLattice::chain(4).unwrap());
        let c2 = Arc::new(FiniteDistLattice::chain(2).unwrap());
        LatticeHom::new(c4, c2, vec![0, 1, 1, 1]).unwrap()
    }

    /// `0 < a, b < a∨b < 1` onto the Boolean square, sending `a∨b` and `1` to the top.
    fn non_closed() -> LatticeHom {
        let l = FiniteDistLattice::from_order(
            5,
            |x, y| x == y || x == 0 || y == 4 || (y == 3 && x != 4),
            None,
        )
        .unwrap();
        let b = FiniteDistLattice::boolean(2).unwrap();
        LatticeHom::new(Arc::new(l), Arc::new(b), vec![0, 1, 2, 3, 3]).unwrap()
    }

    #[test]
    fn ideals_and_primes() {
        let c2 = FiniteDistLattice::chain(2).unwrap();
        assert_eq!(lattice_ideals(&c2).unwrap(), vec![DownSet(0b01), DownSet(0b11)]);
        assert_eq!(lattice_primes(&c2).unwrap(), vec![DownSet(0b01)]);
        let c3 = FiniteDistLattice::chain(3).unwrap();
        assert_eq!(lattice_primes(&c3).unwrap(), vec![DownSet(0b001), DownSet(0b011)]);
        let b = FiniteDistLattice::boolean(2).unwrap();
        assert_eq!(lattice_primes(&b).unwrap().len(), 2);
    }

    #[test]
    fn joins_of_ideals() {
        let b = FiniteDistLattice::boolean(2).unwrap();
        let (a1, a2) = (DownSet::principal(&b, 1), DownSet::principal(&b, 2));
        assert_eq!(ideal_join(&b, a1, a2).unwrap(), DownSet(b.all()));
        assert_eq!(ideal_join(&b, a1, DownSet(0b1)).unwrap(), a1);
        assert_eq!(ideal_join(&b, a1, a1).unwrap(), a1);
        assert!(ideal_join(&b, DownSet(0b0110), a1).is_err());
    }

    #[test]
    fn chain_collapse_is_closed_but_not_closed_preserving() {
        let f = chain_collapse();
        // a₀ = 3, a₁ = 1, c = 0: f(3) ≤ f(1) ∨ 0, but every x with f(x) = 0
        // is 0 and 1 ∨ 0 < 3.
        assert!(!is_closed_epi_defn(&f).unwrap());
        assert!(is_closed_epi_downsets(&f).unwrap());
        assert!(is_closed_epi_ideals(&f).unwrap());
        let p = dual_preserves_closed(&f).unwrap();
        assert!(!p.preserves);
        assert_eq!(p.witness_prime.unwrap().members(), vec![0, 1, 2]);
        assert_eq!(p.witness_ideal.unwrap().members(), vec![0]);
        let dual = stone_dual(&f).unwrap();
        assert_eq!(dual.source_primes[dual.map[0]].members(), vec![0]);
    }

    #[test]
    fn non_closed_witness() {
        let f = non_closed();
        assert!(!is_closed_epi_defn(&f).unwrap());
        assert!(!is_closed_epi_downsets(&f).unwrap());
        assert!(!is_closed_epi_ideals(&f).unwrap());
        assert!(!dual_closure_equalities(&f).unwrap().holds());
    }

    #[test]
    fn identity_passes_everything() {
        let l = Arc::new(FiniteDistLattice::boolean(2).unwrap());
        let id = LatticeHom::identity(l);
        assert!(is_closed_epi_defn(&id).unwrap());
        assert!(dual_preserves_closed(&id).unwrap().preserves);
        assert!(dual_closure_equalities(&id).unwrap().holds());
        let dual = stone_dual(&id).unwrap();
        assert_eq!(dual.map, vec![0, 1]);
    }

    #[test]
    fn surjectivity_is_required() {
        let c2 = Arc::new(FiniteDistLattice::chain(2).unwrap());
        let c3 = Arc::new(FiniteDistLattice::chain(3).unwrap());
        let f = LatticeHom::new(c2, c3, vec![0, 2]).unwrap();
        assert!(matches!(is_closed_epi_defn(&f), Err(Error::NotSurjective)));
        assert!(matches!(dual_closure_equalities(&f), Err(Error::NotSurjective)));
    }

    #[test]
    fn projection_dual_is_injective() {
        let b = Arc::new(FiniteDistLattice::boolean(2).unwrap());
        let c2 = Arc::new(FiniteDistLattice::chain(2).unwrap());
        let f = LatticeHom::new(b, c2, vec![0, 1, 0, 1]).unwrap();
        let dual = stone_dual(&f).unwrap();
        assert_eq!(dual.map.len(), 1);
        assert_eq!(dual.source_primes[dual.map[0]].members(), vec![0, 2]);
    }
}
