use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::guard;
use crate::iso::{self, Signature};
use crate::{Error, Result};

/// Join and meet tables as they appear on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeTables {
    pub size: usize,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A finite bounded distributive lattice given by its join and meet tables.
/// The order is derived: `x ≤ y ⟺ x ∨ y = y`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteDistLattice {
    size: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
    below: Vec<Mask>,
}

impl fmt::Debug for FiniteDistLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteDistLattice")
            .field("size", &self.size)
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

fn bad(msg: String) -> Error {
    Error::NotADistributiveLattice(msg)
}

impl FiniteDistLattice {
    pub fn from_tables(t: &LatticeTables) -> Result<Self> {
        let n = t.size;
        if n == 0 {
            return Err(Error::Malformed("size must be positive".into()));
        }
        guard::check_size(n)?;
        for (name, table) in [("join", &t.join), ("meet", &t.meet)] {
            if table.len() != n || table.iter().any(|r| r.len() != n) {
                return Err(Error::Malformed(format!("{name} table is not {n}×{n}")));
            }
            if table.iter().flatten().any(|&v| v >= n) {
                return Err(Error::Malformed(format!("{name} table has an entry out of range")));
            }
        }
        if let Some(l) = &t.labels {
            if l.len() != n {
                return Err(Error::Malformed(format!("{} labels for {n} elements", l.len())));
            }
        }
        let join: Vec<usize> = t.join.iter().flatten().copied().collect();
        let meet: Vec<usize> = t.meet.iter().flatten().copied().collect();
        Self::build(n, join, meet, t.labels.clone())
    }

    /// The lattice of a finite order given by `le`, which must have all
    /// binary joins and meets.
    pub fn from_order(n: usize, le: impl Fn(usize, usize) -> bool, labels: Option<Vec<String>>) -> Result<Self> {
        guard::check_size(n)?;
        let bound = |x: usize, y: usize, upper: bool| -> Result<usize> {
            let cands: Vec<usize> = (0..n)
                .filter(|&z| if upper { le(x, z) && le(y, z) } else { le(z, x) && le(z, y) })
                .collect();
            cands
                .iter()
                .copied()
                .find(|&z| cands.iter().all(|&w| if upper { le(z, w) } else { le(w, z) }))
                .ok_or_else(|| bad(format!("{x} and {y} have no {}", if upper { "join" } else { "meet" })))
        };
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = bound(x, y, true)?;
                meet[x * n + y] = bound(x, y, false)?;
            }
        }
        Self::build(n, join, meet, labels)
    }

    /// The chain `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Result<Self> {
        Self::from_order(n, |x, y| x <= y, None)
    }

    /// The lattice of all subsets of an `k`-element set, indexed by mask.
    pub fn boolean(k: usize) -> Result<Self> {
        Self::from_order(1 << k, |x, y| x & !y == 0, None)
    }

    fn build(n: usize, join: Vec<usize>, meet: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        let j = |x: usize, y: usize| join[x * n + y];
        let m = |x: usize, y: usize| meet[x * n + y];
        for x in 0..n {
            if j(x, x) != x || m(x, x) != x {
                return Err(bad(format!("{x} is not idempotent")));
            }
            for y in 0..n {
                if j(x, y) != j(y, x) || m(x, y) != m(y, x) {
                    return Err(bad(format!("operations do not commute at ({x}, {y})")));
                }
                if j(x, m(x, y)) != x || m(x, j(x, y)) != x {
                    return Err(bad(format!("absorption fails at ({x}, {y})")));
                }
                for z in 0..n {
                    if j(j(x, y), z) != j(x, j(y, z)) || m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(bad(format!("associativity fails at ({x}, {y}, {z})")));
                    }
                    if m(x, j(y, z)) != j(m(x, y), m(x, z)) {
                        return Err(bad(format!("distributivity fails at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| j(b, x) == x))
            .ok_or_else(|| bad("no bottom element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| m(t, x) == x))
            .ok_or_else(|| bad("no top element".into()))?;
        let below = (0..n)
            .map(|x| bits::from_iter((0..n).filter(|&y| j(y, x) == x)))
            .collect();
        Ok(Self { size: n, join, meet, bottom, top, labels, below })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn all(&self) -> Mask {
        bits::full(self.size)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        bits::has(self.below[y], x)
    }

    /// The principal down-set `Dx`.
    pub fn down(&self, x: usize) -> Mask {
        self.below[x]
    }

    pub fn down_closure(&self, mask: Mask) -> Mask {
        bits::iter(mask).fold(0, |m, x| m | self.below[x])
    }

    pub fn is_downset(&self, mask: Mask) -> bool {
        self.down_closure(mask) == mask
    }

    pub fn is_chain(&self) -> bool {
        self.elements().all(|x| self.elements().all(|y| self.le(x, y) || self.le(y, x)))
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn to_tables(&self) -> LatticeTables {
        let n = self.size;
        LatticeTables {
            size: n,
            join: self.join.chunks(n).map(<[usize]>::to_vec).collect(),
            meet: self.meet.chunks(n).map(<[usize]>::to_vec).collect(),
            labels: self.labels.clone(),
        }
    }

    fn signature(&self) -> Signature<'_> {
        Signature {
            size: self.size,
            binary: vec![&self.join, &self.meet],
            unary: vec![],
            constants: vec![self.bottom, self.top],
            invariants: self
                .elements()
                .map(|x| {
                    let up = self.elements().filter(|&y| self.le(x, y)).count() as u64;
                    (self.below[x].count_ones() as u64) << 8 | up
                })
                .collect(),
        }
    }
}

pub fn find_lattice_isomorphism(a: &FiniteDistLattice, b: &FiniteDistLattice) -> Option<Vec<usize>> {
    let (sa, sb) = (a.signature(), b.signature());
    let f = iso::find_isomorphism(&sa, &sb)?;
    debug_assert!(iso::is_isomorphism(&sa, &sb, &f));
    Some(f)
}

pub fn lattices_isomorphic(a: &FiniteDistLattice, b: &FiniteDistLattice) -> bool {
    find_lattice_isomorphism(a, b).is_some()
}

/// A bounded lattice homomorphism, validated on construction.
#[derive(Clone, Debug)]
pub struct LatticeHom {
    source: Arc<FiniteDistLattice>,
    target: Arc<FiniteDistLattice>,
    map: Vec<usize>,
}

impl LatticeHom {
    pub fn new(source: Arc<FiniteDistLattice>, target: Arc<FiniteDistLattice>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::ArityMismatch { expected: source.size(), found: map.len() });
        }
        if map.iter().any(|&y| y >= target.size()) {
            return Err(Error::Malformed("image outside the target".into()));
        }
        let f = |x: usize| map[x];
        if f(source.bottom()) != target.bottom() || f(source.top()) != target.top() {
            return Err(Error::NotAHomomorphism("bounds are not preserved".into()));
        }
        for x in source.elements() {
            for y in source.elements() {
                if f(source.join(x, y)) != target.join(f(x), f(y)) {
                    return Err(Error::NotAHomomorphism(format!("join not preserved at ({x}, {y})")));
                }
                if f(source.meet(x, y)) != target.meet(f(x), f(y)) {
                    return Err(Error::NotAHomomorphism(format!("meet not preserved at ({x}, {y})")));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(l: Arc<FiniteDistLattice>) -> Self {
        let map = l.elements().collect();
        Self { source: l.clone(), target: l, map }
    }

    pub fn source(&self) -> &Arc<FiniteDistLattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteDistLattice> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        bits::from_iter(self.map.iter().copied()) == self.target.all()
    }

    pub fn preimage(&self, mask: Mask) -> Mask {
        bits::from_iter(self.source.elements().filter(|&x| bits::has(mask, self.map[x])))
    }

    pub(crate) fn require_surjective(&self) -> Result<()> {
        if self.is_surjective() {
            Ok(())
        } else {
            Err(Error::NotSurjective)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_boolean() {
        let c = FiniteDistLattice::chain(3).unwrap();
        assert_eq!((c.bottom(), c.top()), (0, 2));
        assert_eq!(c.join(0, 2), 2);
        assert!(c.is_chain());
        let b = FiniteDistLattice::boolean(2).unwrap();
        assert_eq!(b.join(1, 2), 3);
        assert_eq!(b.meet(1, 2), 0);
        assert!(!b.is_chain());
    }

    #[test]
    fn diamond_is_rejected() {
        // M3: 0 < a, b, c < 1 is modular but not distributive.
        let r = FiniteDistLattice::from_order(5, |x, y| x == y || x == 0 || y == 4, None);
        assert!(matches!(r, Err(Error::NotADistributiveLattice(_))));
    }

    #[test]
    fn table_round_trip() {
        let b = FiniteDistLattice::boolean(2).unwrap();
        let again = FiniteDistLattice::from_tables(&b.to_tables()).unwrap();
        assert_eq!(again, b);
        let mut t = b.to_tables();
        t.join[1][2] = 1;
        assert!(FiniteDistLattice::from_tables(&t).is_err());
    }

    #[test]
    fn homs() {
        let c4 = Arc::new(FiniteDistLattice::chain(4).unwrap());
        let c2 = Arc::new(FiniteDistLattice::chain(2).unwrap());
        let f = LatticeHom::new(c4.clone(), c2.clone(), vec![0, 1, 1, 1]).unwrap();
        assert!(f.is_surjective());
        assert_eq!(f.preimage(0b01), 0b0001);
        assert!(LatticeHom::new(c4, c2, vec![0, 0, 1, 0]).is_err());
    }

    #[test]
    fn isomorphism() {
        let b = FiniteDistLattice::boolean(2).unwrap();
        let c = FiniteDistLattice::chain(4).unwrap();
        assert!(!lattices_isomorphic(&b, &c));
        let relabelled = FiniteDistLattice::from_order(4, |x, y| [0, 2, 1, 3][x] & ![0, 2, 1, 3][y] == 0, None).unwrap();
        assert!(lattices_isomorphic(&b, &relabelled));
    }
}
