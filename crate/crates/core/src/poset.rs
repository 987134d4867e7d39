//! Finite posets. A prime spectrum is a poset under inclusion; its closed
//! sets are the up-sets.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::{Error, Result};

/// A finite poset on points `0..len`. `up[i]` is the set of `j` with
/// `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecPoset {
    labels: Vec<String>,
    up: Vec<Mask>,
}

impl SpecPoset {
    pub fn new(labels: Vec<String>, up: Vec<Mask>) -> Result<Self> {
        let n = labels.len();
        if up.len() != n {
            return Err(Error::Malformed(format!("{} rows for {n} points", up.len())));
        }
        if n > bits::MAX_BITS {
            return Err(Error::SizeGuard { size: n, limit: bits::MAX_BITS });
        }
        let all = bits::full(n);
        for i in 0..n {
            if !bits::subset(up[i], all) {
                return Err(Error::Malformed(format!("row {i} names a missing point")));
            }
            if !bits::has(up[i], i) {
                return Err(Error::Invalid(format!("order is not reflexive at {i}")));
            }
            for j in bits::iter(up[i]) {
                if j != i && bits::has(up[j], i) {
                    return Err(Error::Invalid(format!("order is not antisymmetric at {i}, {j}")));
                }
                if !bits::subset(up[j], up[i]) {
                    return Err(Error::Invalid(format!("order is not transitive through {i} ≤ {j}")));
                }
            }
        }
        Ok(Self { labels, up })
    }

    pub fn from_relation(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let up = (0..n).map(|i| bits::from_iter((0..n).filter(|&j| le(i, j)))).collect();
        Self::new(labels, up)
    }

    fn numbered(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    /// `0 < 1 < … < n−1`
    pub fn chain(n: usize) -> Self {
        Self::from_relation(Self::numbered(n), |i, j| i <= j).expect("chains are posets")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relation(Self::numbered(n), |i, j| i == j).expect("antichains are posets")
    }

    pub fn empty() -> Self {
        Self { labels: vec![], up: vec![] }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn all(&self) -> Mask {
        bits::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        bits::has(self.up[i], j)
    }

    pub fn up(&self, i: usize) -> Mask {
        self.up[i]
    }

    pub fn down(&self, i: usize) -> Mask {
        bits::from_iter((0..self.len()).filter(|&j| self.le(j, i)))
    }

    pub fn up_closure(&self, mask: Mask) -> Mask {
        bits::iter(mask).fold(0, |m, i| m | self.up[i])
    }

    pub fn down_closure(&self, mask: Mask) -> Mask {
        bits::iter(mask).fold(0, |m, i| m | self.down(i))
    }

    pub fn is_upset(&self, mask: Mask) -> bool {
        self.up_closure(mask) == mask
    }

    pub fn is_downset(&self, mask: Mask) -> bool {
        self.down_closure(mask) == mask
    }

    pub fn maximal(&self) -> Mask {
        bits::from_iter((0..self.len()).filter(|&i| self.up[i] == bits::bit(i)))
    }

    pub fn minimal(&self) -> Mask {
        bits::from_iter((0..self.len()).filter(|&i| self.down(i) == bits::bit(i)))
    }

    pub fn is_chain(&self, mask: Mask) -> bool {
        let pts = bits::to_vec(mask);
        pts.iter().all(|&i| pts.iter().all(|&j| self.le(i, j) || self.le(j, i)))
    }

    /// Hasse edges `(lower, upper)` in ascending order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in bits::iter(self.up[i] & !bits::bit(i)) {
                let between = self.up[i] & self.down(j) & !bits::bit(i) & !bits::bit(j);
                if between == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All down-sets, ascending by mask. The count is capped at `limit`.
    pub fn downsets(&self, limit: usize) -> Result<Vec<Mask>> {
        let mut out = Vec::new();
        self.collect_downsets(0, 0, 0, limit, &mut out)?;
        out.sort_unstable();
        Ok(out)
    }

    // Decides points in index order: `chosen` are in, `banned` are out.
    fn collect_downsets(&self, i: usize, chosen: Mask, banned: Mask, limit: usize, out: &mut Vec<Mask>) -> Result<()> {
        if i == self.len() {
            if out.len() == limit {
                return Err(Error::SizeGuard { size: limit + 1, limit });
            }
            out.push(chosen);
            return Ok(());
        }
        if bits::has(chosen, i) || bits::has(banned, i) {
            return self.collect_downsets(i + 1, chosen, banned, limit, out);
        }
        let down = self.down(i);
        if down & banned == 0 {
            self.collect_downsets(i + 1, chosen | down, banned, limit, out)?;
        }
        self.collect_downsets(i + 1, chosen, banned | self.up[i], limit, out)
    }

    pub fn upsets(&self, limit: usize) -> Result<Vec<Mask>> {
        let all = self.all();
        let mut out: Vec<Mask> = self.downsets(limit)?.into_iter().map(|d| all & !d).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// The induced subposet on `mask`, with points renumbered ascending.
    pub fn restrict(&self, mask: Mask) -> Self {
        let pts = bits::to_vec(mask);
        let up = pts
            .iter()
            .map(|&i| bits::from_iter((0..pts.len()).filter(|&k| self.le(i, pts[k]))))
            .collect();
        Self {
            labels: pts.iter().map(|&i| self.labels[i].clone()).collect(),
            up,
        }
    }

    fn invariant(&self, i: usize) -> (u32, u32) {
        (self.up[i].count_ones(), self.down(i).count_ones())
    }

    /// An order isomorphism to `other`, as a point map, if one exists.
    pub fn order_isomorphism(&self, other: &SpecPoset) -> Option<Vec<usize>> {
        let n = self.len();
        if other.len() != n {
            return None;
        }
        let mut a: Vec<_> = (0..n).map(|i| self.invariant(i)).collect();
        let mut b: Vec<_> = (0..n).map(|i| other.invariant(i)).collect();
        let (ia, ib) = (a.clone(), b.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used: Mask = 0;
        fn go(p: &SpecPoset, q: &SpecPoset, ia: &[(u32, u32)], ib: &[(u32, u32)], i: usize, map: &mut Vec<usize>, used: &mut Mask) -> bool {
            if i == p.len() {
                return true;
            }
            for j in 0..q.len() {
                if bits::has(*used, j) || ia[i] != ib[j] {
                    continue;
                }
                let consistent = (0..i).all(|k| p.le(k, i) == q.le(map[k], j) && p.le(i, k) == q.le(j, map[k]));
                if !consistent {
                    continue;
                }
                map[i] = j;
                *used |= bits::bit(j);
                if go(p, q, ia, ib, i + 1, map, used) {
                    return true;
                }
                *used &= !bits::bit(j);
            }
            false
        }
        go(self, other, &ia, &ib, 0, &mut map, &mut used).then_some(map)
    }

    pub fn is_order_isomorphic(&self, other: &SpecPoset) -> bool {
        self.order_isomorphism(other).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_orders() {
        assert!(SpecPoset::new(vec!["a".into(), "b".into()], vec![0b11, 0b11]).is_err());
        assert!(SpecPoset::new(vec!["a".into()], vec![0]).is_err());
        // 0 ≤ 1 ≤ 2 without 0 ≤ 2.
        assert!(SpecPoset::new(vec!["0".into(), "1".into(), "2".into()], vec![0b011, 0b110, 0b100]).is_err());
    }

    #[test]
    fn downsets_of_small_posets() {
        assert_eq!(SpecPoset::chain(2).downsets(64).unwrap(), vec![0b00, 0b01, 0b11]);
        assert_eq!(SpecPoset::antichain(2).downsets(64).unwrap().len(), 4);
        assert_eq!(SpecPoset::empty().downsets(64).unwrap(), vec![0]);
        assert!(SpecPoset::antichain(7).downsets(64).is_err());
    }

    #[test]
    fn covers_and_extremes() {
        let c = SpecPoset::chain(3);
        assert_eq!(c.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(c.maximal(), 0b100);
        assert_eq!(c.minimal(), 0b001);
        assert!(c.is_chain(c.all()));
        assert!(!SpecPoset::antichain(2).is_chain(0b11));
    }

    #[test]
    fn isomorphism() {
        let v = SpecPoset::from_relation(vec!["b".into(), "t1".into(), "t2".into()], |i, j| i == j || i == 0).unwrap();
        let w = SpecPoset::from_relation(vec!["t1".into(), "t2".into(), "b".into()], |i, j| i == j || i == 2).unwrap();
        assert_eq!(v.order_isomorphism(&w), Some(vec![2, 0, 1]));
        assert!(!v.is_order_isomorphic(&SpecPoset::chain(3)));
        assert!(SpecPoset::empty().is_order_isomorphic(&SpecPoset::empty()));
    }

    #[test]
    fn restriction() {
        let c = SpecPoset::chain(3);
        assert_eq!(c.restrict(0b011), SpecPoset::chain(2));
    }
}
