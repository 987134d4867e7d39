//! Isomorphism search between finite structures given by operation tables.
//!
//! Backtracking over bijections with invariant pruning and forward
//! propagation through the binary operations.

/// A finite structure: binary operations as flat `n×n` tables, unary
/// operations, distinguished constants, and a per-element invariant that any
/// isomorphism must preserve.
#[derive(Clone, Debug)]
pub struct Signature<'a> {
    pub size: usize,
    pub binary: Vec<&'a [usize]>,
    pub unary: Vec<&'a [usize]>,
    pub constants: Vec<usize>,
    pub invariants: Vec<u64>,
}

impl Signature<'_> {
    fn compatible(&self, other: &Signature<'_>) -> bool {
        if self.size != other.size
            || self.binary.len() != other.binary.len()
            || self.unary.len() != other.unary.len()
            || self.constants.len() != other.constants.len()
            || self.invariants.len() != other.invariants.len()
        {
            return false;
        }
        let mut a = self.invariants.clone();
        let mut b = other.invariants.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

struct Search<'s, 'a> {
    a: &'s Signature<'a>,
    b: &'s Signature<'a>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl Search<'_, '_> {
    /// Records `x ↦ y` and everything it forces. Returns false on conflict;
    /// the caller undoes the trail either way.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match self.map[x] {
                Some(v) if v == y => continue,
                Some(_) => return false,
                None => {}
            }
            if self.used[y] || self.a.invariants[x] != self.b.invariants[y] {
                return false;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            self.trail.push(x);
            let n = self.a.size;
            for (ua, ub) in self.a.unary.iter().zip(&self.b.unary) {
                queue.push((ua[x], ub[y]));
            }
            for z in 0..n {
                let Some(w) = self.map[z] else { continue };
                for (ta, tb) in self.a.binary.iter().zip(&self.b.binary) {
                    queue.push((ta[x * n + z], tb[y * n + w]));
                    queue.push((ta[z * n + x], tb[w * n + y]));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.map[x].take().unwrap();
            self.used[y] = false;
        }
    }

    fn solve(&mut self) -> bool {
        let Some(x) = (0..self.a.size).find(|&x| self.map[x].is_none()) else {
            return true;
        };
        for y in 0..self.b.size {
            if self.used[y] || self.a.invariants[x] != self.b.invariants[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.solve() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Finds a bijection `f` from `a` to `b` preserving every operation and
/// constant, if one exists.
pub fn find_isomorphism(a: &Signature<'_>, b: &Signature<'_>) -> Option<Vec<usize>> {
    if !a.compatible(b) {
        return None;
    }
    let mut s = Search {
        a,
        b,
        map: vec![None; a.size],
        used: vec![false; b.size],
        trail: Vec::new(),
    };
    for (&ca, &cb) in a.constants.iter().zip(&b.constants) {
        if !s.assign(ca, cb) {
            return None;
        }
    }
    if s.solve() {
        Some(s.map.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// Checks that `map` is an isomorphism; used to re-verify search results.
pub fn is_isomorphism(a: &Signature<'_>, b: &Signature<'_>, map: &[usize]) -> bool {
    let n = a.size;
    if b.size != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    a.constants.iter().zip(&b.constants).all(|(&ca, &cb)| map[ca] == cb)
        && a.unary
            .iter()
            .zip(&b.unary)
            .all(|(ua, ub)| (0..n).all(|x| map[ua[x]] == ub[map[x]]))
        && a.binary.iter().zip(&b.binary).all(|(ta, tb)| {
            (0..n).all(|x| (0..n).all(|y| map[ta[x * n + y]] == tb[map[x] * n + map[y]]))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_max(n: usize) -> Vec<usize> {
        (0..n * n).map(|k| (k / n).max(k % n)).collect()
    }

    #[test]
    fn chains_are_isomorphic_to_themselves() {
        let t = chain_max(4);
        let s = Signature {
            size: 4,
            binary: vec![&t],
            unary: vec![],
            constants: vec![0],
            invariants: vec![0; 4],
        };
        assert_eq!(find_isomorphism(&s, &s), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn relabelled_chain() {
        let t = chain_max(3);
        // 0 < 2 < 1 in the relabelled copy.
        let rank = [0, 2, 1];
        let inv = [0, 2, 1];
        let u: Vec<usize> = (0..9)
            .map(|k| {
                let (x, y) = (k / 3, k % 3);
                inv[rank[x].max(rank[y])]
            })
            .collect();
        let a = Signature { size: 3, binary: vec![&t], unary: vec![], constants: vec![], invariants: vec![0; 3] };
        let b = Signature { size: 3, binary: vec![&u], unary: vec![], constants: vec![], invariants: vec![0; 3] };
        let f = find_isomorphism(&a, &b).unwrap();
        assert!(is_isomorphism(&a, &b, &f));
        assert_eq!(f, vec![0, 2, 1]);
    }

    #[test]
    fn chain_vs_square() {
        let t = chain_max(4);
        // Boolean square as bit-or.
        let u: Vec<usize> = (0..16).map(|k| (k / 4) | (k % 4)).collect();
        let a = Signature { size: 4, binary: vec![&t], unary: vec![], constants: vec![], invariants: vec![0; 4] };
        let b = Signature { size: 4, binary: vec![&u], unary: vec![], constants: vec![], invariants: vec![0; 4] };
        assert!(find_isomorphism(&a, &b).is_none());
    }
}
