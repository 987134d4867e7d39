use super::{ord, FiniteMvAlgebra, Order, RawTables};
use crate::iso::{self, Signature};
use crate::{Error, Result};

/// Largest carrier for which [`canonical_tables`] enumerates permutations.
pub const CANONICAL_LIMIT: usize = 9;

fn invariants(a: &FiniteMvAlgebra) -> Vec<u64> {
    a.elements()
        .map(|x| {
            let o = match ord(a, x).expect("element in range") {
                Order::Finite(n) => n as u64,
                Order::Infinite => 0,
            };
            let below = a.below(x).count_ones() as u64;
            let above = a.elements().filter(|&y| a.le(x, y)).count() as u64;
            o << 16 | below << 8 | above
        })
        .collect()
}

fn signature<'a>(a: &'a FiniteMvAlgebra, inv: Vec<u64>) -> Signature<'a> {
    Signature {
        size: a.size(),
        binary: vec![a.oplus_table()],
        unary: vec![a.neg_table()],
        constants: vec![0],
        invariants: inv,
    }
}

/// An isomorphism `A → B` as an index map, if one exists.
pub fn find_isomorphism(a: &FiniteMvAlgebra, b: &FiniteMvAlgebra) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let sa = signature(a, invariants(a));
    let sb = signature(b, invariants(b));
    let f = iso::find_isomorphism(&sa, &sb)?;
    debug_assert!(iso::is_isomorphism(&sa, &sb, &f));
    Some(f)
}

pub fn is_isomorphic(a: &FiniteMvAlgebra, b: &FiniteMvAlgebra) -> bool {
    find_isomorphism(a, b).is_some()
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        out(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// The lexicographically least `(⊕, ¬)` table over all relabellings that
/// keep 0 at index 0 and send 1 to the last index. Two algebras are
/// isomorphic iff their canonical tables coincide. Labels are dropped.
pub fn canonical_tables(a: &FiniteMvAlgebra) -> Result<RawTables> {
    let n = a.size();
    if n > CANONICAL_LIMIT {
        return Err(Error::Unsupported(format!(
            "canonical form is limited to {CANONICAL_LIMIT} elements"
        )));
    }
    if n == 1 {
        let mut t = a.to_tables();
        t.labels = None;
        return Ok(t);
    }
    let top = a.top();
    let mut middle: Vec<usize> = a.elements().filter(|&x| x != 0 && x != top).collect();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut perm = vec![0; n];
    permutations(&mut middle, 0, &mut |mid| {
        // perm[new] = old
        perm[0] = 0;
        perm[n - 1] = top;
        perm[1..n - 1].copy_from_slice(mid);
        let mut inverse = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let neg: Vec<usize> = (0..n).map(|x| inverse[a.not(perm[x])]).collect();
        let oplus: Vec<usize> = (0..n * n)
            .map(|k| inverse[a.add(perm[k / n], perm[k % n])])
            .collect();
        let key = (neg, oplus);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    let (neg, oplus) = best.expect("at least one permutation");
    Ok(RawTables {
        size: n,
        oplus: oplus.chunks(n).map(<[usize]>::to_vec).collect(),
        neg,
        labels: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::{boolean, lukasiewicz, product, trivial};

    #[test]
    fn product_with_trivial() {
        let l3 = lukasiewicz(3).unwrap();
        let p = product(&trivial(), &l3).unwrap();
        assert!(is_isomorphic(&p, &l3));
    }

    #[test]
    fn chain_is_not_square() {
        let b = boolean();
        assert!(!is_isomorphic(&lukasiewicz(3).unwrap(), &product(&b, &b).unwrap()));
    }

    #[test]
    fn canonical_form_is_invariant() {
        let l2 = lukasiewicz(2).unwrap();
        let b = boolean();
        let x = product(&l2, &b).unwrap();
        let y = product(&b, &l2).unwrap();
        assert_eq!(canonical_tables(&x).unwrap(), canonical_tables(&y).unwrap());
        assert_ne!(
            canonical_tables(&x).unwrap(),
            canonical_tables(&lukasiewicz(5).unwrap()).unwrap()
        );
    }
}
