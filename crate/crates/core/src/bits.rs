//! Subsets of a carrier of at most 64 elements, stored as `u64` masks.

/// Bitmask over element (or point) indices.
pub type Mask = u64;

/// Largest carrier a [`Mask`] can describe.
pub const MAX_BITS: usize = 64;

pub fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub fn has(mask: Mask, i: usize) -> bool {
    mask >> i & 1 == 1
}

#[inline]
pub fn subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Indices of the set bits, ascending.
pub fn iter(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn to_vec(mask: Mask) -> Vec<usize> {
    iter(mask).collect()
}

pub fn from_iter<I: IntoIterator<Item = usize>>(items: I) -> Mask {
    items.into_iter().fold(0, |m, i| m | bit(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_ascending() {
        assert_eq!(to_vec(0b1011_0001), vec![0, 4, 5, 7]);
        assert_eq!(to_vec(0), Vec::<usize>::new());
        assert_eq!(from_iter([3, 1, 3]), 0b1010);
    }

    #[test]
    fn full_masks() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(64), u64::MAX);
    }
}
