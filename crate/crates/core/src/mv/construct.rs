use std::sync::Arc;

use num::integer::gcd;

use super::{FiniteMvAlgebra, MvHom};
use crate::bits;
use crate::guard;
use crate::spectra::{is_ideal, IdealSet};
use crate::{Error, Result};

fn fraction(i: usize, m: usize) -> String {
    if i == 0 {
        return "0".into();
    }
    let g = gcd(i, m);
    if g == m {
        format!("{}", i / m)
    } else {
        format!("{}/{}", i / g, m / g)
    }
}

/// The Łukasiewicz chain `Ł_m = Γ(ℤ, m)`: elements `0, 1/m, …, 1` with
/// truncated addition. Element `i` stands for `i/m`.
pub fn lukasiewicz(m: usize) -> Result<FiniteMvAlgebra> {
    if m < 1 {
        return Err(Error::Invalid("Łukasiewicz chains need m ≥ 1".into()));
    }
    guard::check_size(m + 1)?;
    let labels = (0..=m).map(|i| fraction(i, m)).collect();
    FiniteMvAlgebra::from_fn(m + 1, |x, y| (x + y).min(m), |x| m - x, Some(labels))
}

pub fn boolean() -> FiniteMvAlgebra {
    lukasiewicz(1).expect("two elements fit any guard")
}

/// The one-element algebra, where `0 = 1`.
pub fn trivial() -> FiniteMvAlgebra {
    FiniteMvAlgebra::from_fn(1, |_, _| 0, |_| 0, Some(vec!["0".into()]))
        .expect("one element fits any guard")
}

/// Componentwise product; the pair `(i, j)` has index `i·|B| + j`.
pub fn product(a: &FiniteMvAlgebra, b: &FiniteMvAlgebra) -> Result<FiniteMvAlgebra> {
    let nb = b.size();
    let size = a
        .size()
        .checked_mul(nb)
        .ok_or(Error::SizeGuard { size: usize::MAX, limit: guard::size_guard() })?;
    guard::check_size(size)?;
    let labels = (0..size)
        .map(|k| format!("({},{})", a.label(k / nb), b.label(k % nb)))
        .collect();
    FiniteMvAlgebra::from_fn(
        size,
        |x, y| a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb),
        |x| a.not(x / nb) * nb + b.not(x % nb),
        Some(labels),
    )
}

/// `A/I` under `x ≈ y ⟺ (x ⊖ y) ⊕ (y ⊖ x) ∈ I`, with the canonical
/// surjection. Classes are numbered by their least representative, so the
/// class of 0 is 0.
pub fn quotient(a: &Arc<FiniteMvAlgebra>, ideal: &IdealSet) -> Result<(FiniteMvAlgebra, MvHom)> {
    a.check_mask(ideal.mask())?;
    if !is_ideal(a, ideal.mask()) {
        return Err(Error::NotAnIdeal(ideal.members()));
    }
    let n = a.size();
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for (y, slot) in class.iter_mut().enumerate().skip(x) {
            if ideal.contains(a.distance(x, y)) {
                *slot = c;
            }
        }
    }
    let labels = reps
        .iter()
        .map(|&r| {
            let members: Vec<String> = (0..n).filter(|&y| class[y] == class[r]).map(|y| a.label(y)).collect();
            if members.len() == 1 {
                members[0].clone()
            } else {
                format!("[{}]", members[0])
            }
        })
        .collect();
    let q = FiniteMvAlgebra::from_fn(
        reps.len(),
        |c, d| class[a.add(reps[c], reps[d])],
        |c| class[a.not(reps[c])],
        Some(labels),
    )?;
    let q = Arc::new(q);
    let h = MvHom::new(a.clone(), q.clone(), class)?;
    Ok((Arc::try_unwrap(q).unwrap_or_else(|q| (*q).clone()), h))
}

/// Members of the congruence class of `x` modulo `I`.
pub fn congruence_class(a: &FiniteMvAlgebra, ideal: &IdealSet, x: usize) -> bits::Mask {
    bits::from_iter(a.elements().filter(|&y| ideal.contains(a.distance(x, y))))
}
