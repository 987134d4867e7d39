//! Carrier-size guard for exhaustive computations.
//!
//! Finite algebras and lattices refuse carriers larger than the guard. The
//! default is 64, which is also the hard ceiling of the bitmask
//! representation; the guard can be lowered at runtime (the CLI reads
//! `MVS_SIZE_GUARD`).

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::bits::MAX_BITS;
use crate::{Error, Result};

pub const DEFAULT_SIZE_GUARD: usize = 64;

static SIZE_GUARD: AtomicUsize = AtomicUsize::new(DEFAULT_SIZE_GUARD);

pub fn size_guard() -> usize {
    SIZE_GUARD.load(Ordering::Relaxed)
}

/// Sets the guard. Values above the bitmask ceiling are rejected.
pub fn set_size_guard(limit: usize) -> Result<()> {
    if limit == 0 || limit > MAX_BITS {
        return Err(Error::Invalid(format!(
            "size guard must be between 1 and {MAX_BITS}, got {limit}"
        )));
    }
    SIZE_GUARD.store(limit, Ordering::Relaxed);
    Ok(())
}

pub fn check_size(size: usize) -> Result<()> {
    let limit = size_guard();
    if size > limit {
        Err(Error::SizeGuard { size, limit })
    } else {
        Ok(())
    }
}
