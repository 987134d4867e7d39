//! Finite and symbolic MV-algebras, their prime spectra, the Stone duals of
//! finite distributive lattices, lexicographic ℓ-groups, and McNaughton
//! functions in normal form.
//!
//! Everything here runs at desk scale: finite algebras are operation tables
//! with at most 64 elements, symbolic algebras are intervals of lexicographic
//! groups of small rank, and all arithmetic is exact.

pub mod bits;
pub mod classify;
pub mod corpus;
pub mod dot;
mod error;
pub mod functors;
pub mod guard;
pub mod iso;
pub mod io;
pub mod lattice;
pub mod mcnaughton;
pub mod mv;
pub mod poset;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
