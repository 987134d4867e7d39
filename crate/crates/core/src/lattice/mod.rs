//! Finite bounded distributive lattices, their prime ideals, Stone duals,
//! and closedness of surjective homomorphisms.

mod duality;
mod structure;

pub use duality::{
    dual_closure_equalities, dual_preserves_closed, elementwise_join, ideal_join, is_closed_epi_defn,
    is_closed_epi_downsets, is_closed_epi_ideals, is_lattice_ideal, is_lattice_prime, lattice_ideals,
    lattice_primes, stone_dual, ClosureEqualities, DownSet, PreservesClosed, StoneDual,
};
pub use structure::{
    find_lattice_isomorphism, lattices_isomorphic, FiniteDistLattice, LatticeHom, LatticeTables,
};
