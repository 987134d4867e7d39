//! Ideals, prime spectra, and the Zariski topology of finite MV-algebras.

mod ideals;
mod spectrum;
mod topology;

pub use ideals::{enumerate_ideals, ideal_generated, ideal_sum, is_ideal, is_maximal, is_prime, IdealSet};
pub use spectrum::{ideal_label, maximals, o, pullback_prime, radical, spec, v, Spectrum};
pub use topology::{
    compact_opens_lattice, homeomorphic, is_root_system, zariski_topology, FiniteTopology,
};
