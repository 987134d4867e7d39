//! Finite MV-algebras as operation tables.

mod algebra;
mod construct;
mod hom;
mod iso;
mod term;

pub use algebra::{
    derived_op, ord, validate_algebra, Axiom, DerivedOp, DerivedValue, FiniteMvAlgebra, MvOps,
    Order, RawTables, ValidationReport, Violation,
};
pub use construct::{boolean, congruence_class, lukasiewicz, product, quotient, trivial};
pub use hom::{kernel, factor_through, validate_hom, HomCheck, HomViolation, MvHom};
pub use iso::{canonical_tables, find_isomorphism, is_isomorphic};
pub use term::{eval_term, MvTerm};
