//! McNaughton normal forms `∧∨ρ(a·x + b)`: exact evaluation, syntactic and
//! local homogeneity, homogenisation, exact unary zero sets, and zero sets
//! of terms over `Δ(ℚ)ⁿ`.

mod delta;
mod homogeneity;
mod normal;
mod zeroset;

pub use delta::{
    check_form1, delta_point, eval_delta_term, form1_member, form1_of_unary, split_delta, Cone, Form1Report,
    Form1Violation, ZerosetForm1,
};
pub use homogeneity::{
    is_locally_homogeneous, is_locally_homogeneous_with, neighbourhood_radius, sample_homogeneity,
    HomogeneityViolation, LocalSampling,
};
pub use normal::{
    eval_nf, homogenize, is_syntactically_homogeneous, rho, zero_at_origin_criterion, NormalForm, Piece, RatPoint,
};
pub use zeroset::{breakpoints, cone_violation, homogeneous_zeroset_check, is_cone_1d, zeroset_1d, Interval1D};
