//! Submodule structure of M(1), the quotient L(1), graded characters,
//! exponents, and Catalan series.

mod characters;
mod freeness;
mod gordon;
mod hyperplanes;
mod invariants;

pub use crate::scalar::ParamPoint;
pub use characters::{
    catalan_series, det_one_minus, graded_char_l1, invariant_series, series_div, tpoly_div_exact, tpoly_mul,
    CatalanSeries, GradedChar, TPoly,
};
pub use freeness::{det, exponents, exponents_and_freeness, DetCheck, FreenessReport};
pub use gordon::{gordon_report, singular_vector_check, GordonReport, SingularReport};
pub use hyperplanes::{
    default_bound, genericity_guard, on_hyperplane, quotient_dimension, quotient_hilbert_series,
    radical_membership, GuardReport, HyperplaneId,
};
pub use invariants::{coxeter_number, degrees, is_irreducible};
