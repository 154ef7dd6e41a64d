//! Scalars: the cyclotomic field Q(ζ_r) and rational functions in the
//! algebra parameters over it.

mod cyclotomic;
mod mpoly;
mod param;
mod ratfunc;

pub use cyclotomic::{cyc, totient, CycScalar, Rational};
pub(crate) use cyclotomic::fmt_rational;
pub use mpoly::{MPoly, Mono};
pub use param::{c_from_d, d_from_c, ParamPoint, ParamScalar, Params};
pub use ratfunc::RatFunc;

/// `n/d` as a rational number.
pub fn rat(n: i64, d: i64) -> Rational {
    cyclotomic::rat(n, d)
}
