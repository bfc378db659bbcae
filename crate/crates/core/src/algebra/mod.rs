//! Exact arithmetic substrate: arbitrary-precision rationals, dense
//! univariate polynomials in `z`, rational functions, and Sturm-sequence
//! root counting.
//!
//! All types are immutable values and every operation is pure, so the whole
//! module is safe to use from concurrent contexts.

pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod sturm;

pub use poly::{wronskian2, Poly};
pub use ratfn::RationalFn;
pub use scalar::{rat, rat_int, Rat};
pub use sturm::count_roots_positive;
