//! Exceptional Laguerre orthogonal polynomials and rationally extended
//! radial oscillator potentials.
//!
//! The crate builds the `X_1`, `X_m` and two-index `X_{m1,m2}` Laguerre-type
//! exceptional orthogonal polynomial families through first- and second-order
//! intertwining operators, together with the rational potential extensions
//! they solve. Everything structural (operator identities, differential
//! equations, shape invariance, partner-potential relations) is proved in
//! exact rational arithmetic; floating point enters only for quadrature
//! norms and finite-difference spectra.
//!
//! Module map:
//!
//! - [`algebra`]: exact rationals, dense polynomials in `z`, rational
//!   functions, Wronskians and Sturm root counting.
//! - [`laguerre`]: classical Laguerre polynomials and the `X_1` family.
//! - [`eop`]: `X_m` / `X_{m1,m2}` constructions, their defining equation,
//!   degree bookkeeping and coincidence detection.
//! - [`susy`]: potentials, superpotentials, seed functions, partner pairs
//!   and shape-invariance residuals, all pulled back to `z = omega x^2 / 2`.
//! - [`numerics`]: half-line quadrature, tridiagonal bound-state solver,
//!   wavefunction assembly.
//! - [`verify`]: named check suites with machine-readable reports.
//!
//! With the default `parallel` feature the batch entry points fan out over
//! rayon; disabling it yields a fully sequential build with identical
//! results.

pub mod algebra;
pub mod eop;
mod error;
pub mod laguerre;
pub mod numerics;
pub(crate) mod par;
pub mod susy;
pub mod verify;

pub use error::{Error, Result};
