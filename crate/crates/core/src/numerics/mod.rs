//! Floating-point layer: half-line quadrature, finite-difference bound
//! states with a Sturm-count tridiagonal eigensolver, and wavefunction
//! assembly.

pub mod gamma;
pub mod quadrature;
pub mod spectrum;
pub mod tridiag;
pub mod wavefunction;

pub use quadrature::{
    integrate_halfline, weighted_gram_matrix, weighted_gram_matrix_seq, QuadResult,
};
pub use spectrum::{
    bound_states, bound_states_seq, GridSpec, LevelResult, SpectrumReport, SpectrumTarget,
};
pub use wavefunction::{wavefunction, Wavefunction};

/// Default tolerances, centralized so every consumer agrees.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Absolute/relative mixed tolerance for adaptive quadrature.
    pub quadrature: f64,
    /// Absolute tolerance on numeric eigenvalues.
    pub spectrum: f64,
    /// Tolerance on wavefunction overlaps.
    pub overlap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quadrature: 1e-9,
            spectrum: 1e-4,
            overlap: 1e-4,
        }
    }
}
