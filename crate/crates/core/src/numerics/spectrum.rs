//! Finite-difference bound states on the half-line.
//!
//! Three-point central differences with Dirichlet ends give a symmetric
//! tridiagonal matrix whose lowest eigenvalues are located by Sturm-count
//! bisection; Richardson extrapolation across grid refinements removes the
//! leading h^2 error.

use serde::Serialize;

use super::tridiag::lowest_eigenvalues;
use crate::error::{Error, Result};
use crate::par;

/// Discretization window for [`bound_states`].
#[derive(Debug, Clone, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    /// Grid points including both Dirichlet endpoints; kept odd so halving
    /// the step reuses the coarse nodes.
    pub points: usize,
    pub refinement_levels: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, points: usize, refinement_levels: usize) -> Result<Self> {
        if !(x_min > 0.0 && x_min < x_max) {
            return Err(Error::InvalidParameter(
                "grid requires 0 < x_min < x_max".into(),
            ));
        }
        if points < 3 || points.is_multiple_of(2) {
            return Err(Error::InvalidParameter(
                "grid needs an odd point count >= 3".into(),
            ));
        }
        if refinement_levels < 1 {
            return Err(Error::InvalidParameter(
                "at least one refinement level".into(),
            ));
        }
        Ok(GridSpec {
            x_min,
            x_max,
            points,
            refinement_levels,
        })
    }

    /// Default window for a radial-oscillator-like potential: the inner
    /// Dirichlet wall sits at `1e-6 sqrt(2/omega)` and the outer one where
    /// the harmonic growth clears the highest requested level by `40 omega`.
    ///
    /// The inner wall shifts an `l = 0` eigenvalue by `psi'(0)^2 x_min`, so
    /// it must sit well below the spectrum tolerance.
    pub fn for_oscillator(omega: f64, e_target: f64) -> Self {
        let x_min = 1e-6 * (2.0 / omega).sqrt();
        let x_max = 2.0 * (e_target + 40.0 * omega).max(4.0 * omega).sqrt() / omega;
        GridSpec {
            x_min,
            x_max,
            points: 1201,
            refinement_levels: 3,
        }
    }
}

/// What the numeric levels are compared against:
/// `E_nu = omega (2 nu + l + 3/2) + shift`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpectrumTarget {
    pub omega: f64,
    pub l: u32,
    pub shift: f64,
}

impl SpectrumTarget {
    pub fn analytic(&self, nu: usize) -> f64 {
        self.omega * (2.0 * nu as f64 + self.l as f64 + 1.5) + self.shift
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelResult {
    pub nu: usize,
    pub numeric: f64,
    pub analytic: f64,
    pub abs_error: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub target: SpectrumTarget,
    pub grid: GridSpec,
    pub levels: Vec<LevelResult>,
    pub all_converged: bool,
}

impl SpectrumReport {
    pub fn max_abs_error(&self) -> f64 {
        self.levels.iter().fold(0.0, |m, l| m.max(l.abs_error))
    }
}

/// Raw (unextrapolated) finite-difference eigenvalues on one grid.
pub fn fd_eigenvalues<V>(potential: &V, x_min: f64, x_max: f64, points: usize, k: usize) -> Vec<f64>
where
    V: Fn(f64) -> f64 + ?Sized,
{
    let n = points - 2; // interior nodes
    let h = (x_max - x_min) / (points - 1) as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag: Vec<f64> = (1..=n)
        .map(|i| 2.0 * inv_h2 + potential(x_min + i as f64 * h))
        .collect();
    let off = vec![-inv_h2; n - 1];
    lowest_eigenvalues(&diag, &off, k)
}

/// Lowest `k` bound states of `-d^2/dx^2 + V(x)` with Dirichlet walls,
/// Richardson-extrapolated over `grid.refinement_levels` grids.
pub fn bound_states<V>(potential: &V, grid: &GridSpec, k: usize, target: &SpectrumTarget) -> SpectrumReport
where
    V: Fn(f64) -> f64 + Sync + ?Sized,
{
    assert!(k >= 1, "need at least one level");
    let levels_idx: Vec<usize> = (0..grid.refinement_levels).collect();
    let per_grid: Vec<Vec<f64>> = par::map_collect(levels_idx, |level| {
        let points = (grid.points - 1) * (1 << level) + 1;
        fd_eigenvalues(potential, grid.x_min, grid.x_max, points, k)
    });
    report_from_tables(grid, k, target, &per_grid, potential)
}

/// Sequential twin of [`bound_states`]; same arithmetic, no fan-out.
pub fn bound_states_seq<V>(
    potential: &V,
    grid: &GridSpec,
    k: usize,
    target: &SpectrumTarget,
) -> SpectrumReport
where
    V: Fn(f64) -> f64 + ?Sized,
{
    assert!(k >= 1, "need at least one level");
    let levels_idx: Vec<usize> = (0..grid.refinement_levels).collect();
    let per_grid: Vec<Vec<f64>> = par::map_collect_seq(levels_idx, |level| {
        let points = (grid.points - 1) * (1 << level) + 1;
        fd_eigenvalues(potential, grid.x_min, grid.x_max, points, k)
    });
    report_from_tables(grid, k, target, &per_grid, potential)
}

fn report_from_tables<V>(
    grid: &GridSpec,
    k: usize,
    target: &SpectrumTarget,
    per_grid: &[Vec<f64>],
    potential: &V,
) -> SpectrumReport
where
    V: Fn(f64) -> f64 + ?Sized,
{
    // A level whose energy approaches the outer wall height is not a
    // trustworthy box state.
    let wall = potential(grid.x_max);
    let mut levels = Vec::with_capacity(k);
    let mut all_converged = true;
    for nu in 0..k {
        let raw: Vec<f64> = per_grid.iter().map(|g| g[nu]).collect();
        let (value, spread) = richardson(&raw);
        let analytic = target.analytic(nu);
        let resolved = value < wall - 1e-6 * wall.abs().max(1.0);
        let spectrum_tol = super::Tolerances::default().spectrum;
        let converged = resolved && (raw.len() < 2 || spread < 10.0 * spectrum_tol);
        all_converged &= converged;
        levels.push(LevelResult {
            nu,
            numeric: value,
            analytic,
            abs_error: (value - analytic).abs(),
            converged,
        });
    }
    SpectrumReport {
        target: *target,
        grid: grid.clone(),
        levels,
        all_converged,
    }
}

/// Richardson table for a second-order scheme under grid halving; returns
/// the most extrapolated value and the difference between the two final
/// estimates as a convergence spread.
fn richardson(raw: &[f64]) -> (f64, f64) {
    let mut table: Vec<f64> = raw.to_vec();
    let mut order = 2.0_f64;
    let mut last_two = (table[0], table[0]);
    while table.len() > 1 {
        let factor = 2f64.powf(order);
        let mut next = Vec::with_capacity(table.len() - 1);
        for w in table.windows(2) {
            next.push((factor * w[1] - w[0]) / (factor - 1.0));
        }
        last_two = (*table.last().unwrap(), *next.last().unwrap());
        table = next;
        order += 2.0;
    }
    let spread = (last_two.1 - last_two.0).abs();
    (table[0], spread)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conventional(omega: f64, l: u32) -> impl Fn(f64) -> f64 {
        move |x: f64| 0.25 * omega * omega * x * x + (l * (l + 1)) as f64 / (x * x)
    }

    #[test]
    fn conventional_spectrum_l0() {
        let target = SpectrumTarget {
            omega: 1.0,
            l: 0,
            shift: 0.0,
        };
        let grid = GridSpec::for_oscillator(1.0, target.analytic(2));
        let report = bound_states(&conventional(1.0, 0), &grid, 3, &target);
        for (lvl, want) in report.levels.iter().zip([1.5, 3.5, 5.5]) {
            assert!(
                (lvl.numeric - want).abs() < 1e-4,
                "nu={} got {} want {want}",
                lvl.nu,
                lvl.numeric
            );
            assert!(lvl.converged);
        }
    }

    #[test]
    fn second_order_convergence_rate() {
        // Error of the raw scheme shrinks ~4x per halving on the known
        // ground state.
        let v = conventional(1.0, 0);
        let exact = 1.5;
        let grid = GridSpec::for_oscillator(1.0, 10.0);
        let e1 = fd_eigenvalues(&v, grid.x_min, grid.x_max, 401, 1)[0];
        let e2 = fd_eigenvalues(&v, grid.x_min, grid.x_max, 801, 1)[0];
        let ratio = (e1 - exact).abs() / (e2 - exact).abs();
        assert!((3.3..4.7).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn sequential_path_identical() {
        let target = SpectrumTarget {
            omega: 1.0,
            l: 1,
            shift: 0.0,
        };
        let grid = GridSpec {
            points: 301,
            refinement_levels: 2,
            ..GridSpec::for_oscillator(1.0, target.analytic(2))
        };
        let v = conventional(1.0, 1);
        let a = bound_states(&v, &grid, 2, &target);
        let b = bound_states_seq(&v, &grid, 2, &target);
        for (x, y) in a.levels.iter().zip(b.levels.iter()) {
            assert_eq!(x.numeric.to_bits(), y.numeric.to_bits());
        }
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::new(0.0, 1.0, 11, 1).is_err());
        assert!(GridSpec::new(0.1, 1.0, 10, 1).is_err());
        assert!(GridSpec::new(0.1, 1.0, 11, 0).is_err());
    }

    #[test]
    fn flags_levels_above_the_wall() {
        // A tiny box cannot hold the requested number of oscillator states.
        let target = SpectrumTarget {
            omega: 1.0,
            l: 0,
            shift: 0.0,
        };
        let grid = GridSpec::new(1e-4, 1.5, 101, 2).unwrap();
        let report = bound_states(&conventional(1.0, 0), &grid, 6, &target);
        assert!(!report.all_converged);
        assert!(report.levels.iter().any(|l| !l.converged));
    }
}
