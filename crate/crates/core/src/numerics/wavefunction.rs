//! Bound-state wavefunction assembly and normalization.
//!
//! A bound state of an extended potential is `eta_l(z) y(z) / g(z)` with
//! `eta_l(z) = z^{(2 alpha + 1)/4} e^{-z/2}` and `y` the matching
//! (exceptional) polynomial; the L^2 norm over `x` reduces to the weighted
//! polynomial integral `(2 omega)^{-1/2} int z^alpha e^{-z} y^2/g^2 dz`.

use num_traits::Zero;

use super::quadrature::integrate_halfline;
use crate::algebra::scalar::{sign, to_f64};
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::susy::ExtensionSpec;

/// A normalized bound state, positive as `x -> 0+`.
#[derive(Debug, Clone)]
pub struct Wavefunction {
    omega: f64,
    alpha: f64,
    y: Poly,
    g: Poly,
    norm: f64,
    orientation: f64,
    pub nu: usize,
}

impl Wavefunction {
    pub fn new(spec: &ExtensionSpec, nu: usize, quad_tol: f64) -> Result<Self> {
        let y = spec.bound_state_poly(nu)?;
        let g = spec.g.clone();
        let alpha = to_f64(&spec.params.alpha());
        let omega = to_f64(&spec.params.omega);

        let y_f = y.clone();
        let g_f = g.clone();
        let integrand = move |z: f64| {
            let w = (alpha * z.ln() - z).exp();
            let yy = y_f.eval_f64(z);
            let gg = g_f.eval_f64(z);
            w * yy * yy / (gg * gg)
        };
        let quad = integrate_halfline(integrand, quad_tol);
        if !quad.converged || quad.value <= 0.0 {
            return Err(Error::InvalidParameter(
                "normalization integral did not converge".into(),
            ));
        }
        let norm = (quad.value / (2.0 * omega).sqrt()).sqrt();

        // Sign convention: positive as x -> 0+, decided exactly at z = 0.
        let ratio_sign = {
            let y0 = y.coeff(0);
            let g0 = g.coeff(0);
            let s = if y0.is_zero() {
                // Fall back to the next coefficient; simple bound states
                // do not vanish at the origin, but stay total anyway.
                sign(&y.coeff(1)) * sign(&g0)
            } else {
                sign(&y0) * sign(&g0)
            };
            if s >= 0 {
                1.0
            } else {
                -1.0
            }
        };

        Ok(Wavefunction {
            omega,
            alpha,
            y,
            g,
            norm,
            orientation: ratio_sign,
            nu,
        })
    }

    /// Value at `x > 0`.
    pub fn eval(&self, x: f64) -> f64 {
        let z = 0.5 * self.omega * x * x;
        let eta = (0.25 * (2.0 * self.alpha + 1.0) * z.ln() - 0.5 * z).exp();
        self.orientation * eta * self.y.eval_f64(z) / self.g.eval_f64(z) / self.norm
    }

    /// L^2 inner product with another state of the same potential, by
    /// quadrature in `z`.
    pub fn overlap(&self, other: &Wavefunction, quad_tol: f64) -> f64 {
        let ya = self.y.clone();
        let yb = other.y.clone();
        let g = self.g.clone();
        let alpha = self.alpha;
        let integrand = move |z: f64| {
            let w = (alpha * z.ln() - z).exp();
            let gg = g.eval_f64(z);
            w * ya.eval_f64(z) * yb.eval_f64(z) / (gg * gg)
        };
        let quad = integrate_halfline(integrand, quad_tol);
        self.orientation * other.orientation * quad.value
            / ((2.0 * self.omega).sqrt() * self.norm * other.norm)
    }

    /// Count interior sign changes on a sampling grid.
    pub fn count_nodes(&self, x_max: f64, samples: usize) -> usize {
        let mut nodes = 0;
        let mut last = 0.0_f64;
        for i in 1..samples {
            let x = x_max * i as f64 / samples as f64;
            let v = self.eval(x);
            if last != 0.0 && v != 0.0 && v.signum() != last.signum() {
                nodes += 1;
            }
            if v != 0.0 {
                last = v;
            }
        }
        nodes
    }
}

/// Convenience entry point: the normalized `nu`-th bound state evaluated at
/// a single `x`.
pub fn wavefunction(spec: &ExtensionSpec, nu: usize, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::InvalidParameter("wavefunction needs x > 0".into()));
    }
    let tol = super::Tolerances::default().quadrature;
    Ok(Wavefunction::new(spec, nu, tol)?.eval(x))
}
