//! Classical Laguerre polynomials and the `X_1` exceptional family.
//!
//! Everything here is exact: polynomials are built over the rationals by the
//! three-term recurrence, and the differential-equation residuals below are
//! required to be the zero polynomial, not merely small. Only the norm
//! targets are floating point.

use num_traits::One;

use crate::algebra::{rat_int, Poly, Rat};
use crate::error::{Error, Result};
use crate::numerics::gamma::ln_gamma;

/// Parameters of a Laguerre-type polynomial.
///
/// Physical radial problems use `alpha = l + 1/2` with integer `l >= 0`, but
/// any rational `alpha` is accepted for symbolic checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerreParams {
    pub alpha: Rat,
    pub n: usize,
}

/// `L_n^{(alpha)}(z)` by the three-term recurrence
/// `(n+1) L_{n+1} = (2n + alpha + 1 - z) L_n - (n + alpha) L_{n-1}`.
pub fn laguerre(n: usize, alpha: &Rat) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    // L_1 = -z + alpha + 1
    let mut cur = Poly::from_coeffs(vec![alpha + rat_int(1), -Rat::one()]);
    for k in 1..n {
        let kq = rat_int(k as i64);
        let a = Poly::from_coeffs(vec![&kq + &kq + alpha + Rat::one(), -Rat::one()]);
        let next = &(&a * &cur) - &prev.scale(&(&kq + alpha));
        let next = next.scale(&(kq + Rat::one()).recip());
        prev = cur;
        cur = next;
    }
    cur
}

/// Residual of the classical equation `z L'' + (alpha + 1 - z) L' + n L`;
/// the contract is that it is the zero polynomial.
pub fn laguerre_ode_residual(n: usize, alpha: &Rat) -> Poly {
    let l = laguerre(n, alpha);
    ode_residual_classical(&l, n, alpha)
}

fn ode_residual_classical(l: &Poly, n: usize, alpha: &Rat) -> Poly {
    let d1 = l.derivative();
    let d2 = d1.derivative();
    let z = Poly::z();
    let lin = Poly::from_coeffs(vec![alpha + rat_int(1), -Rat::one()]);
    let term = &(&z * &d2) + &(&lin * &d1);
    &term + &l.scale(&rat_int(n as i64))
}

/// `X_1` Laguerre polynomial as the three-term combination
/// `n L_n - 2(n + alpha) L_{n-1} + (n + alpha) L_{n-2}` with `L_{-1} = 0`.
pub fn x1_laguerre(n: usize, alpha: &Rat) -> Result<Poly> {
    if n == 0 {
        return Err(Error::X1DegreeZero);
    }
    let na = rat_int(n as i64) + alpha;
    let mut out = laguerre(n, alpha).scale(&rat_int(n as i64));
    out = &out - &laguerre(n - 1, alpha).scale(&(rat_int(2) * &na));
    if n >= 2 {
        out = &out + &laguerre(n - 2, alpha).scale(&na);
    }
    Ok(out)
}

/// Denominator-cleared residual of the `X_1` equation:
/// `z (z + alpha) y'' - (z - alpha) [(z + alpha + 1) y' - y]
///  + (n - 1)(z + alpha) y`. Contract: zero polynomial.
pub fn x1_ode_residual(n: usize, alpha: &Rat) -> Result<Poly> {
    let y = x1_laguerre(n, alpha)?;
    let d1 = y.derivative();
    let d2 = y.derivative().derivative();
    let z = Poly::z();
    let z_plus_a = Poly::from_coeffs(vec![alpha.clone(), Rat::one()]);
    let z_minus_a = Poly::from_coeffs(vec![-alpha.clone(), Rat::one()]);
    let z_plus_a1 = Poly::from_coeffs(vec![alpha + rat_int(1), Rat::one()]);

    let first = &(&z * &z_plus_a) * &d2;
    let bracket = &(&z_plus_a1 * &d1) - &y;
    let second = &z_minus_a * &bracket;
    let third = (&z_plus_a * &y).scale(&rat_int(n as i64 - 1));
    Ok(&(&first - &second) + &third)
}

/// Analytic `X_1` norm `Gamma(n + alpha + 1) / [(n + alpha - 1) (n-1)!]`,
/// used as the quadrature target.
pub fn x1_norm(n: usize, alpha: f64) -> f64 {
    assert!(n >= 1 && alpha > 0.0);
    let nf = n as f64;
    (ln_gamma(nf + alpha + 1.0) - ln_gamma(nf)).exp() / (nf + alpha - 1.0)
}

/// Classical norm `Gamma(n + alpha + 1) / n!`.
pub fn laguerre_norm(n: usize, alpha: f64) -> f64 {
    let nf = n as f64;
    (ln_gamma(nf + alpha + 1.0) - ln_gamma(nf + 1.0)).exp()
}

/// Expected leading coefficient `(-1)^n / n!` of `L_n^{(alpha)}`.
pub fn laguerre_leading(n: usize) -> Rat {
    let mut fact = Rat::one();
    for k in 2..=n {
        fact *= rat_int(k as i64);
    }
    let sign = if n.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    sign / fact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use num_traits::Zero;

    /// Independent oracle: the explicit series
    /// `L_n^{(a)}(z) = sum_k (-1)^k binom(n+a, n-k) z^k / k!`.
    fn laguerre_series(n: usize, alpha: &Rat) -> Poly {
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            // binom(n + a, n - k) = prod_{j=1}^{n-k} (a + k + j) / (n - k)!
            let mut binom = Rat::one();
            for j in 1..=(n - k) {
                binom *= alpha + rat_int((k + j) as i64);
                binom /= rat_int(j as i64);
            }
            let mut kfact = Rat::one();
            for j in 2..=k {
                kfact *= rat_int(j as i64);
            }
            let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            coeffs.push(sign * binom / kfact);
        }
        Poly::from_coeffs(coeffs)
    }

    #[test]
    fn low_degree_values() {
        let a = rat(7, 3);
        assert_eq!(laguerre(0, &a), Poly::one());
        assert_eq!(
            laguerre(1, &a),
            Poly::from_coeffs(vec![&a + rat_int(1), -Rat::one()])
        );
        // L_2^{(1/2)} = z^2/2 - 5z/2 + 15/8
        assert_eq!(
            laguerre(2, &rat(1, 2)),
            Poly::from_coeffs(vec![rat(15, 8), rat(-5, 2), rat(1, 2)])
        );
    }

    #[test]
    fn recurrence_matches_series() {
        for a in [rat(1, 2), rat(3, 2), rat(-5, 2), rat(7, 3)] {
            for n in 0..=20 {
                assert_eq!(laguerre(n, &a), laguerre_series(n, &a), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn classical_ode_residual_is_zero() {
        for a in [rat(1, 2), rat(3, 2), rat(5, 2), rat(7, 3)] {
            for n in 0..=20 {
                assert!(laguerre_ode_residual(n, &a).is_zero(), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn x1_explicit_values() {
        let a = rat(3, 2);
        // -z - alpha - 1
        assert_eq!(
            x1_laguerre(1, &a).unwrap(),
            Poly::from_coeffs(vec![-&a - rat_int(1), -Rat::one()])
        );
        // z^2 - alpha(alpha + 2)
        assert_eq!(
            x1_laguerre(2, &a).unwrap(),
            Poly::from_coeffs(vec![-(&a * (&a + rat_int(2))), Rat::zero(), Rat::one()])
        );
    }

    #[test]
    fn x1_rejects_degree_zero() {
        assert_eq!(x1_laguerre(0, &rat(3, 2)), Err(Error::X1DegreeZero));
    }

    #[test]
    fn x1_ode_residual_is_zero() {
        for a in [rat(1, 2), rat(3, 2), rat(5, 2), rat(7, 3)] {
            for n in 1..=20 {
                assert!(x1_ode_residual(n, &a).unwrap().is_zero(), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn x1_degree_and_leading() {
        // deg = n, leading = n (-1)^n / n! = (-1)^n / (n-1)!
        for n in 1..=10 {
            let p = x1_laguerre(n, &rat(3, 2)).unwrap();
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.leading(), laguerre_leading(n) * rat_int(n as i64));
        }
    }

    #[test]
    fn norm_values_against_half_integer_gamma() {
        // Gamma(7/2) = 15 sqrt(pi) / 8, Gamma(9/2) = 105 sqrt(pi) / 16
        let sqrt_pi = std::f64::consts::PI.sqrt();
        let g72 = 15.0 * sqrt_pi / 8.0;
        let g92 = 105.0 * sqrt_pi / 16.0;
        let n1 = x1_norm(1, 1.5);
        let n2 = x1_norm(2, 1.5);
        assert!((n1 - g72 / 1.5).abs() < 1e-12 * n1, "{n1}");
        assert!((n2 - g92 / 2.5).abs() < 1e-12 * n2, "{n2}");
        assert!((n1 - 2.2155673).abs() < 1e-6);
        assert!((n2 - 4.6526914).abs() < 1e-6);
        // Classical n = 0 norm is Gamma(alpha + 1).
        let g52 = 3.0 * sqrt_pi / 4.0;
        assert!((laguerre_norm(0, 1.5) - g52).abs() < 1e-13);
    }
}
