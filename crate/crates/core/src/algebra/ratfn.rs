//! Rational functions in `z`, stored in reduced canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Poly;
use super::scalar::Rat;
use crate::error::{Error, Result};

/// Quotient of two polynomials, reduced (gcd of numerator and denominator
/// constant) with a monic denominator, which fixes the canonical sign.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    /// Build `num / den`, reducing to canonical form. Panics if `den` is the
    /// zero polynomial; use [`RationalFn::checked_div`] for fallible division.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lead = den.leading();
        RationalFn {
            num: num.scale(&lead.recip()),
            den: den.scale(&lead.recip()),
        }
    }

    pub fn zero() -> Self {
        RationalFn::from_poly(Poly::zero())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFn::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_identically_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the reduced form has a constant numerator and denominator.
    pub fn is_constant(&self) -> bool {
        self.num.degree().is_none_or(|d| d == 0) && self.den.is_one()
    }

    fn den_is_one(&self) -> bool {
        self.den.is_one()
    }

    /// Fallible division; rejects an identically-zero divisor.
    pub fn checked_div(&self, rhs: &RationalFn) -> Result<RationalFn> {
        if rhs.is_identically_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFn::new(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    /// Derivative in `z` by the quotient rule.
    pub fn derivative(&self) -> RationalFn {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFn::new(num, &self.den * &self.den)
    }

    /// Exact evaluation; `None` at a pole of the reduced form.
    pub fn eval(&self, z: &Rat) -> Option<Rat> {
        let d = self.den.eval(z);
        if d == Rat::zero() {
            return None;
        }
        Some(self.num.eval(z) / d)
    }

    /// Floating-point evaluation; returns non-finite values near poles.
    pub fn eval_f64(&self, z: f64) -> f64 {
        self.num.eval_f64(z) / self.den.eval_f64(z)
    }

    /// Log-derivative `f'/f` of a nonzero polynomial as a rational function.
    pub fn log_derivative(p: &Poly) -> RationalFn {
        assert!(!p.is_zero(), "log-derivative of the zero polynomial");
        RationalFn::new(p.derivative(), p.clone())
    }

    /// Multiply by an exact scalar.
    pub fn scale(&self, c: &Rat) -> RationalFn {
        if c.is_zero() {
            return RationalFn::zero();
        }
        RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            write!(f, "({:?})", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self.checked_div(rhs)
            .expect("division by identically-zero rational function")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, rat_int};
    use num_traits::One;

    fn z_plus(a: Rat) -> Poly {
        Poly::from_coeffs(vec![a, Rat::one()])
    }

    #[test]
    fn cancellation_to_zero() {
        let a = rat(3, 2);
        let f = RationalFn::new(Poly::one(), z_plus(a.clone()));
        let diff = &f - &f;
        assert!(diff.is_identically_zero());
        assert_eq!(diff, RationalFn::zero());
    }

    #[test]
    fn quotient_rule() {
        // d/dz 1/(z+a) = -1/(z+a)^2
        let a = rat(3, 2);
        let f = RationalFn::new(Poly::one(), z_plus(a.clone()));
        let d = f.derivative();
        let den = &z_plus(a.clone()) * &z_plus(a);
        assert_eq!(d, RationalFn::new(Poly::from_ints(&[-1]), den));
    }

    #[test]
    fn log_derivative_of_linear() {
        let a = rat(3, 2);
        let g = z_plus(a.clone());
        assert_eq!(
            RationalFn::log_derivative(&g),
            RationalFn::new(Poly::one(), z_plus(a))
        );
    }

    #[test]
    fn reduction_is_canonical() {
        // (2z^2 + 2z) / (4z) reduces to (z + 1)/2 with monic denominator 1.
        let f = RationalFn::new(Poly::from_ints(&[0, 2, 2]), Poly::from_ints(&[0, 4]));
        assert_eq!(f.num(), &Poly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
        assert!(f.den_is_one());
        // Rebuilding from the reduced parts is the identity.
        let again = RationalFn::new(f.num().clone(), f.den().clone());
        assert_eq!(again, f);
    }

    #[test]
    fn checked_division_by_zero() {
        let f = RationalFn::constant(rat_int(1));
        assert_eq!(f.checked_div(&RationalFn::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_at_pole_is_none() {
        let f = RationalFn::new(Poly::one(), z_plus(rat_int(-2)));
        assert_eq!(f.eval(&rat_int(2)), None);
        assert_eq!(f.eval(&rat_int(3)), Some(rat_int(1)));
    }
}
