//! Dense univariate polynomials in `z` with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order; the zero polynomial is
//! the empty list. `degree()` returns `None` for zero so that degree
//! bookkeeping stays total.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{self, Rat};

/// Polynomial in one variable over the exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Build from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from small integers, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| scalar::rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending-degree coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading coefficient; zero polynomial yields 0.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * scalar::rat_int(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Floating-point evaluation; coefficients are converted once.
    pub fn eval_f64(&self, z: f64) -> f64 {
        let mut acc = 0.0_f64;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + scalar::to_f64(c);
        }
        acc
    }

    /// Substitute the affine map `z -> s z + t` and expand.
    pub fn compose_affine(&self, s: &Rat, t: &Rat) -> Poly {
        let mut acc = Poly::zero();
        let inner = Poly::from_coeffs(vec![t.clone(), s.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Make the leading coefficient 1 (identity on the zero polynomial).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics if `div` is zero.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        let lead = div.leading();
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading() / &lead;
            let shift = rd - dd;
            let mut coeffs = rem.coeffs;
            for (i, c) in div.coeffs.iter().enumerate() {
                let sub = c * &factor;
                coeffs[shift + i] -= sub;
            }
            quo[shift] = factor;
            rem = Poly::from_coeffs(coeffs);
        }
        (Poly::from_coeffs(quo), rem)
    }

    /// Monic gcd via the Euclidean algorithm with content removal at each
    /// step to bound coefficient growth.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Positive rational content (zero polynomial has content 0).
    pub fn content(&self) -> Rat {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Divide out the positive content, keeping the sign pattern intact.
    pub fn without_content(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.content().recip())
    }

    /// Divide out the rational content, leaving integer coefficients with
    /// gcd 1 and a sign-normalized (positive) leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        let out = self.without_content();
        if out.leading().is_negative() {
            -&out
        } else {
            out
        }
    }

    /// True when `self = c * other` for some nonzero rational `c`
    /// (zero is only proportional to zero).
    pub fn proportional_to(&self, other: &Poly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return true,
            (true, false) | (false, true) => return false,
            _ => {}
        }
        self.scale(&other.leading()) == other.scale(&self.leading())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Polynomial Wronskian `f g' - f' g`.
pub fn wronskian2(f: &Poly, g: &Poly) -> Poly {
    &(f * &g.derivative()) - &(&f.derivative() * g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, rat_int};

    fn alpha() -> Rat {
        rat(1, 2)
    }

    #[test]
    fn zero_polynomial_is_empty() {
        assert!(Poly::from_ints(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_ints(&[3, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn derivative_power_rule() {
        // d/dz (z^2 - a(a+2)) with a = 1/2 -> 2z
        let a = alpha();
        let p = Poly::from_coeffs(vec![-(&a * (&a + rat_int(2))), Rat::zero(), Rat::one()]);
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 2]));
        assert!(Poly::constant(rat(7, 3)).derivative().is_zero());
    }

    #[test]
    fn product_expansion() {
        // (z + a)^2 = z^2 + 2a z + a^2
        let a = alpha();
        let f = Poly::from_coeffs(vec![a.clone(), Rat::one()]);
        let sq = &f * &f;
        let want = Poly::from_coeffs(vec![&a * &a, rat_int(2) * &a, Rat::one()]);
        assert_eq!(sq, want);
    }

    #[test]
    fn affine_composition_flips_laguerre_one() {
        // L_1^{(a)} composed with z -> -z: (-z + a + 1) -> (z + a + 1)
        let a = alpha();
        let l1 = Poly::from_coeffs(vec![&a + rat_int(1), -Rat::one()]);
        let flipped = l1.compose_affine(&-rat_int(1), &Rat::zero());
        assert_eq!(
            flipped,
            Poly::from_coeffs(vec![&a + rat_int(1), Rat::one()])
        );
        // Oracle: substitute-and-expand at sample points.
        for z in [-3, 0, 2, 5] {
            assert_eq!(flipped.eval(&rat_int(z)), l1.eval(&rat_int(-z)));
        }
    }

    #[test]
    fn divrem_reconstructs() {
        let a = Poly::from_ints(&[1, -2, 0, 3, 5]);
        let b = Poly::from_ints(&[-1, 0, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = Poly::from_ints(&[-1, 1]); // z - 1
        let g = Poly::from_ints(&[2, 1]); // z + 2
        let h = Poly::from_ints(&[0, 1]); // z
        let a = &f * &g;
        let b = &f * &h;
        assert_eq!(a.gcd(&b), f.monic());
        // Coprime case reduces to a constant.
        assert_eq!(g.gcd(&h).degree(), Some(0));
    }

    #[test]
    fn wronskian_hand_values() {
        // W(z + a + 1, -(z + a - 1)) = -2 for every a
        let a = rat(7, 3);
        let f = Poly::from_coeffs(vec![&a + rat_int(1), Rat::one()]);
        let g = Poly::from_coeffs(vec![-(&a - rat_int(1)), -Rat::one()]);
        assert_eq!(wronskian2(&f, &g), Poly::from_ints(&[-2]));

        // Degrees 1 and 2 give a degree-2 Wronskian generically.
        let p = Poly::from_ints(&[1, 3]);
        let q = Poly::from_ints(&[0, 1, 1]);
        assert_eq!(wronskian2(&p, &q).degree(), Some(2));
    }

    #[test]
    fn proportionality() {
        let f = Poly::from_ints(&[1, 2, 3]);
        assert!(f.proportional_to(&f.scale(&rat(-7, 5))));
        assert!(!f.proportional_to(&Poly::from_ints(&[1, 2, 4])));
        assert!(Poly::zero().proportional_to(&Poly::zero()));
        assert!(!f.proportional_to(&Poly::zero()));
    }

    #[test]
    fn primitive_part_normalizes() {
        let f = Poly::from_coeffs(vec![rat(2, 3), rat(-4, 9)]);
        let p = f.primitive_part();
        assert_eq!(p, Poly::from_ints(&[-3, 2]));
        assert_eq!(p.primitive_part(), p);
    }
}
