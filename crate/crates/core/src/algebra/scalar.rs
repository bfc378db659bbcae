//! Exact scalars: arbitrary-precision rationals.
//!
//! `Rat` keeps the denominator positive and the fraction fully reduced after
//! every operation, which is exactly the invariant the identity checks rely
//! on. Floats appear only at the numerics boundary via [`to_f64`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// `p / q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Lossy conversion for the numerics boundary.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of leading-digit approximations; only
        // reachable for magnitudes far outside anything this crate builds.
        let n = x.numer().to_f64().unwrap_or(f64::MAX);
        let d = x.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Sign as -1, 0 or +1.
pub fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parse `"p/q"` or `"p"` into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    s.trim().parse::<Rat>().ok()
}

/// n! as an exact rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert!(x.denom() > &BigInt::from(0));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/2", "-7/3", "5", "0"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("abc").is_none());
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), rat_int(1));
        assert_eq!(factorial(5), rat_int(120));
    }
}
