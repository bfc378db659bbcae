//! Exact root counting on the positive half-line via Sturm sequences.

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::scalar::{rat_int, sign, Rat};
use crate::error::{Error, Result};

/// Number of distinct real roots of `p` in the open interval `(0, oo)`.
///
/// Roots are counted without multiplicity. The zero polynomial has no
/// well-defined root count and is rejected.
pub fn count_roots_positive(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::UndefinedRootCount);
    }
    // Strip z^k factors: a root exactly at 0 is outside the open interval.
    let mut f = p.clone();
    while f.coeff(0).is_zero() && !f.is_zero() {
        let (q, r) = f.divrem(&Poly::z());
        debug_assert!(r.is_zero());
        f = q;
    }
    if f.degree() == Some(0) {
        return Ok(0);
    }
    // Square-free part, so the chain counts distinct roots.
    let sqfree = {
        let g = f.gcd(&f.derivative());
        if g.degree() == Some(0) {
            f.clone()
        } else {
            let (q, r) = f.divrem(&g);
            debug_assert!(r.is_zero());
            q
        }
    };
    let chain = sturm_chain(&sqfree);
    let bound = cauchy_root_bound(&sqfree);
    let at_zero = sign_variations(&chain, &Rat::zero());
    let at_bound = sign_variations(&chain, &bound);
    Ok(at_zero - at_bound)
}

/// Canonical Sturm chain. Content removal bounds coefficient growth; it
/// divides by the positive content only, since the chain's sign relations
/// must survive.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let first = p.without_content();
    let second = first.derivative().without_content();
    let mut chain = vec![first, second];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let next = (-&r).without_content();
        chain.push(next);
    }
    chain
}

/// `1 + max |a_i| / |a_n|`, an upper bound for the absolute value of every
/// real root.
fn cauchy_root_bound(p: &Poly) -> Rat {
    let lead = p.leading();
    let mut m = Rat::zero();
    for c in p.coeffs() {
        let ratio = (c / &lead).abs();
        if ratio > m {
            m = ratio;
        }
    }
    m + rat_int(1)
}

fn sign_variations(chain: &[Poly], at: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign(&p.eval(at));
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}
