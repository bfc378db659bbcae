//! Exceptional Laguerre polynomials of `X_m` and two-index `X_{m1,m2}` type.
//!
//! First-order families come from a single seed polynomial, two-index
//! families from a polynomial Wronskian of two seeds glued through a
//! first-order family. The normalization is fixed so the highest-degree
//! term is `(-z)^n / [(n - mu)! m_1! m_2!]` (first order: `(-z)^n /
//! [(n - m)! m!]`), which turns the cross-family reductions below into exact
//! equalities instead of proportionalities.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{rat, rat_int, wronskian2, Poly, Rat};
use crate::error::{Error, Result};
use crate::laguerre::laguerre;

/// The two seed families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeedKind {
    TypeI,
    TypeII,
}

/// One seed index of a (possibly multi-step) construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedIndex {
    pub kind: SeedKind,
    pub m: usize,
}

impl SeedIndex {
    pub fn new(kind: SeedKind, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidIndices("seed index m must be >= 1".into()));
        }
        Ok(SeedIndex { kind, m })
    }
}

/// Which pair of seed families feeds a two-step construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairCase {
    /// Both seeds of type I.
    BothI,
    /// Both seeds of type II.
    BothII,
    /// One seed of each type.
    Mixed,
}

/// Family tag of a constructed exceptional polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EopFamily {
    FirstOrder(SeedKind),
    SecondOrder(PairCase),
}

/// A constructed exceptional orthogonal polynomial.
#[derive(Debug, Clone)]
pub struct EOPoly {
    pub family: EopFamily,
    pub alpha: Rat,
    pub indices: Vec<SeedIndex>,
    /// Total degree `n = mu + nu`.
    pub n: usize,
    pub poly: Poly,
}

/// Seed polynomial `g_m^{(alpha)}`: type I is `L_m^{(alpha-1)}(-z)`, type II
/// is `L_m^{(-alpha-1)}(z)`.
pub fn seed_poly(kind: SeedKind, alpha: &Rat, m: usize) -> Result<Poly> {
    if m == 0 {
        return Err(Error::InvalidIndices("seed index m must be >= 1".into()));
    }
    Ok(match kind {
        SeedKind::TypeI => {
            laguerre(m, &(alpha - Rat::one())).compose_affine(&-Rat::one(), &Rat::zero())
        }
        SeedKind::TypeII => laguerre(m, &(-alpha - Rat::one())),
    })
}

/// Denominator polynomial of a two-step construction, together with its
/// degree `mu`.
///
/// `BothI`/`BothII` take the Wronskian of two same-type seeds
/// (`mu = m1 + m2 - 1`, requiring `0 < m1 < m2`); `Mixed` combines one of
/// each type (`mu = m1 + m2 + 1`).
pub fn g_mu_ssusy(case: PairCase, alpha: &Rat, m1: usize, m2: usize) -> Result<(Poly, usize)> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::InvalidIndices("pair indices must be >= 1".into()));
    }
    match case {
        PairCase::BothI | PairCase::BothII => {
            if m1 >= m2 {
                return Err(Error::InvalidIndices(format!(
                    "same-type pair needs m1 < m2, got ({m1}, {m2})"
                )));
            }
            let (f1, f2) = match case {
                PairCase::BothI => {
                    let shifted = alpha - rat_int(2);
                    let flip = |p: Poly| p.compose_affine(&-Rat::one(), &Rat::zero());
                    (flip(laguerre(m1, &shifted)), flip(laguerre(m2, &shifted)))
                }
                _ => {
                    let shifted = -alpha - rat_int(2);
                    (laguerre(m1, &shifted), laguerre(m2, &shifted))
                }
            };
            let g = wronskian2(&f1, &f2);
            let mu = m1 + m2 - 1;
            debug_assert_eq!(g.degree(), Some(mu));
            Ok((g, mu))
        }
        PairCase::Mixed => {
            let f1 = laguerre(m1, alpha).compose_affine(&-Rat::one(), &Rat::zero());
            let f2 = laguerre(m2, &(-alpha.clone()));
            let z = Poly::z();
            let z_plus_a = Poly::from_coeffs(vec![alpha.clone(), Rat::one()]);
            let g = &(&z * &wronskian2(&f1, &f2)) - &(&z_plus_a * &(&f1 * &f2));
            let mu = m1 + m2 + 1;
            debug_assert_eq!(g.degree(), Some(mu));
            Ok((g, mu))
        }
    }
}

/// Degree of the denominator polynomial for a `k`-step construction with
/// `q` type-I seeds (listed first) and `k - q` type-II seeds:
/// `mu = sum m_i - q(q-1)/2 - (k-q)(k-q-1)/2 + q(k-q)`.
pub fn degree_mu(q: usize, k: usize, m: &[usize]) -> Result<usize> {
    if q > k || m.len() != k {
        return Err(Error::InvalidIndices(format!(
            "need q <= k and {k} indices, got q={q}, {} indices",
            m.len()
        )));
    }
    let strictly_increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
    if m.contains(&0)
        || !strictly_increasing(&m[..q])
        || !strictly_increasing(&m[q..])
    {
        return Err(Error::InvalidIndices(
            "indices must be >= 1 and strictly increasing within each type".into(),
        ));
    }
    let sum: usize = m.iter().sum();
    let p = k - q;
    let total = sum + q * p;
    let sub = q * q.saturating_sub(1) / 2 + p * p.saturating_sub(1) / 2;
    total.checked_sub(sub).ok_or_else(|| {
        Error::InvalidIndices("degree formula went negative; indices too small".into())
    })
}

/// Expected leading coefficient `(-1)^n / ((n - mu)! prod m_i!)`.
fn expected_leading(n: usize, mu: usize, ms: &[usize]) -> Rat {
    let mut denom = Rat::one();
    for j in 2..=(n - mu) {
        denom *= rat_int(j as i64);
    }
    for &m in ms {
        for j in 2..=m {
            denom *= rat_int(j as i64);
        }
    }
    let sign = if n.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    sign / denom
}

/// `X_m` polynomial of degree `n = m + nu` from a single seed.
///
/// For `m = 1` both kinds reduce exactly to the `X_1` family.
pub fn eop_first_order(kind: SeedKind, alpha: &Rat, m: usize, nu: usize) -> Result<EOPoly> {
    let g = seed_poly(kind, alpha, m)?;
    let g_dot = g.derivative();
    let n = m + nu;
    let poly = match kind {
        SeedKind::TypeI => {
            let l = laguerre(nu, &(alpha - Rat::one()));
            let raw = &(&g * &(&l.derivative() - &l)) - &(&g_dot * &l);
            let sign = if (m - 1).is_multiple_of(2) { Rat::one() } else { -Rat::one() };
            raw.scale(&sign)
        }
        SeedKind::TypeII => {
            let norm = alpha + rat_int(nu as i64) + Rat::one() - rat_int(m as i64);
            if norm.is_zero() {
                return Err(Error::DegenerateNormalization(format!(
                    "alpha + nu + 1 - m = 0 at alpha={alpha}, m={m}, nu={nu}"
                )));
            }
            let l = laguerre(nu, &(alpha + Rat::one()));
            let z = Poly::z();
            let raw = &(&g * &(&(&z * &l.derivative()) + &l.scale(&(alpha + Rat::one()))))
                - &(&(&z * &g_dot) * &l);
            raw.scale(&norm.recip())
        }
    };
    debug_assert_eq!(poly.degree(), Some(n));
    debug_assert_eq!(poly.leading(), expected_leading(n, m, &[m]));
    Ok(EOPoly {
        family: EopFamily::FirstOrder(kind),
        alpha: alpha.clone(),
        indices: vec![SeedIndex { kind, m }],
        n,
        poly,
    })
}

/// Two-index `X_{m1,m2}` polynomial of degree `n = mu + nu`, built by a
/// first-order operator acting on the matching `X_{m1}` polynomial. The
/// polynomial division inside the operator must be exact; a nonzero
/// remainder signals a bug or an invalid parameter set and is an error.
pub fn eop_second_order(
    case: PairCase,
    alpha: &Rat,
    m1: usize,
    m2: usize,
    nu: usize,
) -> Result<EOPoly> {
    let (g_mu, mu) = g_mu_ssusy(case, alpha, m1, m2)?;
    let g_dot = g_mu.derivative();
    let n = mu + nu;

    // The inner one-step polynomial lives at the intermediate level
    // (alpha - 1 when both seeds are type I, alpha + 1 otherwise), matching
    // the denominator the operator divides by.
    let (inner, divisor, prefactor) = match case {
        PairCase::BothI => {
            let down = alpha - Rat::one();
            let inner = eop_first_order(SeedKind::TypeI, &down, m1, nu)?;
            let divisor = seed_poly(SeedKind::TypeI, &down, m1)?;
            let sign = if m2.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
            let pref = sign / (rat_int(m2 as i64) - rat_int(m1 as i64));
            (inner, divisor, pref)
        }
        PairCase::BothII => {
            let up = alpha + Rat::one();
            let inner = eop_first_order(SeedKind::TypeII, &up, m1, nu)?;
            let divisor = seed_poly(SeedKind::TypeII, &up, m1)?;
            let norm = alpha + rat_int(nu as i64) + rat_int(2) - rat_int(m2 as i64);
            if norm.is_zero() {
                return Err(Error::DegenerateNormalization(format!(
                    "alpha + nu + 2 - m2 = 0 at alpha={alpha}, m2={m2}, nu={nu}"
                )));
            }
            let pref = -Rat::one() / (norm * (rat_int(m2 as i64) - rat_int(m1 as i64)));
            (inner, divisor, pref)
        }
        PairCase::Mixed => {
            let up = alpha + Rat::one();
            let inner = eop_first_order(SeedKind::TypeI, &up, m1, nu)?;
            let divisor = seed_poly(SeedKind::TypeI, &up, m1)?;
            let norm = alpha + rat_int(nu as i64) - rat_int(m2 as i64);
            if norm.is_zero() {
                return Err(Error::DegenerateNormalization(format!(
                    "alpha + nu - m2 = 0 at alpha={alpha}, m2={m2}, nu={nu}"
                )));
            }
            (inner, divisor, norm.recip())
        }
    };

    let y = &inner.poly;
    let numerator = match case {
        PairCase::BothI => &(&g_mu * &(&y.derivative() - y)) - &(&g_dot * y),
        PairCase::BothII | PairCase::Mixed => {
            let z = Poly::z();
            &(&g_mu * &(&(&z * &y.derivative()) + &y.scale(&(alpha + Rat::one()))))
                - &(&(&z * &g_dot) * y)
        }
    };
    let (quotient, remainder) = numerator.divrem(&divisor);
    if !remainder.is_zero() {
        return Err(Error::FactorizationFailure(format!(
            "operator division left remainder for case {case:?}, m1={m1}, m2={m2}, nu={nu}"
        )));
    }
    let poly = quotient.scale(&prefactor);
    debug_assert_eq!(poly.degree(), Some(n));
    debug_assert_eq!(poly.leading(), expected_leading(n, mu, &[m1, m2]));
    let (k1, k2) = match case {
        PairCase::BothI => (SeedKind::TypeI, SeedKind::TypeI),
        PairCase::BothII => (SeedKind::TypeII, SeedKind::TypeII),
        PairCase::Mixed => (SeedKind::TypeI, SeedKind::TypeII),
    };
    Ok(EOPoly {
        family: EopFamily::SecondOrder(case),
        alpha: alpha.clone(),
        indices: vec![SeedIndex { kind: k1, m: m1 }, SeedIndex { kind: k2, m: m2 }],
        n,
        poly,
    })
}

/// Denominator-cleared residual of the exceptional equation with
/// denominator polynomial `g` of degree `mu`:
///
/// `z g y'' + (alpha + 1 - z) g y' - 2 z g' y' + [(z - alpha) g' + z g''] y
///  - (mu - n) g y`.
///
/// The contract is that this is the zero polynomial for every constructed
/// family member (`mu = 0`, `g = 1` recovers the classical equation).
pub fn eop_ode_residual(g: &Poly, mu: usize, alpha: &Rat, y: &Poly, n: usize) -> Poly {
    let z = Poly::z();
    let g_dot = g.derivative();
    let g_ddot = g_dot.derivative();
    let y1 = y.derivative();
    let y2 = y1.derivative();

    let lin = Poly::from_coeffs(vec![alpha + Rat::one(), -Rat::one()]);
    let z_minus_a = Poly::from_coeffs(vec![-alpha.clone(), Rat::one()]);

    let t1 = &(&z * g) * &y2;
    let t2 = &(&lin * g) * &y1;
    let t3 = (&(&z * &g_dot) * &y1).scale(&rat_int(2));
    let t4 = &(&(&z_minus_a * &g_dot) + &(&z * &g_ddot)) * y;
    let t5 = (g * y).scale(&(rat_int(mu as i64) - rat_int(n as i64)));
    &(&(&(&t1 + &t2) - &t3) + &t4) - &t5
}

/// Label a provenance for reports.
fn provenance_label(p: &GProvenance) -> String {
    match p {
        GProvenance::First(SeedKind::TypeI, m) => format!("I:{m}"),
        GProvenance::First(SeedKind::TypeII, m) => format!("II:{m}"),
        GProvenance::Second(PairCase::BothI, m1, m2) => format!("I-I:{m1},{m2}"),
        GProvenance::Second(PairCase::BothII, m1, m2) => format!("II-II:{m1},{m2}"),
        GProvenance::Second(PairCase::Mixed, m1, m2) => format!("I-II:{m1},{m2}"),
    }
}

/// Where a denominator polynomial candidate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GProvenance {
    First(SeedKind, usize),
    Second(PairCase, usize, usize),
}

impl GProvenance {
    /// Construct the candidate polynomial at a concrete `alpha`.
    pub fn poly_at(&self, alpha: &Rat) -> Result<Poly> {
        match self {
            GProvenance::First(kind, m) => seed_poly(*kind, alpha, *m),
            GProvenance::Second(case, m1, m2) => {
                g_mu_ssusy(*case, alpha, *m1, *m2).map(|(g, _)| g)
            }
        }
    }

    pub fn mu(&self) -> usize {
        match self {
            GProvenance::First(_, m) => *m,
            GProvenance::Second(PairCase::Mixed, m1, m2) => m1 + m2 + 1,
            GProvenance::Second(_, m1, m2) => m1 + m2 - 1,
        }
    }
}

/// One equivalence class of proportional denominator polynomials.
#[derive(Debug, Clone)]
pub struct CoincidenceClass {
    pub mu: usize,
    /// Sorted member labels such as `"I:2"` or `"I-II:1,1"`.
    pub members: Vec<String>,
    /// Monic representative at the display alpha.
    pub canonical: Poly,
}

#[derive(Debug, Clone)]
pub struct CoincidenceReport {
    pub max_mu: usize,
    /// Concrete alpha, or `None` for the symbolic (generic-alpha) grouping.
    pub alpha: Option<Rat>,
    pub classes: Vec<CoincidenceClass>,
    /// `(mu, distinct class count)` for each degree up to `max_mu`.
    pub distinct_per_degree: Vec<(usize, usize)>,
}

/// Group every first- and second-order denominator polynomial of degree
/// `<= max_mu` into proportionality classes.
///
/// With a concrete `alpha` the grouping is exact rational proportionality at
/// that value. With `None` two candidates coincide only when they are
/// proportional as polynomials in `z` with coefficients rational in alpha,
/// decided by exact evaluation at `2 max_mu + 3` generic sample values
/// (enough to separate the bounded-degree coefficient polynomials).
pub fn detect_coincidences(alpha: Option<&Rat>, max_mu: usize) -> Result<CoincidenceReport> {
    if max_mu == 0 || max_mu > 6 {
        return Err(Error::InvalidParameter(
            "coincidence scan supports 1 <= max_mu <= 6".into(),
        ));
    }
    let mut candidates = Vec::new();
    for m in 1..=max_mu {
        candidates.push(GProvenance::First(SeedKind::TypeI, m));
        candidates.push(GProvenance::First(SeedKind::TypeII, m));
    }
    for m1 in 1..=max_mu {
        for m2 in (m1 + 1)..=max_mu {
            if m1 + m2 - 1 <= max_mu {
                candidates.push(GProvenance::Second(PairCase::BothI, m1, m2));
                candidates.push(GProvenance::Second(PairCase::BothII, m1, m2));
            }
        }
    }
    for m1 in 1..=max_mu {
        for m2 in 1..=max_mu {
            if m1 + m2 < max_mu {
                candidates.push(GProvenance::Second(PairCase::Mixed, m1, m2));
            }
        }
    }

    let samples: Vec<Rat> = match alpha {
        Some(a) => vec![a.clone()],
        None => (0..(2 * max_mu + 3))
            .map(|j| rat_int(10 + j as i64) + rat(1, 3))
            .collect(),
    };
    let display_alpha = alpha.cloned().unwrap_or_else(|| rat(3, 2));

    // Evaluate every candidate at every sample once, in parallel.
    let tables: Vec<(GProvenance, Vec<Poly>)> = crate::par::map_collect(candidates, |c| {
        let polys = samples
            .iter()
            .map(|a| c.poly_at(a).expect("candidate construction is total here"))
            .collect();
        (c, polys)
    });

    // Group by proportionality at all samples.
    let mut groups: Vec<(GProvenance, Vec<Poly>, Vec<String>)> = Vec::new();
    for (prov, polys) in tables {
        let label = provenance_label(&prov);
        let mut placed = false;
        for (_, rep_polys, members) in groups.iter_mut() {
            if rep_polys.len() == polys.len()
                && rep_polys
                    .iter()
                    .zip(polys.iter())
                    .all(|(a, b)| a.proportional_to(b))
            {
                members.push(label.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push((prov, polys, vec![label]));
        }
    }

    let mut classes: Vec<CoincidenceClass> = groups
        .into_iter()
        .map(|(prov, _, mut members)| {
            members.sort();
            let canonical = prov
                .poly_at(&display_alpha)
                .expect("display construction is total")
                .monic();
            CoincidenceClass {
                mu: prov.mu(),
                members,
                canonical,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.mu, a.canonical.coeffs())
            .partial_cmp(&(b.mu, b.canonical.coeffs()))
            .expect("rational coefficients are totally ordered")
    });

    let mut per_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &classes {
        *per_degree.entry(c.mu).or_insert(0) += 1;
    }
    let distinct_per_degree = (1..=max_mu)
        .map(|mu| (mu, per_degree.get(&mu).copied().unwrap_or(0)))
        .collect();
    Ok(CoincidenceReport {
        max_mu,
        alpha: alpha.cloned(),
        classes,
        distinct_per_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre::x1_laguerre;

    fn a32() -> Rat {
        rat(3, 2)
    }

    /// The printed cubic `[z^3 + 3 a z^2 + 3(a-1)(a+1) z + (a-1)a(a+1)] / 3`.
    fn g3(alpha: &Rat) -> Poly {
        let a = alpha.clone();
        Poly::from_coeffs(vec![
            (&a - Rat::one()) * &a * (&a + Rat::one()) / rat_int(3),
            (&a - Rat::one()) * (&a + Rat::one()),
            a.clone(),
            rat(1, 3),
        ])
    }

    #[test]
    fn seed_poly_values() {
        let a = rat(7, 3);
        // type I m=1: z + a
        assert_eq!(
            seed_poly(SeedKind::TypeI, &a, 1).unwrap(),
            Poly::from_coeffs(vec![a.clone(), Rat::one()])
        );
        // type II m=1: -z - a
        assert_eq!(
            seed_poly(SeedKind::TypeII, &a, 1).unwrap(),
            Poly::from_coeffs(vec![-a.clone(), -Rat::one()])
        );
        // type I m=2: [z^2 + 2(a+1) z + a(a+1)] / 2
        assert_eq!(
            seed_poly(SeedKind::TypeI, &a, 2).unwrap(),
            Poly::from_coeffs(vec![
                &a * (&a + Rat::one()) / rat_int(2),
                &a + Rat::one(),
                rat(1, 2)
            ])
        );
        // type II m=2: [z^2 + 2(a-1) z + a(a-1)] / 2
        assert_eq!(
            seed_poly(SeedKind::TypeII, &a, 2).unwrap(),
            Poly::from_coeffs(vec![
                &a * (&a - Rat::one()) / rat_int(2),
                &a - Rat::one(),
                rat(1, 2)
            ])
        );
        assert!(seed_poly(SeedKind::TypeI, &a, 0).is_err());
    }

    #[test]
    fn mixed_pair_gives_three_g3() {
        for a in [a32(), rat(7, 3), rat(9, 2)] {
            let (g, mu) = g_mu_ssusy(PairCase::Mixed, &a, 1, 1).unwrap();
            assert_eq!(mu, 3);
            // (z+a)^3 - (z+a) - 2z = 3 g_3
            assert_eq!(g, g3(&a).scale(&rat_int(3)));
        }
    }

    #[test]
    fn both_i_low_pair_coincides_with_type_ii_seed() {
        // Pair (1,2) of type I reproduces the type II m=2 seed polynomial.
        for a in [a32(), rat(7, 3)] {
            let (g, mu) = g_mu_ssusy(PairCase::BothI, &a, 1, 2).unwrap();
            assert_eq!(mu, 2);
            assert_eq!(g, seed_poly(SeedKind::TypeII, &a, 2).unwrap());
        }
    }

    #[test]
    fn both_i_next_pair_is_exactly_g3() {
        // Pair (1,3) of type I lands on the printed cubic with constant 1.
        for a in [a32(), rat(7, 3)] {
            let (g, mu) = g_mu_ssusy(PairCase::BothI, &a, 1, 3).unwrap();
            assert_eq!(mu, 3);
            assert_eq!(g, g3(&a));
        }
    }

    #[test]
    fn both_ii_degree_and_ordering() {
        let (g, mu) = g_mu_ssusy(PairCase::BothII, &a32(), 1, 2).unwrap();
        assert_eq!(mu, 2);
        assert_eq!(g.degree(), Some(2));
        assert!(g_mu_ssusy(PairCase::BothI, &a32(), 2, 2).is_err());
        assert!(g_mu_ssusy(PairCase::BothII, &a32(), 3, 1).is_err());
    }

    #[test]
    fn degree_formula() {
        assert_eq!(degree_mu(1, 1, &[4]).unwrap(), 4);
        assert_eq!(degree_mu(2, 2, &[1, 2]).unwrap(), 2);
        assert_eq!(degree_mu(0, 2, &[1, 2]).unwrap(), 2);
        assert_eq!(degree_mu(1, 2, &[1, 1]).unwrap(), 3);
        assert_eq!(degree_mu(2, 3, &[1, 2, 1]).unwrap(), 5);
        assert!(degree_mu(2, 2, &[2, 1]).is_err());
        assert!(degree_mu(3, 2, &[1, 2]).is_err());
        assert!(degree_mu(1, 1, &[0]).is_err());
    }

    #[test]
    fn first_order_reduces_to_x1() {
        for kind in [SeedKind::TypeI, SeedKind::TypeII] {
            for nu in 0..=10 {
                let e = eop_first_order(kind, &a32(), 1, nu).unwrap();
                assert_eq!(e.poly, x1_laguerre(nu + 1, &a32()).unwrap(), "{kind:?} nu={nu}");
                assert_eq!(e.n, nu + 1);
            }
        }
    }

    #[test]
    fn first_order_ground_state_matches_shifted_seed() {
        // nu = 0 member is proportional to the same seed at alpha + 1.
        for kind in [SeedKind::TypeI, SeedKind::TypeII] {
            for m in 1..=4 {
                let e = eop_first_order(kind, &a32(), m, 0).unwrap();
                let shifted = seed_poly(kind, &(a32() + Rat::one()), m).unwrap();
                assert!(
                    e.poly.proportional_to(&shifted),
                    "{kind:?} m={m}: {:?} vs {:?}",
                    e.poly,
                    shifted
                );
            }
        }
    }

    #[test]
    fn type_ii_degenerate_normalization_is_loud() {
        // alpha + nu + 1 - m = 0 at alpha = 1, m = 2, nu = 0.
        let err = eop_first_order(SeedKind::TypeII, &rat_int(1), 2, 0).unwrap_err();
        assert!(matches!(err, Error::DegenerateNormalization(_)));
    }

    #[test]
    fn second_order_ground_state_is_shifted_g3() {
        let e = eop_second_order(PairCase::Mixed, &a32(), 1, 1, 0).unwrap();
        assert_eq!(e.n, 3);
        let up = a32() + Rat::one();
        assert!(e.poly.proportional_to(&g3(&up)));
    }

    #[test]
    fn second_order_coincidence_equals_first_order() {
        // BothI (1,2) has the type II m=2 denominator, so the two-step
        // polynomial must coincide with the one-step type II X_2 exactly.
        let a = rat(5, 2);
        for nu in 0..=3 {
            let two = eop_second_order(PairCase::BothI, &a, 1, 2, nu).unwrap();
            let one = eop_first_order(SeedKind::TypeII, &a, 2, nu).unwrap();
            assert_eq!(two.poly, one.poly, "nu={nu}");
        }
    }

    #[test]
    fn second_order_satisfies_the_equation() {
        let a = rat(7, 2);
        let (g, mu) = g_mu_ssusy(PairCase::BothII, &a, 1, 2).unwrap();
        let e = eop_second_order(PairCase::BothII, &a, 1, 2, 3).unwrap();
        assert_eq!(e.n, 5);
        assert!(eop_ode_residual(&g, mu, &a, &e.poly, e.n).is_zero());
    }

    #[test]
    fn ode_residual_specializations() {
        // mu = 1, g = z + alpha: the X_1 equation.
        let g = seed_poly(SeedKind::TypeI, &a32(), 1).unwrap();
        let y = x1_laguerre(1, &a32()).unwrap();
        assert!(eop_ode_residual(&g, 1, &a32(), &y, 1).is_zero());

        // mu = 3 member of the mixed family at nu = 2.
        let (g3raw, mu) = g_mu_ssusy(PairCase::Mixed, &a32(), 1, 1).unwrap();
        let e = eop_second_order(PairCase::Mixed, &a32(), 1, 1, 2).unwrap();
        assert_eq!(e.n, 5);
        assert!(eop_ode_residual(&g3raw, mu, &a32(), &e.poly, e.n).is_zero());

        // mu = 0, g = 1: classical equation.
        for n in 0..=6 {
            let l = laguerre(n, &a32());
            assert!(eop_ode_residual(&Poly::one(), 0, &a32(), &l, n).is_zero());
        }
    }

    #[test]
    fn coincidence_counts_low_degrees() {
        let report = detect_coincidences(None, 3).unwrap();
        assert_eq!(report.distinct_per_degree, vec![(1, 1), (2, 2), (3, 3)]);
        // Same counts at the physical alpha = 3/2.
        let concrete = detect_coincidences(Some(&a32()), 3).unwrap();
        assert_eq!(concrete.distinct_per_degree, vec![(1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn coincidence_classes_are_deterministic() {
        let a = detect_coincidences(None, 4).unwrap();
        let b = detect_coincidences(None, 4).unwrap();
        let fmt = |r: &CoincidenceReport| {
            r.classes
                .iter()
                .map(|c| format!("{}:{}", c.mu, c.members.join("+")))
                .collect::<Vec<_>>()
                .join(";")
        };
        assert_eq!(fmt(&a), fmt(&b));
        assert!(detect_coincidences(None, 7).is_err());
    }
}
