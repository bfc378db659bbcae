//! Adaptive quadrature on the half-line (0, oo).
//!
//! The integral is mapped onto (0, 1) by `z = t / (1 - t)` and integrated by
//! globally adaptive bisection with paired Gauss-Legendre rules (7 and 15
//! points); the error estimate of an interval is the difference between the
//! two rules.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    /// False when the subdivision budget ran out before the tolerance was
    /// met; never silently dropped.
    pub converged: bool,
    pub evaluations: usize,
}

/// Nodes and weights of one Gauss-Legendre rule on (-1, 1).
type GaussRule = Vec<(f64, f64)>;

/// Gauss-Legendre nodes/weights, computed once by Newton iteration on the
/// Legendre recurrence.
fn gauss_rule(n: usize) -> GaussRule {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // Tricomi initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((x, w));
    }
    rule.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    rule
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn rules() -> &'static (GaussRule, GaussRule) {
    static RULES: OnceLock<(GaussRule, GaussRule)> = OnceLock::new();
    RULES.get_or_init(|| (gauss_rule(7), gauss_rule(15)))
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
    }
}

fn eval_segment<F: Fn(f64) -> f64>(g: &F, a: f64, b: f64, evals: &mut usize) -> Segment {
    let (lo_rule, hi_rule) = rules();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut lo = 0.0;
    for &(x, w) in lo_rule {
        lo += w * g(mid + half * x);
    }
    let mut hi = 0.0;
    for &(x, w) in hi_rule {
        hi += w * g(mid + half * x);
    }
    *evals += lo_rule.len() + hi_rule.len();
    Segment {
        a,
        b,
        value: hi * half,
        error: (hi - lo).abs() * half,
    }
}

/// Integrate `f` over (0, oo).
///
/// `tol` is treated as absolute for order-one integrals and relative for
/// large ones: convergence requires the accumulated error estimate to fall
/// below `tol * max(1, |value|)`.
pub fn integrate_halfline<F: Fn(f64) -> f64>(f: F, tol: f64) -> QuadResult {
    // Pull back to t in (0,1): z = t/(1-t), dz = dt/(1-t)^2.
    let g = |t: f64| {
        let u = 1.0 - t;
        let z = t / u;
        let v = f(z) / (u * u);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };

    const MAX_SEGMENTS: usize = 4096;
    let mut evals = 0usize;
    let mut heap = BinaryHeap::new();
    // Seed with a few segments so the peak of e^{-z}-type weights is seen.
    for k in 0..4 {
        heap.push(eval_segment(&g, 0.25 * k as f64, 0.25 * (k + 1) as f64, &mut evals));
    }
    let mut segments = 4usize;
    loop {
        let value: f64 = heap.iter().map(|s| s.value).sum();
        let error: f64 = heap.iter().map(|s| s.error).sum();
        if error <= tol * value.abs().max(1.0) {
            return QuadResult {
                value,
                error_estimate: error,
                converged: true,
                evaluations: evals,
            };
        }
        if segments >= MAX_SEGMENTS {
            return QuadResult {
                value,
                error_estimate: error,
                converged: false,
                evaluations: evals,
            };
        }
        let worst = heap.pop().expect("heap non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(eval_segment(&g, worst.a, mid, &mut evals));
        heap.push(eval_segment(&g, mid, worst.b, &mut evals));
        segments += 1;
    }
}

/// Pairwise integrals `int y_i y_j z^alpha e^{-z} / g^2 dz` over (0, oo)
/// for a family of polynomials: the Gram matrix of the weighted inner
/// product. Pairs fan out in parallel (feature-gated); entries are
/// deterministic either way because each integral is computed independently.
pub fn weighted_gram_matrix(
    polys: &[crate::algebra::Poly],
    g: &crate::algebra::Poly,
    alpha: f64,
    tol: f64,
) -> Vec<Vec<QuadResult>> {
    let pairs: Vec<(usize, usize)> = (0..polys.len())
        .flat_map(|i| (i..polys.len()).map(move |j| (i, j)))
        .collect();
    let entries = crate::par::map_collect(pairs, |(i, j)| {
        ((i, j), gram_entry(&polys[i], &polys[j], g, alpha, tol))
    });
    assemble_gram(polys.len(), entries)
}

/// Sequential twin of [`weighted_gram_matrix`] for benchmarking the
/// parallel speedup.
pub fn weighted_gram_matrix_seq(
    polys: &[crate::algebra::Poly],
    g: &crate::algebra::Poly,
    alpha: f64,
    tol: f64,
) -> Vec<Vec<QuadResult>> {
    let pairs: Vec<(usize, usize)> = (0..polys.len())
        .flat_map(|i| (i..polys.len()).map(move |j| (i, j)))
        .collect();
    let entries = crate::par::map_collect_seq(pairs, |(i, j)| {
        ((i, j), gram_entry(&polys[i], &polys[j], g, alpha, tol))
    });
    assemble_gram(polys.len(), entries)
}

fn gram_entry(
    yi: &crate::algebra::Poly,
    yj: &crate::algebra::Poly,
    g: &crate::algebra::Poly,
    alpha: f64,
    tol: f64,
) -> QuadResult {
    integrate_halfline(
        |z| {
            let w = (alpha * z.ln() - z).exp();
            let gg = g.eval_f64(z);
            w * yi.eval_f64(z) * yj.eval_f64(z) / (gg * gg)
        },
        tol,
    )
}

fn assemble_gram(n: usize, entries: Vec<((usize, usize), QuadResult)>) -> Vec<Vec<QuadResult>> {
    let placeholder = QuadResult {
        value: 0.0,
        error_estimate: 0.0,
        converged: false,
        evaluations: 0,
    };
    let mut out = vec![vec![placeholder; n]; n];
    for ((i, j), r) in entries {
        out[i][j] = r;
        out[j][i] = r;
    }
    out
}
