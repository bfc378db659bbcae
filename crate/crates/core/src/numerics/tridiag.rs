//! Sturm-count bisection eigensolver for symmetric tridiagonal matrices.

/// Number of eigenvalues strictly less than `lambda`, via the LDL^T
/// factorization: negative pivots of `T - lambda I` count eigenvalues below.
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    debug_assert_eq!(off.len() + 1, diag.len().max(1));
    let mut count = 0usize;
    let mut q = 1.0_f64;
    for (i, d) in diag.iter().enumerate() {
        let off2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        // Guard tiny pivots so the recurrence cannot divide by zero.
        let q_safe = if q.abs() < f64::MIN_POSITIVE * 4.0 {
            if q >= 0.0 {
                f64::MIN_POSITIVE * 4.0
            } else {
                -f64::MIN_POSITIVE * 4.0
            }
        } else {
            q
        };
        q = (d - lambda) - off2 / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `k` eigenvalues in ascending order by bisection on Sturm counts.
///
/// The search window starts from a lower bound derived from Gershgorin disks
/// and grows upward until it contains `k` eigenvalues, so huge diagonal
/// entries (steep potential walls) do not inflate the bracket.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], k: usize) -> Vec<f64> {
    let n = diag.len();
    let k = k.min(n);
    if k == 0 {
        return Vec::new();
    }
    let mut lo = f64::MAX;
    for (i, d) in diag.iter().enumerate() {
        let e_left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let e_right = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(d - e_left - e_right);
    }
    lo -= 1.0;
    let mut hi = lo.max(0.0) + 1.0;
    while sturm_count(diag, off, hi) < k {
        hi = lo + 2.0 * (hi - lo);
    }

    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a) <= 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if sturm_count(diag, off, mid) <= j {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// Eigenvector for an already-located eigenvalue, by inverse iteration with
/// a slightly shifted Thomas solve. Returned with unit Euclidean norm.
pub fn eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    if n == 0 {
        return Vec::new();
    }
    let scale: f64 = diag.iter().fold(1.0, |m, d| m.max(d.abs()));
    let shift = lambda + 1e-12 * scale.max(1.0);
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..3 {
        // Thomas solve (T - shift I) w = v.
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut denom = diag[0] - shift;
        if denom.abs() < 1e-300 {
            denom = 1e-300;
        }
        if n > 1 {
            c[0] = off[0] / denom;
        }
        d[0] = v[0] / denom;
        for i in 1..n {
            let mut m = (diag[i] - shift) - off[i - 1] * c[i - 1];
            if m.abs() < 1e-300 {
                m = 1e-300;
            }
            if i < n - 1 {
                c[i] = off[i] / m;
            }
            d[i] = (v[i] - off[i - 1] * d[i - 1]) / m;
        }
        let mut w = vec![0.0; n];
        w[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            w[i] = d[i] - c[i] * w[i + 1];
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        for (vi, wi) in v.iter_mut().zip(w.iter()) {
            *vi = wi / norm;
        }
    }
    // Fix the overall sign: first significant component positive.
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-8) {
        if *first < 0.0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dense Jacobi-rotation eigensolver, used only as an oracle.
    #[allow(clippy::needless_range_loop)]
    fn jacobi_eigenvalues(mut m: Vec<Vec<f64>>) -> Vec<f64> {
        let n = m.len();
        for _sweep in 0..100 {
            let mut off_norm = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    off_norm += m[i][j] * m[i][j];
                }
            }
            if off_norm.sqrt() < 1e-14 {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    if m[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for i in 0..n {
                        let mip = m[i][p];
                        let miq = m[i][q];
                        m[i][p] = c * mip - s * miq;
                        m[i][q] = s * mip + c * miq;
                    }
                    for i in 0..n {
                        let mpi = m[p][i];
                        let mqi = m[q][i];
                        m[p][i] = c * mpi - s * mqi;
                        m[q][i] = s * mpi + c * mqi;
                    }
                }
            }
        }
        let mut evs: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
        evs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        evs
    }

    fn dense_from_tridiag(diag: &[f64], off: &[f64]) -> Vec<Vec<f64>> {
        let n = diag.len();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            m[i][i] = diag[i];
            if i + 1 < n {
                m[i][i + 1] = off[i];
                m[i + 1][i] = off[i];
            }
        }
        m
    }

    #[test]
    fn counts_on_a_2x2() {
        // [[1, -1], [-1, 3]]: eigenvalues 2 -+ sqrt(2)
        let d = [1.0, 3.0];
        let e = [-1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 4.0), 2);
    }

    #[test]
    fn toeplitz_chain_closed_form() {
        // d_i = 2, e_i = -1: eigenvalues 2 - 2 cos(j pi / (n+1))
        let n = 40;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let evs = lowest_eigenvalues(&d, &e, 5);
        for (j, ev) in evs.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((j + 1) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((ev - exact).abs() < 1e-11, "j={j}: {ev} vs {exact}");
        }
    }

    #[test]
    fn eigenvector_satisfies_the_pencil() {
        let n = 60;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let evs = lowest_eigenvalues(&d, &e, 2);
        for ev in evs {
            let v = eigenvector(&d, &e, ev);
            let mut max_res = 0.0_f64;
            for i in 0..n {
                let mut r = (d[i] - ev) * v[i];
                if i > 0 {
                    r += e[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    r += e[i] * v[i + 1];
                }
                max_res = max_res.max(r.abs());
            }
            assert!(max_res < 1e-8, "residual {max_res}");
        }
    }

    #[test]
    fn matches_dense_reference_on_random_50x50() {
        // Deterministic xorshift fill.
        let mut s = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for _case in 0..3 {
            let n = 50;
            let diag: Vec<f64> = (0..n).map(|_| 4.0 * next()).collect();
            let off: Vec<f64> = (0..n - 1).map(|_| 2.0 * next()).collect();
            let got = lowest_eigenvalues(&diag, &off, n);
            let want = jacobi_eigenvalues(dense_from_tridiag(&diag, &off));
            for (g, w) in got.iter().zip(want.iter()) {
                assert!((g - w).abs() < 1e-10, "{g} vs {w}");
            }
        }
    }
}
