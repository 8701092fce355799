//! Symmetric tridiagonal eigenproblems with a constant off-diagonal.

/// `T = diag(d) + e (shift up + shift down)`.
pub(crate) struct SymTridiag<'a> {
    pub d: &'a [f64],
    pub e: f64,
}

impl SymTridiag<'_> {
    /// Number of eigenvalues strictly below `lambda` (negative pivots of
    /// the `LDL^T` factorization of `T - lambda I`).
    pub fn count_below(&self, lambda: f64) -> usize {
        let e2 = self.e * self.e;
        let tiny = f64::MIN_POSITIVE.sqrt() * (1.0 + lambda.abs());
        let mut count = 0;
        let mut q = 1.0;
        for (i, &di) in self.d.iter().enumerate() {
            q = if i == 0 { di - lambda } else { di - lambda - e2 / q };
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    pub fn gershgorin(&self) -> (f64, f64) {
        let r = 2.0 * self.e.abs();
        let lo = self.d.iter().cloned().fold(f64::INFINITY, f64::min) - r;
        let hi = self.d.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + r;
        (lo, hi)
    }

    /// Eigenvalue `k` (0-based, ascending) by bisection inside `[lo, hi]`.
    pub fn kth_eigenvalue(&self, k: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvector for an isolated eigenvalue by inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.d.len();
        let shift = lambda + 1e-10 * (1.0 + lambda.abs());
        let diag: Vec<f64> = self.d.iter().map(|d| d - shift).collect();
        let mut v: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.5 * ((i as f64) * 0.618_033_988_7).fract())
            .collect();
        for _ in 0..4 {
            v = solve_tridiag(&diag, self.e, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 || !norm.is_finite() {
                break;
            }
            v.iter_mut().for_each(|x| *x /= norm);
        }
        v
    }
}

/// Solves `(diag(d) + e (shift up + shift down)) x = b` by Gaussian
/// elimination with partial pivoting (the `gtsv` scheme).
fn solve_tridiag(d: &[f64], e: f64, b: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut dl = vec![e; n.saturating_sub(1)];
    let mut dd = d.to_vec();
    let mut du = vec![e; n.saturating_sub(1)];
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut x = b.to_vec();
    for i in 0..n.saturating_sub(1) {
        if dd[i].abs() >= dl[i].abs() {
            if dd[i] == 0.0 {
                dd[i] = f64::MIN_POSITIVE;
            }
            let f = dl[i] / dd[i];
            dd[i + 1] -= f * du[i];
            x[i + 1] -= f * x[i];
            dl[i] = 0.0;
        } else {
            let f = dd[i] / dl[i];
            dd[i] = dl[i];
            let tmp = dd[i + 1];
            dd[i + 1] = du[i] - f * tmp;
            du[i] = tmp;
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] = -f * du2[i];
            }
            x.swap(i, i + 1);
            x[i + 1] -= f * x[i];
        }
    }
    if n > 0 && dd[n - 1] == 0.0 {
        dd[n - 1] = f64::MIN_POSITIVE;
    }
    for i in (0..n).rev() {
        let mut s = x[i];
        if i + 1 < n {
            s -= du[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= du2[i] * x[i + 2];
        }
        x[i] = s / dd[i];
    }
    x
}
