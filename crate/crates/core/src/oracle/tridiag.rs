//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for selected
//! eigenvalues, inverse iteration for eigenvectors. Both finite-difference
//! oracles reduce to this problem, and bisection is bit-for-bit
//! deterministic, which keeps the cross-check values reproducible.

/// Matrix with `diag` on the main diagonal and `off` (one shorter) on the
/// sub/superdiagonal.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert!(!diag.is_empty());
        assert_eq!(off.len() + 1, diag.len());
        SymTridiag { diag, off }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below x (Sturm count via the LDL^T
    /// pivot signs).
    pub fn count_below(&self, x: f64) -> usize {
        let guard = 1e-300;
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if d == 0.0 {
            d = -guard;
        }
        if d < 0.0 {
            count += 1;
        }
        for i in 1..self.n() {
            d = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / d;
            if d == 0.0 {
                d = -guard;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin bounds containing every eigenvalue.
    fn bounds(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.n() {
            let mut radius = 0.0;
            if i > 0 {
                radius += self.off[i - 1].abs();
            }
            if i + 1 < self.n() {
                radius += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - radius);
            hi = hi.max(self.diag[i] + radius);
        }
        (lo, hi)
    }

    /// The `index`-th smallest eigenvalue (0-based) by bisection.
    pub fn eigenvalue(&self, index: usize) -> f64 {
        assert!(index < self.n());
        let (mut lo, mut hi) = self.bounds();
        for _ in 0..200 {
            // Tolerance tracks the shrinking bracket, not the full spectral
            // range: matrices with a huge norm but small target eigenvalues
            // (the log-grid discretization) still resolve to full precision.
            let tol = 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1e-300);
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break; // interval at floating-point resolution
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvector for an eigenvalue estimate, by two sweeps of inverse
    /// iteration with a pivoted tridiagonal solve. Returns the vector
    /// (Euclidean norm 1, first significant component positive) and the
    /// residual norm ||T v - lambda v||.
    pub fn eigenvector(&self, lambda: f64) -> (Vec<f64>, f64) {
        let n = self.n();
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        for _ in 0..2 {
            v = self.solve_shifted(lambda, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            for x in &mut v {
                *x /= norm;
            }
        }
        // Deterministic sign: first component that clearly participates.
        let peak = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if let Some(first) = v.iter().find(|x| x.abs() >= 1e-3 * peak) {
            if *first < 0.0 {
                for x in &mut v {
                    *x = -*x;
                }
            }
        }
        let r = self.multiply(&v);
        let residual = r
            .iter()
            .zip(&v)
            .map(|(ri, vi)| {
                let d = ri - lambda * vi;
                d * d
            })
            .sum::<f64>()
            .sqrt();
        (v, residual)
    }

    pub fn multiply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.n();
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut acc = self.diag[i] * v[i];
            if i > 0 {
                acc += self.off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                acc += self.off[i] * v[i + 1];
            }
            out[i] = acc;
        }
        out
    }

    /// Solve (T - lambda I) x = b by Gaussian elimination with partial
    /// pivoting; the shifted matrix is near-singular by design, so zero
    /// pivots are nudged to a tiny multiple of the matrix scale.
    fn solve_shifted(&self, lambda: f64, b: &[f64]) -> Vec<f64> {
        let n = self.n();
        // Bands of the shifted matrix: lower l, main d, upper u, and the
        // second superdiagonal w that pivoting can fill in.
        let mut d: Vec<f64> = self.diag.iter().map(|x| x - lambda).collect();
        let mut u = self.off.clone();
        let mut w = vec![0.0; n.saturating_sub(2)];
        let mut rhs = b.to_vec();
        let scale = self
            .diag
            .iter()
            .map(|x| x.abs())
            .chain(self.off.iter().map(|x| x.abs()))
            .fold(0.0f64, f64::max)
            .max(1.0);
        let floor = 1e-290 * scale;

        for i in 0..n - 1 {
            let l = self.off[i];
            if l.abs() > d[i].abs() {
                // Swap rows i and i+1.
                rhs.swap(i, i + 1);
                let (di, ui) = (d[i], u[i]);
                d[i] = l;
                u[i] = d[i + 1];
                d[i + 1] = ui;
                if i + 2 < n {
                    w[i] = u[i + 1];
                    u[i + 1] = 0.0;
                }
                // Eliminate with what is now row i.
                let m = di / d[i];
                d[i + 1] -= m * u[i];
                if i + 2 < n {
                    u[i + 1] -= m * w[i];
                }
                rhs[i + 1] -= m * rhs[i];
            } else {
                let piv = if d[i].abs() < floor {
                    floor.copysign(if d[i] == 0.0 { 1.0 } else { d[i] })
                } else {
                    d[i]
                };
                d[i] = piv;
                let m = l / piv;
                d[i + 1] -= m * u[i];
                if i + 2 < n {
                    // No fill-in on the unswapped path.
                    w[i] = 0.0;
                }
                rhs[i + 1] -= m * rhs[i];
            }
        }
        if d[n - 1].abs() < floor {
            d[n - 1] = floor.copysign(if d[n - 1] == 0.0 { 1.0 } else { d[n - 1] });
        }

        // Back substitution.
        let mut x = vec![0.0; n];
        x[n - 1] = rhs[n - 1] / d[n - 1];
        if n >= 2 {
            x[n - 2] = (rhs[n - 2] - u[n - 2] * x[n - 1]) / d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            x[i] = (rhs[i] - u[i] * x[i + 1] - w[i] * x[i + 2]) / d[i];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Discrete Laplacian eigenvalues are 2 - 2 cos(k pi / (n+1)), known
    /// exactly.
    fn laplacian(n: usize) -> SymTridiag {
        SymTridiag::new(vec![2.0; n], vec![-1.0; n - 1])
    }

    #[test]
    fn laplacian_eigenvalues_exact() {
        let n = 50;
        let t = laplacian(n);
        for k in [0usize, 1, 5, 24, 49] {
            let want =
                2.0 - 2.0 * ((k as f64 + 1.0) * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            let got = t.eigenvalue(k);
            assert!((got - want).abs() < 1e-12, "lambda_{k}: {got} vs {want}");
        }
    }

    #[test]
    fn count_below_matches_known_spectrum() {
        let n = 20;
        let t = laplacian(n);
        // Eigenvalues lie in (0, 4); count at the midpoint equals how many
        // 2 - 2 cos(k pi / 21) fall below 2, which is 10 by symmetry.
        assert_eq!(t.count_below(2.0), 10);
        assert_eq!(t.count_below(-1.0), 0);
        assert_eq!(t.count_below(5.0), 20);
    }

    #[test]
    fn eigenvector_residual_and_sign() {
        let n = 80;
        let t = laplacian(n);
        for k in [0usize, 3, 17] {
            let lambda = t.eigenvalue(k);
            let (v, residual) = t.eigenvector(lambda);
            assert!(residual < 1e-10, "residual {residual} at index {k}");
            // Known eigenvector: sin((k+1) pi i / (n+1)), first lobe positive.
            assert!(v[0] > 0.0);
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn clustered_diagonal_matrix() {
        // Nearly decoupled wells: diagonal dominance, tiny couplings.
        let t = SymTridiag::new(vec![1.0, 1.0 + 1e-9, 4.0], vec![1e-12, 1e-12]);
        let a = t.eigenvalue(0);
        let b = t.eigenvalue(1);
        let c = t.eigenvalue(2);
        assert!(a <= b && b <= c);
        assert!((c - 4.0).abs() < 1e-9);
        let (v, residual) = t.eigenvector(c);
        assert!(residual < 1e-9);
        assert!(v[2].abs() > 0.999);
    }
}
