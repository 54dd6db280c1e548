//! Quadrature rules used by the numerical cross-checks.
//!
//! Gauss-Legendre and Gauss-Laguerre nodes come from Newton iteration on the
//! recurrence-evaluated polynomials; both constructions are self-contained so
//! the oracle side shares no code with the closed forms it validates. The
//! tanh-sinh rule handles angular integrands with endpoint singularities
//! (the weight sin(theta)^{4 zeta} has unbounded derivatives at the poles
//! once its exponent is fractional).

use crate::error::{Error, Result};

/// Which family of nodes and weights a rule carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadKind {
    /// Nodes on (-1, 1), weight 1.
    GaussLegendre,
    /// Nodes on (0, inf), weight exp(-x).
    GaussLaguerre,
}

/// Nodes and weights for a fixed-order rule.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub kind: QuadKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Weighted sum of `f` over the rule's own nodes.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Gauss-Legendre rule mapped onto the interval [a, b].
    pub fn integrate_on(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        debug_assert_eq!(self.kind, QuadKind::GaussLegendre);
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        half * self.integrate(|t| f(mid + half * t))
    }
}

/// Build a rule of the requested kind and order (order >= 2).
pub fn make_quadrature(kind: QuadKind, order: usize) -> Result<QuadratureRule> {
    if order < 2 {
        return Err(Error::Domain(format!(
            "quadrature order must be at least 2, got {order}"
        )));
    }
    let (nodes, weights) = match kind {
        QuadKind::GaussLegendre => gauss_legendre(order),
        QuadKind::GaussLaguerre => gauss_laguerre(order),
    };
    Ok(QuadratureRule {
        kind,
        nodes,
        weights,
    })
}

/// Legendre P_n(x) and its derivative by upward recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let deriv = if n == 0 {
        0.0
    } else {
        n as f64 * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, deriv)
}

fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    // Roots are symmetric about zero: solve the upper half, mirror the rest.
    let half = n.div_ceil(2);
    for i in 0..half {
        // Chebyshev-style initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pair(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (_, d2) = legendre_pair(n, x);
                dp = d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        // Odd order: the middle node is exactly zero.
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_pair(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

/// Laguerre L_n(x) (alpha = 0) by upward recurrence.
fn laguerre_value(n: usize, x: f64) -> f64 {
    let mut l0 = 1.0;
    if n == 0 {
        return l0;
    }
    let mut l1 = 1.0 - x;
    for k in 2..=n {
        let kf = k as f64;
        let l2 = ((2.0 * kf - 1.0 - x) * l1 - (kf - 1.0) * l0) / kf;
        l0 = l1;
        l1 = l2;
    }
    l1
}

fn gauss_laguerre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    let mut z = 0.0;
    for i in 0..n {
        // Stroud-Secrest style initial guesses, refined by Newton.
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * nf),
            1 => z + 15.0 / (1.0 + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2])
            }
        };
        for _ in 0..200 {
            let l = laguerre_value(n, z);
            // x L_n'(x) = n L_n(x) - n L_{n-1}(x)
            let lm = laguerre_value(n - 1, z);
            let d = nf * (l - lm) / z;
            let dz = l / d;
            z -= dz;
            if dz.abs() < 1e-14 * z.max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        let lnext = laguerre_value(n + 1, z);
        weights[i] = z / ((nf + 1.0) * (nf + 1.0) * lnext * lnext);
    }
    (nodes, weights)
}

/// Integrate f on (a, b) with a tanh-sinh (double exponential) rule.
///
/// Node count grows with `level`; endpoint singularities that are integrable
/// are handled without special casing because nodes approach the endpoints
/// double-exponentially fast and weights decay to match.
pub(crate) fn tanh_sinh(a: f64, b: f64, level: u32, f: impl Fn(f64) -> f64) -> f64 {
    let half = 0.5 * (b - a);
    let h = 3.0 / f64::from(1u32 << level);
    let mut sum = 0.0;
    // Past |t| ~ 6 the endpoint distances underflow; nothing to add there.
    let kmax = (6.0 / h).ceil() as i64;
    for k in -kmax..=kmax {
        let t = h * k as f64;
        let w = 0.5 * std::f64::consts::PI * t.sinh();
        let du = 0.5 * std::f64::consts::PI * t.cosh() / w.cosh().powi(2);
        // Place the node by its distance from the nearer endpoint:
        // 1 -+ tanh(w) = 2 / (1 + e^{+-2w}) avoids the cancellation that
        // would otherwise collapse nodes within ~1e-16 of an endpoint,
        // which is exactly where singular integrands carry their tail.
        let dist = half * 2.0 / (1.0 + (2.0 * w.abs()).exp());
        let x = if k < 0 { a + dist } else { b - dist };
        if !(dist > 0.0) || x <= a || x >= b {
            continue;
        }
        let term = f(x) * du;
        if term.is_finite() {
            sum += term;
        }
    }
    sum * h * half
}

/// Integrate f on [a, b] by splitting into `panels` equal panels, each handled
/// with the supplied Gauss-Legendre rule.
pub(crate) fn composite_legendre(
    rule: &QuadratureRule,
    a: f64,
    b: f64,
    panels: usize,
    f: impl Fn(f64) -> f64,
) -> f64 {
    debug_assert_eq!(rule.kind, QuadKind::GaussLegendre);
    let width = (b - a) / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let lo = a + width * p as f64;
        sum += rule.integrate_on(lo, lo + width, &f);
    }
    sum
}
