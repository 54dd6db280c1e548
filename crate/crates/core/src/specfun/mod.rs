//! Special functions: orthogonal polynomials, log-gamma, quadrature rules,
//! and the weighted integrals the normalization and information formulas
//! rest on.
//!
//! Every closed-form integral here has a numerical twin evaluated by
//! quadrature; tests hold the two against each other. Where a published
//! closed form is known to be wrong (a sign, a dropped factor), the
//! operation exposes both the verbatim value and the quadrature truth
//! rather than silently substituting one for the other.

pub mod gamma;
pub mod poly;
pub mod quad;

pub use gamma::{binomial_general, gamma_ratio, log_gamma};
pub use poly::{
    gegenbauer, gegenbauer_deriv, gegenbauer_recurrence_check, gegenbauer_weight_derivative_check,
    laguerre_assoc, laguerre_deriv,
};
pub use quad::{make_quadrature, QuadKind, QuadratureRule};

use crate::error::{Error, Result};
use poly::{gegenbauer_rec, laguerre_rec};
use std::f64::consts::PI;

/// exp() overflows past this; log-space results above it are reported
/// as overflow instead of returning inf.
const MAX_EXP_ARG: f64 = 709.0;

/// Exact value of int_{-1}^{1} (1 - x^2)^{v - 1/2} [C_n^v(x)]^2 dx
///   = pi 2^{1-2v} Gamma(2v + n) / (n! (n + v) Gamma(v)^2),
/// computed in log space; requires v > 0.
///
/// The convention check at (0, 1/2): the weight collapses to 1 and C_0 = 1,
/// so the integral is exactly 2, which is what this formula gives under the
/// standard Gegenbauer normalization. Quadrature confirms it.
pub fn gegenbauer_weighted_sq_integral(n: u32, v: f64) -> Result<f64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!(
            "weighted square integral needs v > 0, got {v}"
        )));
    }
    let nf = f64::from(n);
    let ln = PI.ln() + (1.0 - 2.0 * v) * 2f64.ln() + log_gamma(2.0 * v + nf)
        - log_gamma(nf + 1.0)
        - (nf + v).ln()
        - 2.0 * log_gamma(v);
    if ln > MAX_EXP_ARG {
        return Err(Error::Overflow(format!(
            "weighted square integral exceeds f64 range at n = {n}, v = {v} (log value {ln:.3})"
        )));
    }
    Ok(ln.exp())
}

/// The same integral evaluated by quadrature, with the x = cos(theta)
/// substitution: int_0^pi sin(theta)^{2v} C_n^v(cos theta)^2 dtheta.
/// The substitution makes the integrand smooth for every v > 0 (the
/// exponent 2v is positive), so composite Gauss-Legendre suffices.
pub fn gegenbauer_weighted_sq_quadrature(n: u32, v: f64) -> Result<f64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!(
            "weighted square quadrature needs v > 0, got {v}"
        )));
    }
    gegenbauer_theta_quadrature(n, v, 2.0 * v)
}

/// Verbatim closed form and quadrature value of the lowered-weight integral
/// int_{-1}^{1} (1 - x^2)^{v - 3/2} [C_n^v(x)]^2 dx.
#[derive(Debug, Clone, Copy)]
pub struct LowerIntegral {
    /// pi 2^{1-2v} Gamma(2v + n) / (n! (1/2 - v) Gamma(v)^2) exactly as
    /// published. Negative for every v > 1/2 although the integrand is a
    /// square; the (1/2 - v) factor carries the wrong sign.
    pub printed: f64,
    /// Ground truth by quadrature; always positive.
    pub quadrature: f64,
}

/// Both values of the lowered-weight integral; requires v > 1/2 (the
/// integral diverges otherwise).
pub fn gegenbauer_weighted_sq_integral_lower(n: u32, v: f64) -> Result<LowerIntegral> {
    if !(v > 0.5) {
        return Err(Error::Domain(format!(
            "lowered-weight integral diverges for v <= 1/2, got v = {v}"
        )));
    }
    let nf = f64::from(n);
    let ln_mag = PI.ln() + (1.0 - 2.0 * v) * 2f64.ln() + log_gamma(2.0 * v + nf)
        - log_gamma(nf + 1.0)
        - (v - 0.5).ln()
        - 2.0 * log_gamma(v);
    if ln_mag > MAX_EXP_ARG {
        return Err(Error::Overflow(format!(
            "lowered-weight integral exceeds f64 range at n = {n}, v = {v} (log value {ln_mag:.3})"
        )));
    }
    // (1/2 - v) < 0 here, so the verbatim value is -exp(ln_mag).
    let printed = -ln_mag.exp();
    // After x = cos(theta) the exponent is 2v - 2, which is negative for
    // v < 1: the substitution alone no longer removes the endpoint
    // singularity, so that range goes to the double-exponential rule.
    let quadrature = gegenbauer_theta_quadrature(n, v, 2.0 * v - 2.0)?;
    Ok(LowerIntegral {
        printed,
        quadrature,
    })
}

/// int_0^pi sin(theta)^expo C_n^v(cos theta)^2 dtheta with a refinement
/// check: the rule is re-run at doubled resolution and the two values must
/// agree to 1e-10 relative before either is trusted.
///
/// When expo is a nonnegative integer the substituted integrand is a
/// trigonometric polynomial and composite Gauss-Legendre is spectrally
/// exact. Any fractional exponent leaves algebraic behavior at the
/// endpoints, which the double-exponential rule absorbs instead.
fn gegenbauer_theta_quadrature(n: u32, v: f64, expo: f64) -> Result<f64> {
    let g = |th: f64| {
        let c = gegenbauer_rec(n, v, th.cos());
        th.sin().powf(expo) * c * c
    };
    let is_integer = expo >= 0.0 && (expo - expo.round()).abs() < 1e-12;
    let (coarse, fine) = if is_integer {
        let rule = make_quadrature(QuadKind::GaussLegendre, 64)?;
        let panels = 8 + n as usize;
        (
            quad::composite_legendre(&rule, 0.0, PI, panels, g),
            quad::composite_legendre(&rule, 0.0, PI, 2 * panels, g),
        )
    } else {
        (
            quad::tanh_sinh(0.0, PI, 7, g),
            quad::tanh_sinh(0.0, PI, 8, g),
        )
    };
    // The integrand is a square, so `fine` is also the natural error scale.
    if (fine - coarse).abs() > 1e-10 * fine.abs().max(1e-300) {
        return Err(Error::Convergence(format!(
            "theta quadrature did not settle at n = {n}, v = {v}, exponent {expo}: \
             {coarse} vs {fine}"
        )));
    }
    Ok(fine)
}

/// Orthogonality integral int_0^inf x^a e^{-x} L_n^a(x) L_m^a(x) dx
///   = delta_{nm} Gamma(a + n + 1) / Gamma(n + 1);
/// requires a > -1.
pub fn laguerre_orthogonality(n: u32, m: u32, a: f64) -> Result<f64> {
    if !(a > -1.0) {
        return Err(Error::Domain(format!(
            "orthogonality integral needs a > -1, got {a}"
        )));
    }
    if n != m {
        return Ok(0.0);
    }
    let nf = f64::from(n);
    let ln = log_gamma(a + nf + 1.0) - log_gamma(nf + 1.0);
    if ln > MAX_EXP_ARG {
        return Err(Error::Overflow(format!(
            "orthogonality integral exceeds f64 range at n = {n}, a = {a}"
        )));
    }
    Ok(ln.exp())
}

/// General Laguerre product integral
/// int_0^inf x^p e^{-x} L_n^a(x) L_m^b(x) dx as the finite sum
///   Gamma(p+1) (-1)^{n+m} sum_{r=0}^{min(n,m)}
///     C(p-a, n-r) C(p-b, m-r) C(p+r, r)
/// over generalized binomial coefficients; requires p > -1.
pub fn laguerre_offdiag_integral(n: u32, m: u32, p: f64, a: f64, b: f64) -> Result<f64> {
    if !(p > -1.0) {
        return Err(Error::Domain(format!(
            "product integral needs p > -1, got {p}"
        )));
    }
    let ln_gamma_p1 = log_gamma(p + 1.0);
    if ln_gamma_p1 > MAX_EXP_ARG {
        return Err(Error::Overflow(format!(
            "Gamma(p + 1) exceeds f64 range at p = {p}"
        )));
    }
    let mut sum = 0.0;
    for r in 0..=n.min(m) {
        sum += binomial_general(p - a, n - r)
            * binomial_general(p - b, m - r)
            * binomial_general(p + f64::from(r), r);
    }
    let sign = if (n + m) % 2 == 1 { -1.0 } else { 1.0 };
    Ok(ln_gamma_p1.exp() * sign * sum)
}

/// Quadrature twin of `laguerre_offdiag_integral` (and, with p = a = b, of
/// `laguerre_orthogonality`): int_0^inf x^p e^{-x} L_n^a(x) L_m^b(x) dx by
/// a double-exponential rule on a truncated range. The truncation point is
/// taken far enough past the integrand's decay scale p + n + m for the tail
/// to be negligible at f64 precision, and two refinement levels must agree.
pub fn laguerre_weighted_product_quadrature(n: u32, m: u32, p: f64, a: f64, b: f64) -> Result<f64> {
    if !(p > -1.0) || !(a > -1.0) || !(b > -1.0) {
        return Err(Error::Domain(format!(
            "product quadrature needs p, a, b > -1, got p = {p}, a = {a}, b = {b}"
        )));
    }
    let s = p + f64::from(n + m);
    let t_max = s + 60.0 + 12.0 * (s + 1.0).sqrt();
    let g = |x: f64| x.powf(p) * (-x).exp() * laguerre_rec(n, a, x) * laguerre_rec(m, b, x);
    let coarse = quad::tanh_sinh(0.0, t_max, 9, g);
    let fine = quad::tanh_sinh(0.0, t_max, 10, g);
    // Scale the drift test by the L1 mass so that near-cancellation cases
    // (orthogonal pairs) are judged against the integrand size, not the
    // vanishing result.
    let scale = quad::tanh_sinh(0.0, t_max, 9, |x| g(x).abs()).max(1.0);
    if (fine - coarse).abs() > 1e-10 * scale {
        return Err(Error::Convergence(format!(
            "product quadrature did not settle at n = {n}, m = {m}, p = {p}, a = {a}, b = {b}: \
             {coarse} vs {fine}"
        )));
    }
    Ok(fine)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(got: f64, want: f64, rel: f64) {
        let tol = rel * want.abs().max(1.0);
        assert!((got - want).abs() <= tol, "got {got}, want {want}");
    }

    #[test]
    fn weighted_square_integral_reference_values() {
        // (0, 1/2): weight (1-x^2)^0, C_0 = 1, exact area 2. Settles the
        // normalization convention; the quadrature twin agrees below.
        close(gegenbauer_weighted_sq_integral(0, 0.5).unwrap(), 2.0, 1e-13);
        close(
            gegenbauer_weighted_sq_integral(0, 1.0).unwrap(),
            PI / 2.0,
            1e-13,
        );
        close(
            gegenbauer_weighted_sq_integral(2, 1.5).unwrap(),
            24.0 / 7.0,
            1e-13,
        );
        close(
            gegenbauer_weighted_sq_integral(6, 3.0).unwrap(),
            151.189_146_454_008_8,
            1e-12,
        );
    }

    #[test]
    fn weighted_square_integral_matches_quadrature() {
        for n in [0u32, 1, 2, 4, 6] {
            for v in [0.5, 1.0, 1.5, 3.0, 5.25] {
                let closed = gegenbauer_weighted_sq_integral(n, v).unwrap();
                let quad = gegenbauer_weighted_sq_quadrature(n, v).unwrap();
                assert!(
                    (closed - quad).abs() <= 1e-10 * closed,
                    "n={n} v={v}: closed {closed} vs quadrature {quad}"
                );
            }
        }
    }

    #[test]
    fn lowered_weight_integral_exposes_the_sign_defect() {
        let li = gegenbauer_weighted_sq_integral_lower(0, 1.0).unwrap();
        close(li.printed, -PI, 1e-13);
        close(li.quadrature, PI, 1e-10);
        let li = gegenbauer_weighted_sq_integral_lower(1, 1.5).unwrap();
        close(li.printed, -6.0, 1e-13);
        close(li.quadrature, 6.0, 1e-10);
        // The published form is the negative of the truth, everywhere.
        for (n, v) in [(0u32, 0.8), (2, 1.25), (3, 2.5), (5, 4.0)] {
            let li = gegenbauer_weighted_sq_integral_lower(n, v).unwrap();
            assert!(
                (li.printed + li.quadrature).abs() <= 1e-9 * li.quadrature,
                "n={n} v={v}: printed {} vs quadrature {}",
                li.printed,
                li.quadrature
            );
        }
    }

    #[test]
    fn lowered_weight_integral_rejects_divergent_range() {
        assert!(gegenbauer_weighted_sq_integral_lower(0, 0.5).is_err());
        assert!(gegenbauer_weighted_sq_integral_lower(2, 0.3).is_err());
    }

    #[test]
    fn orthogonality_reference_values() {
        close(laguerre_orthogonality(1, 2, 0.5).unwrap(), 0.0, 1e-15);
        close(laguerre_orthogonality(0, 0, 0.0).unwrap(), 1.0, 1e-15);
        close(laguerre_orthogonality(2, 2, 3.0).unwrap(), 60.0, 1e-13);
        close(
            laguerre_orthogonality(3, 3, 0.5).unwrap(),
            1.938_621_399_427_908_2,
            1e-13,
        );
    }

    #[test]
    fn orthogonality_matches_quadrature() {
        for n in 0..=4u32 {
            for m in 0..=4u32 {
                for a in [0.5, 1.0, 2.0] {
                    let closed = laguerre_orthogonality(n, m, a).unwrap();
                    let quad = laguerre_weighted_product_quadrature(n, m, a, a, a).unwrap();
                    let scale = laguerre_orthogonality(n, n, a)
                        .unwrap()
                        .max(laguerre_orthogonality(m, m, a).unwrap());
                    assert!(
                        (closed - quad).abs() <= 1e-10 * scale,
                        "n={n} m={m} a={a}: closed {closed} vs quadrature {quad}"
                    );
                }
            }
        }
    }

    #[test]
    fn shifted_index_diagonal_integral_matches_quadrature() {
        // int x^a e^{-x} [L_n^{a-1}]^2 dx = (a + 2n) Gamma(a + n) / Gamma(n + 1)
        for n in 0..=4u32 {
            for a in [0.5, 1.0, 2.0] {
                let nf = f64::from(n);
                let closed = (a + 2.0 * nf) * (log_gamma(a + nf) - log_gamma(nf + 1.0)).exp();
                let quad = laguerre_weighted_product_quadrature(n, n, a, a - 1.0, a - 1.0).unwrap();
                assert!(
                    (closed - quad).abs() <= 1e-10 * closed,
                    "n={n} a={a}: closed {closed} vs quadrature {quad}"
                );
            }
        }
        // Spot value: n = 2, a = 2 gives 6 * Gamma(4) / 2 = 18.
        let quad = laguerre_weighted_product_quadrature(2, 2, 2.0, 1.0, 1.0).unwrap();
        close(quad, 18.0, 1e-10);
    }

    #[test]
    fn product_integral_reference_values() {
        close(
            laguerre_offdiag_integral(0, 0, 0.0, 0.0, 0.0).unwrap(),
            1.0,
            1e-15,
        );
        close(
            laguerre_offdiag_integral(1, 0, 1.0, 1.0, 1.0).unwrap(),
            0.0,
            1e-15,
        );
        close(
            laguerre_offdiag_integral(1, 1, 2.0, 1.0, 1.0).unwrap(),
            8.0,
            1e-13,
        );
        close(
            laguerre_offdiag_integral(2, 1, 2.5, 1.0, 0.5).unwrap(),
            -19.940_105_822_687_055,
            1e-13,
        );
    }

    #[test]
    fn product_integral_matches_quadrature() {
        for (n, m, p, a, b) in [
            (0u32, 0u32, 0.0, 0.0, 0.0),
            (1, 0, 1.0, 1.0, 1.0),
            (1, 1, 2.0, 1.0, 1.0),
            (2, 1, 2.5, 1.0, 0.5),
            (3, 2, 4.2, 2.2, 3.2),
            (4, 4, 6.0, 5.0, 5.0),
        ] {
            let closed = laguerre_offdiag_integral(n, m, p, a, b).unwrap();
            let quad = laguerre_weighted_product_quadrature(n, m, p, a, b).unwrap();
            let tol = 1e-9 * closed.abs().max(1.0);
            assert!(
                (closed - quad).abs() <= tol,
                "({n},{m},{p},{a},{b}): closed {closed} vs quadrature {quad}"
            );
        }
    }

    #[test]
    fn oversized_results_signal_overflow() {
        // Gamma(p + 1) alone overflows f64 here.
        assert!(matches!(
            laguerre_offdiag_integral(0, 0, 400.0, 0.0, 0.0),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn domain_errors() {
        assert!(gegenbauer_weighted_sq_integral(2, 0.0).is_err());
        assert!(laguerre_orthogonality(1, 1, -1.0).is_err());
        assert!(laguerre_offdiag_integral(1, 1, -1.0, 0.0, 0.0).is_err());
        assert!(laguerre_weighted_product_quadrature(1, 1, -1.5, 0.0, 0.0).is_err());
    }
}
