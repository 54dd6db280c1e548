//! Fisher information of the position-space density, two ways.
//!
//! Closed-form mode evaluates the published component expressions exactly as
//! printed: three angular pieces and five radial pieces, each proportional
//! to varsigma^2, plus their combined single-fraction forms. Quadrature mode
//! (see the oracle module) integrates the defining gradient functional of
//! rho directly and owes nothing to that algebra.
//!
//! The two modes disagree on purpose where the printed algebra is wrong:
//! the printed angular sum is negative for every state we can build, while
//! the definitional integral is manifestly positive, and the printed radial
//! sum drops an n-dependence that only vanishes at n = 0. Callers get both
//! numbers and the deltas; nothing silently "fixes" the closed forms.

use crate::error::{Error, Result};
use crate::spectrum::QuantumState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FisherMode {
    ClosedForm,
    Quadrature,
}

/// Component-resolved Fisher information for one state, in the inverse
/// squared length unit of varsigma (1/Angstrom^2 under physical units).
/// Part arrays are present only in closed-form mode; the definitional
/// integral has no such decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FisherReport {
    pub mode: FisherMode,
    pub i_theta_parts: Option<[f64; 3]>,
    pub i_theta: f64,
    pub i_r_parts: Option<[f64; 5]>,
    pub i_r: f64,
    pub total: f64,
}

/// Closed form next to ground truth, with signed differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FisherComparison {
    pub closed: FisherReport,
    pub quadrature: FisherReport,
    pub delta_i_theta: f64,
    pub delta_i_r: f64,
    pub delta_total: f64,
}

/// The three printed angular components and their combined form.
///
/// Both divide by zeta and by 4 zeta + n_tilde - 1. At zeta = 0 with
/// n_tilde = 0 every numerator carries the vanishing factor first, so the
/// limit is 0 and that is what we return; any other singular combination is
/// an explicit error rather than an extrapolation.
pub fn i_theta_closed(state: &QuantumState) -> Result<([f64; 3], f64)> {
    let z = state.zeta;
    let nt = f64::from(state.qn.n_tilde);
    let vs2 = state.varsigma * state.varsigma;
    if z == 0.0 {
        if state.qn.n_tilde == 0 {
            return Ok(([0.0; 3], 0.0));
        }
        return Err(Error::SingularParameter(format!(
            "angular components divide by zeta = 0 at n_tilde = {nt}"
        )));
    }
    let gate = 4.0 * z + nt - 1.0;
    if gate.abs() <= 1e-12 {
        return Err(Error::SingularParameter(format!(
            "angular component denominator 4 zeta + n_tilde - 1 = {gate}"
        )));
    }
    let n = f64::from(state.qn.n);
    let g = state.gamma;
    let d = (n + g + 1.0) * (n + 2.0 * g + 1.0);
    let p1 = -2.0 * vs2 * (2.0 * z + nt).powi(2) * (8.0 * z + 2.0 * nt + 1.0) / (z * d);
    let p2 = -2.0 * nt * vs2 * (2.0 * nt + 4.0 * z + 1.0) * (4.0 * z + nt) / (z * d);
    let p3 = 2.0 * nt * vs2 * (2.0 * nt + 4.0 * z + 1.0) * (4.0 * z + nt) * (2.0 * z + nt)
        / (z * gate * d);
    let combined = 2.0 * vs2 / (z * d)
        * (nt * (4.0 * z + nt) * (1.0 - 2.0 * z) * (4.0 * z + 2.0 * nt + 1.0) / gate
            - (2.0 * z + nt).powi(2) * (2.0 * nt + 8.0 * z + 1.0));
    Ok(([p1, p2, p3], combined))
}

/// The five printed radial components and their combined form
///   4 vs^2 / (n + gamma + 1) [2 gamma^2 / (n + 2 gamma + 1) + n - gamma + 1].
pub fn i_r_closed(state: &QuantumState) -> ([f64; 5], f64) {
    let n = f64::from(state.qn.n);
    let g = state.gamma;
    let vs2 = state.varsigma * state.varsigma;
    let p1 = -8.0 * n * vs2 / (n + g + 1.0);
    let p2 = 8.0 * g * g * vs2 / ((n + g + 1.0) * (n + 2.0 * g + 1.0));
    let p3 = -8.0 * g * vs2 / (n + g + 1.0);
    let p4 = 4.0 * vs2;
    let p5 = 8.0 * n * vs2 / (n + g + 1.0);
    let combined = 4.0 * vs2 / (n + g + 1.0) * (2.0 * g * g / (n + 2.0 * g + 1.0) + n - g + 1.0);
    ([p1, p2, p3, p4, p5], combined)
}

/// Component-resolved report in the requested mode. Quadrature mode hands
/// the state to the oracle's definitional integrals.
pub fn fisher_total(state: &QuantumState, mode: FisherMode) -> Result<FisherReport> {
    match mode {
        FisherMode::ClosedForm => {
            let (tp, it) = i_theta_closed(state)?;
            let (rp, ir) = i_r_closed(state);
            Ok(FisherReport {
                mode,
                i_theta_parts: Some(tp),
                i_theta: it,
                i_r_parts: Some(rp),
                i_r: ir,
                total: it + ir,
            })
        }
        FisherMode::Quadrature => crate::oracle::fisher_quadrature(state),
    }
}

/// Both modes side by side. The radial delta is small only at n = 0; the
/// angular delta is structural (sign). Callers decide what to assert.
pub fn fisher_compare(state: &QuantumState) -> Result<FisherComparison> {
    let closed = fisher_total(state, FisherMode::ClosedForm)?;
    let quadrature = fisher_total(state, FisherMode::Quadrature)?;
    Ok(FisherComparison {
        delta_i_theta: closed.i_theta - quadrature.i_theta,
        delta_i_r: closed.i_r - quadrature.i_r,
        delta_total: closed.total - quadrature.total,
        closed,
        quadrature,
    })
}
