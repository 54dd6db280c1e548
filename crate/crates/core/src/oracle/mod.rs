//! Numerical ground truth, independent of every closed form it checks.
//!
//! Two finite-difference eigensolvers rebuild the spectrum from the
//! separated radial and angular equations, and adaptive quadrature rebuilds
//! the normalization and Fisher integrals from the wavefunctions alone. The
//! only shared ingredients with the analytic side are the wavefunction
//! evaluators themselves, which is the point: when an analytic formula and
//! this module agree, both the formula and its implementation are confirmed
//! at once.
//!
//! Eigensolves run on a base grid and a grid with exactly halved spacing;
//! the reported eigenvalue is the Richardson extrapolation of the pair and
//! the drift between the two is the refinement check. Quadratures run at two
//! refinement levels with the same drift logic.

mod tridiag;

pub use tridiag::SymTridiag;

use crate::error::{Error, Result};
use crate::fisher::{FisherMode, FisherReport};
use crate::model::{dimensionless_groups, PotentialSpec, UnitSystem};
use crate::specfun::quad::{composite_legendre, make_quadrature, tanh_sinh, QuadKind};
use crate::spectrum::{
    angular_wavefunction, angular_wavefunction_deriv, probability_density, radial_wavefunction,
    radial_wavefunction_deriv, QuantumState,
};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridSpacing {
    Uniform,
    /// Geometric nodes; the equation is solved in s = ln r after the
    /// symmetrizing substitution u = sqrt(r) phi(s).
    Log,
}

/// Discretization domain for the radial equation. `points` is the base
/// interior point count; the solver also runs 2*points+1 (exact spacing
/// halving) for the extrapolation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
    pub spacing: GridSpacing,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, points: usize, spacing: GridSpacing) -> Result<Self> {
        if !(r_min > 0.0) || !(r_max > r_min) {
            return Err(Error::Domain(format!(
                "radial grid needs 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if points < 200 {
            return Err(Error::Domain(format!(
                "radial grid needs at least 200 points, got {points}"
            )));
        }
        Ok(RadialGrid {
            r_min,
            r_max,
            points,
            spacing,
        })
    }

    /// Domain sized for bound states up to radial number n_max at this
    /// effective angular momentum: the left end sits deep inside the
    /// centrifugal wall and the right end is ~30 decay lengths past the
    /// outermost density peak, so Dirichlet ends perturb eigenvalues far
    /// below the refinement tolerance.
    pub fn suggested(
        spec: &PotentialSpec,
        mu: f64,
        ell_eff: f64,
        u: &UnitSystem,
        n_max: u32,
    ) -> Result<Self> {
        let (two_mu_a, two_mu_b2) = dimensionless_groups(spec, mu, u);
        if !(two_mu_b2 > 0.0) {
            return Err(Error::Domain(format!(
                "reduced mass must be positive, got {mu}"
            )));
        }
        let gamma = -0.5 + ((ell_eff + 0.5) * (ell_eff + 0.5) + two_mu_a).sqrt();
        let n = f64::from(n_max);
        // Decay rate of the slowest requested state.
        let varsigma = u.two_mu_over_hbar_sq(mu) * spec.b / (2.0 * (n + gamma + 1.0));
        let r_e = spec.equilibrium_separation();
        let r_min = (r_e / 50.0).max(1e-4 / varsigma);
        let r_max = (2.0 * n + 2.0 * gamma + 2.0) / varsigma + 30.0 / varsigma;
        RadialGrid::new(r_min, r_max, 3000, GridSpacing::Uniform)
    }
}

/// One eigenpair from a finite-difference solve. The eigenvector holds
/// interior samples on the fine grid, unit-normalized in the equation's own
/// measure (dr radially, sin(theta) dtheta angularly), with the first
/// significant lobe positive.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// eV for the radial equation; the separation constant ell(ell+1) for
    /// the angular one.
    pub eigenvalue: f64,
    pub eigenvector: Vec<f64>,
    pub residual_norm: f64,
}

/// Relative drift allowed between the two grid resolutions before the
/// domain is declared under-resolved.
const REFINE_TOL: f64 = 1e-3;

/// Relative drift allowed between quadrature refinement levels.
const QUAD_TOL: f64 = 1e-8;

fn richardson(coarse: f64, fine: f64) -> f64 {
    (4.0 * fine - coarse) / 3.0
}

fn refine_gate(coarse: f64, fine: f64, what: &str) -> Result<()> {
    let drift = (fine - coarse).abs();
    if drift > REFINE_TOL * fine.abs().max(1.0) {
        return Err(Error::Refinement(format!(
            "{what}: eigenvalue moved {drift:.3e} between grid resolutions"
        )));
    }
    Ok(())
}

/// Lowest k eigenvalues of the radial equation
///   -(1/kappa^2) u'' + [c - b/r + (a + ell(ell+1)/kappa^2)/r^2] u = E u
/// with Dirichlet ends, kappa^2 = 2 mu / hbar^2. The centrifugal strength
/// a + ell(ell+1)/kappa^2 is exactly the combination under the energy
/// formula's radical, so the discretization tests that formula and nothing
/// else.
pub fn solve_radial(
    spec: &PotentialSpec,
    mu: f64,
    ell_eff: f64,
    u: &UnitSystem,
    grid: &RadialGrid,
    k: usize,
) -> Result<Vec<EigenResult>> {
    if !(ell_eff >= 0.0) {
        return Err(Error::Domain(format!(
            "effective angular momentum must be >= 0, got {ell_eff}"
        )));
    }
    let kappa2 = u.two_mu_over_hbar_sq(mu);
    if !(kappa2 > 0.0) {
        return Err(Error::Domain(format!(
            "reduced mass must be positive, got {mu}"
        )));
    }
    if k == 0 || k > grid.points / 10 {
        return Err(Error::Domain(format!(
            "requested {k} states from a {}-point grid",
            grid.points
        )));
    }
    let centrifugal = spec.a + ell_eff * (ell_eff + 1.0) / kappa2;
    let potential = |r: f64| spec.c - spec.b / r + centrifugal / (r * r);

    let coarse = radial_matrix(grid, grid.points, kappa2, &potential);
    let fine = radial_matrix(grid, 2 * grid.points + 1, kappa2, &potential);
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let ec = coarse.matrix.eigenvalue(j);
        let ef = fine.matrix.eigenvalue(j);
        refine_gate(ec, ef, "radial solve")?;
        let (vec_sym, residual) = fine.matrix.eigenvector(ef);
        out.push(EigenResult {
            eigenvalue: richardson(ec, ef),
            eigenvector: fine.to_u_samples(&vec_sym),
            residual_norm: residual,
        });
    }
    debug_assert!(out.windows(2).all(|w| w[0].eigenvalue < w[1].eigenvalue));
    Ok(out)
}

struct RadialDiscretization {
    matrix: SymTridiag,
    /// Per-sample factors turning the symmetric-problem eigenvector back
    /// into u(r_i), plus the local measure weights for normalization.
    unsymmetrize: Vec<f64>,
    measure: Vec<f64>,
}

impl RadialDiscretization {
    fn to_u_samples(&self, v: &[f64]) -> Vec<f64> {
        let mut u: Vec<f64> = v
            .iter()
            .zip(&self.unsymmetrize)
            .map(|(vi, f)| vi * f)
            .collect();
        let norm: f64 = u
            .iter()
            .zip(&self.measure)
            .map(|(ui, w)| ui * ui * w)
            .sum::<f64>()
            .sqrt();
        for ui in &mut u {
            *ui /= norm;
        }
        u
    }
}

fn radial_matrix(
    grid: &RadialGrid,
    n: usize,
    kappa2: f64,
    potential: &impl Fn(f64) -> f64,
) -> RadialDiscretization {
    match grid.spacing {
        GridSpacing::Uniform => {
            let h = (grid.r_max - grid.r_min) / (n as f64 + 1.0);
            let kin = 1.0 / (kappa2 * h * h);
            let mut diag = Vec::with_capacity(n);
            for i in 1..=n {
                let r = grid.r_min + h * i as f64;
                diag.push(2.0 * kin + potential(r));
            }
            RadialDiscretization {
                matrix: SymTridiag::new(diag, vec![-kin; n - 1]),
                unsymmetrize: vec![1.0; n],
                measure: vec![h; n],
            }
        }
        GridSpacing::Log => {
            // s = ln r, u = sqrt(r) phi: -phi'' + [1/4 + kappa^2 r^2 V] phi
            // = kappa^2 r^2 E phi, a generalized problem with diagonal
            // weight B = kappa^2 r^2, reduced to standard symmetric form by
            // B^{-1/2} A B^{-1/2}.
            let s_min = grid.r_min.ln();
            let h = (grid.r_max.ln() - s_min) / (n as f64 + 1.0);
            let inv_h2 = 1.0 / (h * h);
            let mut b = Vec::with_capacity(n);
            let mut diag = Vec::with_capacity(n);
            let mut r_nodes = Vec::with_capacity(n);
            for i in 1..=n {
                let r = (s_min + h * i as f64).exp();
                r_nodes.push(r);
                let bi = kappa2 * r * r;
                b.push(bi);
                diag.push((2.0 * inv_h2 + 0.25 + bi * potential(r)) / bi);
            }
            let off: Vec<f64> = (0..n - 1)
                .map(|i| -inv_h2 / (b[i] * b[i + 1]).sqrt())
                .collect();
            // psi = B^{1/2} phi and u = sqrt(r) phi, so u_i = psi_i
            // sqrt(r_i / b_i); measure dr = r ds.
            let unsymmetrize: Vec<f64> = (0..n).map(|i| (r_nodes[i] / b[i]).sqrt()).collect();
            let measure: Vec<f64> = r_nodes.iter().map(|r| r * h).collect();
            RadialDiscretization {
                matrix: SymTridiag::new(diag, off),
                unsymmetrize,
                measure,
            }
        }
    }
}

/// Lowest k eigenvalues lambda = ell(ell+1) of the angular equation
///   -(1/sin t) d/dt (sin t dTheta/dt) + (m^2 + eta cos^2 t)/sin^2 t Theta
///   = lambda_op Theta.
/// Because eta cos^2 t / sin^2 t = (m^2 + eta)/sin^2 t - eta - m^2/sin^2 t
/// ... combined, the discretized operator's eigenvalue is ell(ell+1) - eta;
/// the returned value carries the +eta shift so callers get ell(ell+1)
/// directly, with ell = sqrt(m^2 + eta) + n_tilde.
pub fn solve_angular(eta: f64, m: i32, k: usize) -> Result<Vec<EigenResult>> {
    if !(eta >= 0.0) {
        return Err(Error::Domain(format!("eta must be >= 0, got {eta}")));
    }
    let base = 400usize;
    if k == 0 || k > base / 10 {
        return Err(Error::Domain(format!("requested {k} angular states")));
    }
    let coarse = angular_matrix(eta, m, base);
    let fine = angular_matrix(eta, m, 2 * base);
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let lc = coarse.matrix.eigenvalue(j) + eta;
        let lf = fine.matrix.eigenvalue(j) + eta;
        refine_gate(lc, lf, "angular solve")?;
        let (vec_sym, residual) = fine.matrix.eigenvector(lf - eta);
        out.push(EigenResult {
            eigenvalue: richardson(lc, lf),
            eigenvector: fine.to_theta_samples(&vec_sym),
            residual_norm: residual,
        });
    }
    Ok(out)
}

struct AngularDiscretization {
    matrix: SymTridiag,
    sin_nodes: Vec<f64>,
    h: f64,
}

impl AngularDiscretization {
    fn to_theta_samples(&self, v: &[f64]) -> Vec<f64> {
        // Symmetrized unknown is sqrt(sin t) Theta.
        let mut theta: Vec<f64> = v
            .iter()
            .zip(&self.sin_nodes)
            .map(|(vi, s)| vi / s.sqrt())
            .collect();
        let norm: f64 = theta
            .iter()
            .zip(&self.sin_nodes)
            .map(|(ti, s)| ti * ti * s * self.h)
            .sum::<f64>()
            .sqrt();
        for t in &mut theta {
            *t /= norm;
        }
        theta
    }
}

/// Staggered flux-form discretization: cell centers t_i = (i + 1/2) h carry
/// the unknowns, cell edges carry sin(t); sin vanishing at both poles closes
/// the stencil without boundary rows, and the half-step offset keeps
/// 1/sin^2 finite.
fn angular_matrix(eta: f64, m: i32, n: usize) -> AngularDiscretization {
    let h = PI / n as f64;
    let m2 = f64::from(m) * f64::from(m);
    let mut diag = Vec::with_capacity(n);
    let mut sin_nodes = Vec::with_capacity(n);
    for i in 0..n {
        let t = (i as f64 + 0.5) * h;
        let s = t.sin();
        let cos = t.cos();
        let edge_lo = (i as f64 * h).sin();
        let edge_hi = ((i as f64 + 1.0) * h).sin();
        sin_nodes.push(s);
        diag.push((edge_lo + edge_hi) / (h * h * s) + (m2 + eta * cos * cos) / (s * s));
    }
    let off: Vec<f64> = (0..n - 1)
        .map(|i| {
            let edge = ((i as f64 + 1.0) * h).sin();
            -edge / (h * h * (sin_nodes[i] * sin_nodes[i + 1]).sqrt())
        })
        .collect();
    AngularDiscretization {
        matrix: SymTridiag::new(diag, off),
        sin_nodes,
        h,
    }
}

/// Integration window for the radial integrals, in r. In x = 2 varsigma r
/// the density envelope x^{2 gamma + 2} e^{-x} peaks at x0 = 2 gamma + 2n + 2
/// with width ~sqrt(x0); 18 widths plus the polynomial's reach bounds the
/// mass outside the window below 1e-12 of the total.
pub(crate) fn radial_window(state: &QuantumState) -> (f64, f64) {
    let n = f64::from(state.qn.n);
    let x0 = 2.0 * state.gamma + 2.0 * n + 2.0;
    let half = 18.0 * x0.sqrt() + 4.0 * n + 10.0;
    let scale = 2.0 * state.varsigma;
    (((x0 - half).max(1e-10)) / scale, (x0 + half) / scale)
}

/// A quadrature refined once, gated on relative drift.
fn gated<F: Fn(usize) -> f64>(eval: F, coarse: usize, fine: usize, what: &str) -> Result<f64> {
    let lo = eval(coarse);
    let hi = eval(fine);
    if (hi - lo).abs() > QUAD_TOL * hi.abs().max(1e-300) {
        return Err(Error::Convergence(format!(
            "{what}: drift {:.3e} between refinement levels",
            (hi - lo).abs()
        )));
    }
    Ok(hi)
}

/// Quadrature of int |Psi|^2 r^2 sin(theta) dr dtheta dphi for the state's
/// wavefunctions and constants; 1 to within 1e-8 exactly when the closed
/// normalization constants are right.
pub fn check_normalization(state: &QuantumState) -> Result<f64> {
    let rule = make_quadrature(QuadKind::GaussLegendre, 64)?;
    let (lo, hi) = radial_window(state);
    let radial = gated(
        |panels| {
            composite_legendre(&rule, lo, hi, panels, |r| {
                let v = radial_wavefunction(state, r).expect("window is positive");
                v * v * r * r
            })
        },
        24,
        48,
        "radial normalization",
    )?;
    let angular = gated(
        |level| {
            2.0 * PI
                * tanh_sinh(0.0, PI, level as u32, |t| {
                    let v = angular_wavefunction(state, t).expect("interior node");
                    v * v * t.sin()
                })
        },
        7,
        8,
        "angular normalization",
    )?;
    Ok(radial * angular)
}

/// Definitional Fisher information: the gradient functional of rho built
/// from the wavefunctions and their analytic derivatives, as
///   I_r = 4 int R'^2 r^2 dr * 2 pi int Theta^2 sin t dt
///   I_theta = int R^2 dr * 8 pi int Theta'^2 sin t dt,
/// which is the squared-derivative-of-sqrt(rho) form; nodes of rho never
/// appear in a denominator. The analytic derivatives are cross-checked
/// against central finite differences of rho before integrating.
pub fn fisher_quadrature(state: &QuantumState) -> Result<FisherReport> {
    gradient_crosscheck(state)?;
    let rule = make_quadrature(QuadKind::GaussLegendre, 64)?;
    let (lo, hi) = radial_window(state);

    let radial_grad = gated(
        |panels| {
            composite_legendre(&rule, lo, hi, panels, |r| {
                let d = radial_wavefunction_deriv(state, r).expect("window is positive");
                d * d * r * r
            })
        },
        24,
        48,
        "radial gradient integral",
    )?;
    let radial_plain = gated(
        |panels| {
            composite_legendre(&rule, lo, hi, panels, |r| {
                let v = radial_wavefunction(state, r).expect("window is positive");
                v * v
            })
        },
        24,
        48,
        "radial line integral",
    )?;
    let angular_norm = gated(
        |level| {
            2.0 * PI
                * tanh_sinh(0.0, PI, level as u32, |t| {
                    let v = angular_wavefunction(state, t).expect("interior node");
                    v * v * t.sin()
                })
        },
        7,
        8,
        "angular norm factor",
    )?;
    let angular_grad = gated(
        |level| {
            8.0 * PI
                * tanh_sinh(0.0, PI, level as u32, |t| {
                    let d = angular_wavefunction_deriv(state, t).expect("interior node");
                    d * d * t.sin()
                })
        },
        8,
        9,
        "angular gradient integral",
    )?;

    let i_r = 4.0 * radial_grad * angular_norm;
    let i_theta = radial_plain * angular_grad;
    Ok(FisherReport {
        mode: FisherMode::Quadrature,
        i_theta_parts: None,
        i_theta,
        i_r_parts: None,
        i_r,
        total: i_theta + i_r,
    })
}

/// Central finite differences of rho against the analytic partials
/// 2 R R' Theta^2 and 2 R^2 Theta Theta', at a spread of interior points.
/// Points near density nodes are judged against the largest sampled
/// magnitude instead of their own.
fn gradient_crosscheck(state: &QuantumState) -> Result<()> {
    let r_peak = (state.gamma + f64::from(state.qn.n) + 1.0) / state.varsigma;
    let h_r = 1e-6 * r_peak;
    let h_t = 1e-6;
    let rs = [0.85 * r_peak, r_peak, 1.18 * r_peak];
    let ts = [0.37 * PI, 0.52 * PI, 0.68 * PI];

    let mut radial_pairs = Vec::new();
    let mut angular_pairs = Vec::new();
    for &r in &rs {
        for &t in &ts {
            let rad = radial_wavefunction(state, r)?;
            let drad = radial_wavefunction_deriv(state, r)?;
            let ang = angular_wavefunction(state, t)?;
            let dang = angular_wavefunction_deriv(state, t)?;
            let fd_r = (probability_density(state, r + h_r, t)?
                - probability_density(state, r - h_r, t)?)
                / (2.0 * h_r);
            let fd_t = (probability_density(state, r, t + h_t)?
                - probability_density(state, r, t - h_t)?)
                / (2.0 * h_t);
            radial_pairs.push((2.0 * rad * drad * ang * ang, fd_r));
            angular_pairs.push((2.0 * rad * rad * ang * dang, fd_t));
        }
    }
    for (label, pairs) in [("radial", radial_pairs), ("angular", angular_pairs)] {
        let scale = pairs
            .iter()
            .map(|(a, _)| a.abs())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        for (analytic, fd) in pairs {
            if (analytic - fd).abs() > 1e-6 * scale {
                return Err(Error::Convergence(format!(
                    "{label} density gradient: analytic {analytic:.6e} vs finite difference {fd:.6e}"
                )));
            }
        }
    }
    Ok(())
}
