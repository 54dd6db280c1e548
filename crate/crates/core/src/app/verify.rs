//! The self-check command: every cross-validation the crate makes, run as
//! one suite with a machine-readable outcome.
//!
//! Each group compares an independent pair (closed form vs quadrature,
//! formula vs eigensolver, computed vs recorded) and counts violations of its
//! gate. Groups marked informational report their worst deviation but never
//! fail the run; everything else must be clean for the suite to pass.

use super::golden;
use super::RunConfig;
use crate::model::{find_molecule, from_molecule, Molecule, PotentialSpec, UnitSystem, Variant};
use crate::output::{Cell, Table};
use crate::spectrum::{self, QuantumNumbers};
use crate::{fisher, oracle, specfun, FisherMode, Result};

const DETAIL_CAP: usize = 8;

/// One named batch of checks sharing a gate.
#[derive(Debug, Clone)]
pub struct CheckGroup {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// Largest deviation observed (the statistic each group gates on).
    pub worst: f64,
    pub gate: f64,
    pub informational: bool,
    /// Up to [`DETAIL_CAP`] descriptions of failing cases.
    pub failing: Vec<String>,
}

impl CheckGroup {
    pub fn passed(&self) -> bool {
        self.informational || self.failures == 0
    }

    fn status(&self) -> &'static str {
        if self.informational {
            "informational"
        } else if self.failures == 0 {
            "pass"
        } else {
            "fail"
        }
    }
}

struct GroupBuilder {
    group: CheckGroup,
    suppressed: usize,
}

impl GroupBuilder {
    fn new(name: &'static str, gate: f64) -> Self {
        GroupBuilder {
            group: CheckGroup {
                name,
                checks: 0,
                failures: 0,
                worst: 0.0,
                gate,
                informational: false,
                failing: Vec::new(),
            },
            suppressed: 0,
        }
    }

    fn informational(name: &'static str) -> Self {
        let mut b = Self::new(name, f64::INFINITY);
        b.group.informational = true;
        b
    }

    /// Record one check. A deviation above the gate (or NaN) is a failure;
    /// informational groups record the deviation but never fail.
    fn check(&mut self, deviation: f64, detail: impl FnOnce() -> String) {
        self.group.checks += 1;
        self.group.worst = self.group.worst.max(deviation);
        if self.group.informational {
            return;
        }
        if !(deviation <= self.group.gate) {
            self.group.failures += 1;
            if self.group.failing.len() < DETAIL_CAP {
                self.group.failing.push(detail());
            } else {
                self.suppressed += 1;
            }
        }
    }

    /// Record a check whose computation may itself fail; an error is a
    /// failing check, not an abort.
    fn check_result(&mut self, result: Result<f64>, detail: impl FnOnce() -> String) {
        match result {
            Ok(dev) => self.check(dev, detail),
            Err(e) => self.check(f64::INFINITY, || format!("{}: {e}", detail())),
        }
    }

    fn finish(mut self) -> CheckGroup {
        if self.suppressed > 0 {
            self.group
                .failing
                .push(format!("... and {} more", self.suppressed));
        }
        self.group
    }
}

/// Outcome of [`run_verify`].
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub groups: Vec<CheckGroup>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.groups.iter().all(CheckGroup::passed)
    }

    pub fn failing_cases(&self) -> Vec<String> {
        let mut out = Vec::new();
        for g in &self.groups {
            for d in &g.failing {
                out.push(format!("{}: {d}", g.name));
            }
        }
        out
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new(
            "verify",
            &["group", "checks", "failures", "worst", "gate", "status"],
        );
        for g in &self.groups {
            let gate: Cell = if g.informational {
                "-".into()
            } else {
                g.gate.into()
            };
            t.push(vec![
                g.name.into(),
                (g.checks as i64).into(),
                (g.failures as i64).into(),
                g.worst.into(),
                gate,
                g.status().into(),
            ]);
        }
        t
    }
}

/// One tabulated state: catalog molecule, quantum numbers, ring strength.
struct Case {
    mol: Molecule,
    qn: QuantumNumbers,
    eta: f64,
}

impl Case {
    fn label(&self) -> String {
        format!(
            "{} ({},{},{}) eta={}",
            self.mol.name, self.qn.n, self.qn.n_tilde, self.qn.m, self.eta
        )
    }

    fn spec(&self, variant: Variant) -> Result<PotentialSpec> {
        from_molecule(&self.mol, variant, self.eta)
    }
}

/// The 120 tabulated states, in table order.
fn tabulated_cases(config: &RunConfig) -> Result<Vec<Case>> {
    let mut out = Vec::with_capacity(120);
    for rows in [&golden::ENERGY_GROUP_A[..], &golden::ENERGY_GROUP_B[..]] {
        for row in rows {
            let mol = find_molecule(&config.catalog, row.molecule)?.clone();
            for eta in [0.0, 10.0] {
                out.push(Case {
                    mol: mol.clone(),
                    qn: QuantumNumbers::new(row.n, row.ntilde, row.m),
                    eta,
                });
            }
        }
    }
    Ok(out)
}

/// Evenly strided subsample of `items`, keeping order, at most `limit` long.
fn subsample<T>(items: &[T], limit: Option<usize>) -> Vec<&T> {
    match limit {
        None => items.iter().collect(),
        Some(0) => Vec::new(),
        Some(k) if k >= items.len() => items.iter().collect(),
        Some(k) => {
            let stride = items.len().div_ceil(k);
            items.iter().step_by(stride).collect()
        }
    }
}

/// Deterministic 64-bit generator for the random parameter draws; keeping it
/// local avoids promoting a whole RNG crate to a runtime dependency.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    fn upto(&mut self, hi: u32) -> u32 {
        (self.next_u64() % u64::from(hi + 1)) as u32
    }
}

/// Run the complete invariant suite and report per-group outcomes.
pub fn run_verify(config: &RunConfig) -> Result<VerifyReport> {
    config.validate()?;
    let u = UnitSystem::physical();
    let cases = tabulated_cases(config)?;
    let sampled = subsample(&cases, config.states_limit);
    let groups = vec![
        table_energies(config, &u)?,
        constant_shift(&cases, &u),
        normalization(&sampled, &u, config.inject_norm_error),
        radial_eigensolver(config, &u)?,
        angular_eigensolver(),
        fisher_radial_closed(&u),
        fisher_hydrogenic(),
        fisher_positivity(&sampled, &u),
        fisher_shift_invariance(&sampled, &u),
        polynomial_identities(),
        recurrence_residual(),
        table_fisher(config, &u)?,
    ];
    Ok(VerifyReport { groups })
}

fn table_energies(config: &RunConfig, u: &UnitSystem) -> Result<CheckGroup> {
    let mut b = GroupBuilder::new("table-energies", 5e-6);
    for rows in [&golden::ENERGY_GROUP_A[..], &golden::ENERGY_GROUP_B[..]] {
        for row in rows {
            let mol = find_molecule(&config.catalog, row.molecule)?;
            let qn = QuantumNumbers::new(row.n, row.ntilde, row.m);
            for (eta, recorded) in [(0.0, row.pair_eta0), (10.0, row.pair_eta10)] {
                let base = spectrum::energy(
                    &from_molecule(mol, Variant::KratzerFues, eta)?,
                    mol.mu,
                    &qn,
                    u,
                );
                let shifted = spectrum::energy(
                    &from_molecule(mol, Variant::ModifiedKratzer, eta)?,
                    mol.mu,
                    &qn,
                    u,
                );
                let dev = super::pair_delta([base, shifted], recorded);
                b.check(dev, || {
                    format!(
                        "{} ({},{},{}) eta={eta}: pair delta {dev:.3e} eV",
                        row.molecule, row.n, row.ntilde, row.m
                    )
                });
            }
        }
    }
    Ok(b.finish())
}

fn constant_shift(cases: &[Case], u: &UnitSystem) -> CheckGroup {
    let mut b = GroupBuilder::new("constant-shift", 1e-12);
    for case in cases {
        let run = || -> Result<f64> {
            let e0 = spectrum::energy(&case.spec(Variant::KratzerFues)?, case.mol.mu, &case.qn, u);
            let e1 = spectrum::energy(
                &case.spec(Variant::ModifiedKratzer)?,
                case.mol.mu,
                &case.qn,
                u,
            );
            let de = case.mol.de;
            Ok(((e1 - e0) - de).abs() / de)
        };
        b.check_result(run(), || case.label());
    }
    b.finish()
}

fn normalization(sampled: &[&Case], u: &UnitSystem, inject: bool) -> CheckGroup {
    let mut b = GroupBuilder::new("normalization", 1e-8);
    for case in sampled {
        let run = || -> Result<f64> {
            let state = spectrum::derive_state(
                &case.spec(Variant::KratzerFues)?,
                case.mol.mu,
                &case.qn,
                u,
            )?;
            let mut norm = oracle::check_normalization(&state)?;
            if inject {
                norm *= 1.0 + 1e-6;
            }
            Ok((norm - 1.0).abs())
        };
        b.check_result(run(), || case.label());
    }
    b.finish()
}

/// Ten states spanning both catalog groups, stiffest exponents included.
const RADIAL_SAMPLE: [(&str, (u32, u32, i32), f64); 10] = [
    ("ScH", (0, 0, 0), 0.0),
    ("TiH", (1, 1, 0), 0.0),
    ("VH", (3, 2, 1), 10.0),
    ("CrH", (3, 3, 2), 0.0),
    ("MnH", (5, 4, 3), 10.0),
    ("CuLi", (5, 5, 4), 10.0),
    ("TiC", (0, 0, 0), 10.0),
    ("NiC", (3, 2, 1), 0.0),
    ("ScN", (3, 2, 1), 0.0),
    ("ScF", (1, 1, 0), 10.0),
];

fn radial_eigensolver(config: &RunConfig, u: &UnitSystem) -> Result<CheckGroup> {
    let mut b = GroupBuilder::new("radial-eigensolver", 1e-6);
    for (name, (n, nt, m), eta) in RADIAL_SAMPLE {
        let mol = find_molecule(&config.catalog, name)?;
        let qn = QuantumNumbers::new(n, nt, m);
        let run = || -> Result<f64> {
            let spec = from_molecule(mol, Variant::KratzerFues, eta)?;
            let ell = spectrum::ell_effective(&qn, eta);
            let want = spectrum::energy(&spec, mol.mu, &qn, u);
            let grid = oracle::RadialGrid::suggested(&spec, mol.mu, ell, u, n)?;
            let eig = oracle::solve_radial(&spec, mol.mu, ell, u, &grid, n as usize + 1)?;
            Ok(((eig[n as usize].eigenvalue - want) / want).abs())
        };
        b.check_result(run(), || format!("{name} ({n},{nt},{m}) eta={eta}"));
    }
    Ok(b.finish())
}

fn angular_eigensolver() -> CheckGroup {
    let mut b = GroupBuilder::new("angular-eigensolver", 1e-6);
    for eta in [0.0, 1.0, 5.0, 10.0] {
        for m in [0, 1, 2, 4] {
            match oracle::solve_angular(eta, m, 6) {
                Ok(eig) => {
                    for (nt, e) in eig.iter().enumerate() {
                        let ell = (f64::from(m * m) + eta).sqrt() + nt as f64;
                        let want = ell * (ell + 1.0);
                        let dev = (e.eigenvalue - want).abs() / want.abs().max(1.0);
                        b.check(dev, || {
                            format!("eta={eta} m={m} ntilde={nt}: {} vs {want}", e.eigenvalue)
                        });
                    }
                }
                Err(e) => {
                    for nt in 0..6 {
                        b.check(f64::INFINITY, || {
                            format!("eta={eta} m={m} ntilde={nt}: {e}")
                        });
                    }
                }
            }
        }
    }
    b.finish()
}

fn fisher_radial_closed(u: &UnitSystem) -> CheckGroup {
    let mut b = GroupBuilder::new("fisher-radial-closed", 1e-10);
    let mut rng = SplitMix64(0x6d69_652d_7269_6e67);
    for draw in 0..50 {
        let de = rng.range(1.0, 6.0);
        let re = rng.range(0.8, 2.5);
        let mu = rng.range(0.5, 20.0);
        let eta = rng.range(0.0, 12.0);
        let n = rng.upto(6);
        let nt = rng.upto(5);
        let m = rng.upto(4) as i32;
        let qn = QuantumNumbers::new(n, nt, m);
        let run = || -> Result<f64> {
            let spec = PotentialSpec::kratzer_fues(de * re * re, 2.0 * de * re, eta)?;
            let state = spectrum::derive_state(&spec, mu, &qn, u)?;
            let (parts, total) = fisher::i_r_closed(&state);
            let sum: f64 = parts.iter().sum();
            Ok((sum - total).abs() / total.abs().max(1.0))
        };
        b.check_result(run(), || {
            format!("draw {draw}: De={de:.3} re={re:.3} mu={mu:.3} eta={eta:.3} ({n},{nt},{m})")
        });
    }
    b.finish()
}

fn fisher_hydrogenic() -> CheckGroup {
    let mut b = GroupBuilder::new("fisher-hydrogenic", 1e-6);
    let run = || -> Result<f64> {
        let spec = PotentialSpec::custom(0.0, 2.0, 0.0, 0.0)?;
        let state = spectrum::derive_state(
            &spec,
            1.0,
            &QuantumNumbers::new(0, 0, 0),
            &UnitSystem::natural(),
        )?;
        let closed = fisher::i_r_closed(&state).1;
        let quad = oracle::fisher_quadrature(&state)?;
        Ok((quad.i_r - closed).abs() / closed.abs())
    };
    b.check_result(run(), || "hydrogenic limit (a=0, eta=0, n=0)".to_string());
    b.finish()
}

fn fisher_positivity(sampled: &[&Case], u: &UnitSystem) -> CheckGroup {
    let mut b = GroupBuilder::new("fisher-positivity", 0.0);
    for case in sampled {
        let run = || -> Result<f64> {
            let state = spectrum::derive_state(
                &case.spec(Variant::KratzerFues)?,
                case.mol.mu,
                &case.qn,
                u,
            )?;
            let rep = oracle::fisher_quadrature(&state)?;
            if rep.total.is_finite() && rep.total > 0.0 && rep.i_r > 0.0 && rep.i_theta >= 0.0 {
                Ok(0.0)
            } else {
                Ok(f64::INFINITY)
            }
        };
        b.check_result(run(), || case.label());
    }
    b.finish()
}

fn fisher_shift_invariance(sampled: &[&Case], u: &UnitSystem) -> CheckGroup {
    let mut b = GroupBuilder::new("fisher-shift-invariance", 1e-10);
    for case in sampled {
        let case = *case;
        let run = || -> Result<f64> {
            let base = spectrum::derive_state(
                &case.spec(Variant::KratzerFues)?,
                case.mol.mu,
                &case.qn,
                u,
            )?;
            let shifted = spectrum::derive_state(
                &case.spec(Variant::ModifiedKratzer)?,
                case.mol.mu,
                &case.qn,
                u,
            )?;
            let a = oracle::fisher_quadrature(&base)?;
            let c = oracle::fisher_quadrature(&shifted)?;
            Ok((a.total - c.total).abs() / a.total.abs())
        };
        b.check_result(run(), || case.label());
    }
    b.finish()
}

fn polynomial_identities() -> CheckGroup {
    let mut b = GroupBuilder::new("polynomial-identities", 1e-10);
    // Weighted Gegenbauer squares: closed form vs quadrature.
    for n in 0..=6 {
        for v in [1.0, 1.5, 3.0] {
            let run = || -> Result<f64> {
                let closed = specfun::gegenbauer_weighted_sq_integral(n, v)?;
                let quad = specfun::gegenbauer_weighted_sq_quadrature(n, v)?;
                Ok((closed - quad).abs() / closed.abs().max(1.0))
            };
            b.check_result(run(), || format!("weighted square n={n} v={v}"));
        }
    }
    // Laguerre orthogonality. Off-diagonal entries cancel to zero, so the
    // residual is judged against the diagonal norms, not against the zero.
    for n in 0..=5u32 {
        for m in 0..=5u32 {
            for a in [0.5, 1.0, 2.0] {
                let run = || -> Result<f64> {
                    let closed = specfun::laguerre_orthogonality(n, m, a)?;
                    let quad = specfun::laguerre_weighted_product_quadrature(n, m, a, a, a)?;
                    let scale = specfun::laguerre_orthogonality(n, n, a)?
                        .max(specfun::laguerre_orthogonality(m, m, a)?)
                        .max(1.0);
                    Ok((closed - quad).abs() / scale)
                };
                b.check_result(run(), || format!("orthogonality n={n} m={m} a={a}"));
            }
        }
    }
    // Raised-weight diagonal moment:
    //   int x^a e^{-x} [L_n^{a-1}]^2 = (a + 2n) Gamma(a + n) / Gamma(n + 1).
    for n in 0..=5u32 {
        for a in [0.5, 1.0, 2.0] {
            let nf = f64::from(n);
            let want =
                (a + 2.0 * nf) * (specfun::log_gamma(a + nf) - specfun::log_gamma(nf + 1.0)).exp();
            let run = || -> Result<f64> {
                let quad =
                    specfun::laguerre_weighted_product_quadrature(n, n, a, a - 1.0, a - 1.0)?;
                Ok((quad - want).abs() / want.abs().max(1.0))
            };
            b.check_result(run(), || format!("raised-weight moment n={n} a={a}"));
        }
    }
    // General product integral on mixed exponents.
    for n in 0..=3u32 {
        for m in 0..=3u32 {
            for a in [1.5, 3.0] {
                for dp in [-1.0, 0.0, 1.0] {
                    let p = a + dp;
                    let run = || -> Result<f64> {
                        let closed = specfun::laguerre_offdiag_integral(n, m, p, a, a)?;
                        let quad = specfun::laguerre_weighted_product_quadrature(n, m, p, a, a)?;
                        Ok((closed - quad).abs() / closed.abs().max(1.0))
                    };
                    b.check_result(run(), || format!("product n={n} m={m} p={p} a={a}"));
                }
            }
        }
    }
    b.finish()
}

fn recurrence_residual() -> CheckGroup {
    let mut b = GroupBuilder::new("recurrence-residual", 1e-12);
    for n in 0..=10u32 {
        for lambda in [0.6, 1.0, 2.5, 5.0] {
            for k in 0..21 {
                let x = -1.0 + 2.0 * k as f64 / 20.0;
                let run = || -> Result<f64> {
                    let res = specfun::gegenbauer_recurrence_check(n, lambda, x)?;
                    let scale = specfun::gegenbauer(n + 2, lambda, x)?.abs().max(1.0);
                    Ok(res.abs() / scale)
                };
                b.check_result(run(), || format!("n={n} lambda={lambda} x={x:.3}"));
            }
        }
    }
    b.finish()
}

fn table_fisher(config: &RunConfig, u: &UnitSystem) -> Result<CheckGroup> {
    let mut b = GroupBuilder::informational("table-fisher");
    for row in golden::FISHER_ROWS.iter() {
        let mol = find_molecule(&config.catalog, row.molecule)?;
        let qn = QuantumNumbers::new(row.n, row.ntilde, row.m);
        for (eta, reference) in [(1.0, row.eta1), (10.0, row.eta10)] {
            let spec = from_molecule(mol, Variant::KratzerFues, eta)?;
            let dev = spectrum::derive_state(&spec, mol.mu, &qn, u)
                .and_then(|state| fisher::fisher_total(&state, FisherMode::ClosedForm))
                .map(|rep| (rep.total - reference).abs())
                .unwrap_or(f64::NAN);
            b.check(dev, String::new);
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::app::CommandKind;
    use crate::model::builtin_molecules;

    fn config() -> RunConfig {
        RunConfig::new(CommandKind::Verify, builtin_molecules())
    }

    #[test]
    fn subsample_is_even_and_capped() {
        let items: Vec<u32> = (0..120).collect();
        let picked = subsample(&items, Some(3));
        assert_eq!(picked.len(), 3);
        assert_eq!(*picked[0], 0);
        assert_eq!(*picked[1], 40);
        assert_eq!(*picked[2], 80);
        assert_eq!(subsample(&items, None).len(), 120);
        assert_eq!(subsample(&items, Some(500)).len(), 120);
    }

    #[test]
    fn splitmix_is_deterministic_and_in_range() {
        let mut a = SplitMix64(7);
        let mut c = SplitMix64(7);
        for _ in 0..100 {
            let x = a.unit();
            assert_eq!(x, c.unit());
            assert!((0.0..1.0).contains(&x));
        }
        let mut r = SplitMix64(9);
        for _ in 0..100 {
            assert!(r.upto(6) <= 6);
        }
    }

    #[test]
    fn fast_groups_pass() {
        let cfg = config();
        let u = UnitSystem::physical();
        let g = table_energies(&cfg, &u).unwrap();
        assert_eq!(g.checks, 120);
        assert_eq!(g.failures, 0, "worst {}", g.worst);
        let cases = tabulated_cases(&cfg).unwrap();
        let g = constant_shift(&cases, &u);
        assert_eq!(g.checks, 120);
        assert_eq!(g.failures, 0, "worst {}", g.worst);
        let g = fisher_radial_closed(&u);
        assert_eq!(g.checks, 50);
        assert_eq!(g.failures, 0, "worst {}", g.worst);
    }

    #[test]
    fn subsampled_suite_passes_and_reports_groups() {
        let mut cfg = config();
        cfg.states_limit = Some(4);
        let report = run_verify(&cfg).unwrap();
        assert!(report.ok(), "failures: {:?}", report.failing_cases());
        assert_eq!(report.groups.len(), 12);
        let norm = report
            .groups
            .iter()
            .find(|g| g.name == "normalization")
            .unwrap();
        assert_eq!(norm.checks, 4);
        let info = report
            .groups
            .iter()
            .find(|g| g.name == "table-fisher")
            .unwrap();
        assert!(info.informational);
        assert!(info.worst > 0.0, "recorded values sit on another scale");
        let t = report.to_table();
        assert_eq!(t.rows.len(), 12);
    }

    #[test]
    fn injected_error_trips_normalization() {
        let mut cfg = config();
        cfg.states_limit = Some(2);
        cfg.inject_norm_error = true;
        let report = run_verify(&cfg).unwrap();
        assert!(!report.ok());
        let norm = report
            .groups
            .iter()
            .find(|g| g.name == "normalization")
            .unwrap();
        assert_eq!(norm.failures, norm.checks);
        assert!(!report.failing_cases().is_empty());
    }
}
