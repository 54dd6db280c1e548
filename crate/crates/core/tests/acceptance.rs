//! End-to-end acceptance gate. Each test covers one release criterion at its
//! stated tolerance and prints a single summary line (visible under
//! `--nocapture`); the shared verification report is computed once over the
//! full tabulated state set.

use std::sync::OnceLock;
use std::time::Instant;

use mie_ring_core::app::golden::{EnergyRow, ENERGY_GROUP_A, ENERGY_GROUP_B};
use mie_ring_core::app::{run_verify, CheckGroup, CommandKind, RunConfig, VerifyReport};
use mie_ring_core::model::{builtin_molecules, find_molecule, from_molecule};
use mie_ring_core::oracle::check_normalization;
use mie_ring_core::spectrum::{derive_state, energy};
use mie_ring_core::{QuantumNumbers, UnitSystem, Variant};

static REPORT: OnceLock<VerifyReport> = OnceLock::new();

fn report() -> &'static VerifyReport {
    REPORT.get_or_init(|| {
        let config = RunConfig::new(CommandKind::Verify, builtin_molecules());
        run_verify(&config).expect("verification suite runs")
    })
}

fn group(name: &str) -> &'static CheckGroup {
    report()
        .groups
        .iter()
        .find(|g| g.name == name)
        .unwrap_or_else(|| panic!("missing group {name}"))
}

fn assert_group_passes(name: &str) -> &'static CheckGroup {
    let g = group(name);
    assert!(
        g.passed(),
        "{name}: {} of {} checks outside gate {:.0e}; first failures: {:?}",
        g.failures,
        g.checks,
        g.gate,
        g.failing
    );
    println!(
        "acceptance {name}: pass ({} checks, worst {:.3e}, gate {:.0e})",
        g.checks, g.worst, g.gate
    );
    g
}

fn golden_rows() -> impl Iterator<Item = &'static EnergyRow> {
    ENERGY_GROUP_A.iter().chain(ENERGY_GROUP_B.iter())
}

/// All 10 molecules x 6 states x eta in {0, 10}: the computed two-variant
/// energy pair must match the recorded pair (as a set, label order is not
/// trusted) within 5e-6 eV, and the whole sweep must be fast.
#[test]
fn reference_energy_pairs_reproduced_quickly() {
    let catalog = builtin_molecules();
    let u = UnitSystem::physical();
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut worst = 0.0f64;
    for row in golden_rows() {
        let mol = find_molecule(&catalog, row.molecule).unwrap();
        let qn = QuantumNumbers::new(row.n, row.ntilde, row.m);
        for (eta, recorded) in [(0.0, row.pair_eta0), (10.0, row.pair_eta10)] {
            let base = energy(
                &from_molecule(mol, Variant::KratzerFues, eta).unwrap(),
                mol.mu,
                &qn,
                &u,
            );
            let shift = energy(
                &from_molecule(mol, Variant::ModifiedKratzer, eta).unwrap(),
                mol.mu,
                &qn,
                &u,
            );
            let direct = (base - recorded[0]).abs().max((shift - recorded[1]).abs());
            let crossed = (base - recorded[1]).abs().max((shift - recorded[0]).abs());
            let delta = direct.min(crossed);
            worst = worst.max(delta);
            assert!(
                delta <= 5e-6,
                "{} ({},{},{}) eta={eta}: pair delta {delta:.3e} eV",
                row.molecule,
                row.n,
                row.ntilde,
                row.m
            );
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(pairs, 120);
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "energy sweep took {elapsed:?}, budget 1 s"
    );
    println!(
        "acceptance energy-pairs: pass (120 pairs, worst {worst:.3e} eV, gate 5e-6, {:.0} ms)",
        elapsed.as_secs_f64() * 1e3
    );
}

/// The depth-shifted variant sits exactly De above the plain one, state by
/// state: an algebraic identity of the level formula, so machine precision.
#[test]
fn variant_energy_difference_is_exactly_the_well_depth() {
    assert_group_passes("constant-shift");
}

/// Quadrature of the full probability density equals 1 within 1e-8 for all
/// 120 tabulated states, inside the runtime budget.
#[test]
fn all_tabulated_states_normalize_to_one() {
    let catalog = builtin_molecules();
    let u = UnitSystem::physical();
    let start = Instant::now();
    let mut states = 0usize;
    let mut worst = 0.0f64;
    for row in golden_rows() {
        let mol = find_molecule(&catalog, row.molecule).unwrap();
        let qn = QuantumNumbers::new(row.n, row.ntilde, row.m);
        for eta in [0.0, 10.0] {
            let spec = from_molecule(mol, Variant::KratzerFues, eta).unwrap();
            let state = derive_state(&spec, mol.mu, &qn, &u).unwrap();
            let norm = check_normalization(&state).unwrap();
            let dev = (norm - 1.0).abs();
            worst = worst.max(dev);
            assert!(
                dev <= 1e-8,
                "{} ({},{},{}) eta={eta}: norm {norm}",
                row.molecule,
                row.n,
                row.ntilde,
                row.m
            );
            states += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(states, 120);
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "normalization sweep took {elapsed:?}, budget 30 s"
    );
    println!(
        "acceptance normalization: pass (120 states, worst {worst:.3e}, gate 1e-8, {:.0} ms)",
        elapsed.as_secs_f64() * 1e3
    );
}

/// Finite-difference radial eigenvalues (Richardson-extrapolated) match the
/// closed-form levels within 1e-6 relative for ten states spanning the
/// catalog.
#[test]
fn radial_eigensolver_confirms_closed_form_levels() {
    let g = assert_group_passes("radial-eigensolver");
    assert_eq!(g.checks, 10);
}

/// Discretized polar eigenvalues confirm ell_eff = sqrt(m^2 + eta) + ntilde
/// within 1e-6 relative over eta in {0,1,5,10}, m in {0,1,2,4}, ntilde <= 5.
/// This pins eta (not eta^2) inside the square root.
#[test]
fn angular_eigensolver_confirms_effective_index() {
    let g = assert_group_passes("angular-eigensolver");
    assert_eq!(g.checks, 96);
}

/// The radial information closed form equals its five-part sum to 1e-10 on
/// 50 random parameter draws, and matches quadrature to 1e-6 in the
/// hydrogenic limit (a = 0, eta = 0, n = 0).
#[test]
fn radial_information_parts_sum_and_hydrogenic_quadrature_agree() {
    let g = assert_group_passes("fisher-radial-closed");
    assert_eq!(g.checks, 50);
    assert_group_passes("fisher-hydrogenic");
}

/// Quadrature-mode information is strictly positive for every tabulated
/// state and invariant under the c-shift between variants to 1e-10 relative.
#[test]
fn quadrature_information_is_positive_and_shift_invariant() {
    let g = assert_group_passes("fisher-positivity");
    assert_eq!(g.checks, 120);
    let g = assert_group_passes("fisher-shift-invariance");
    assert_eq!(g.checks, 120);
}

/// Weighted-integral identities for both polynomial families hold against
/// quadrature to 1e-10 over their stated grids; the corrected three-term
/// recurrence residual stays within 1e-12.
#[test]
fn polynomial_identity_suite_holds() {
    assert_group_passes("polynomial-identities");
    assert_group_passes("recurrence-residual");
}

/// The information-table comparison is informational only: the suite records
/// the worst delta against the recorded digits but never gates on it, because
/// the recorded values sit on a different scale than the closed forms.
#[test]
fn information_table_comparison_stays_informational() {
    let g = group("table-fisher");
    assert!(g.informational, "table-fisher must not gate");
    assert_eq!(g.failures, 0, "informational groups record no failures");
    assert_eq!(g.checks, 120);
    assert!(g.worst.is_finite());
    assert!(
        g.worst > 1.0,
        "deltas are expected to be large; worst {:.3e}",
        g.worst
    );
    println!(
        "acceptance table-fisher: informational (120 comparisons, worst delta {:.6e})",
        g.worst
    );
}
