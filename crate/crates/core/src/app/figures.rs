//! Figure-data emission: eight fixed CSV series.
//!
//! fig1/fig2 sample the potential surface V(r, theta) of the target molecule
//! (shifted and unshifted form respectively) in physical units. fig3 to fig5
//! sweep the three bound-state energies (0,0,0), (1,1,0), (3,2,1) against the
//! reduced mass, the equilibrium separation, and the well depth in natural
//! units with De = 15, re = 0.8, mu = 1 held where not swept and eta = 10.
//! fig6 to fig8 sweep the closed-form Fisher totals of the same states over
//! the same parameters at eta in {1, 10}; both potential variants are
//! emitted side by side, and their columns agree identically because the
//! measures never see the constant offset. Sweep grids are fixed here, not
//! configurable: the series are reference artifacts.

use super::{resolve_target, ResolvedTarget, RunConfig};
use crate::model::{eval_spec, PotentialSpec, UnitSystem, Variant};
use crate::output::{Cell, Table};
use crate::spectrum::{self, QuantumNumbers};
use crate::{FisherMode, Result};

const SURFACE_POINTS: usize = 61;
const SURFACE_ETA: f64 = 10.0;
const SWEEP_DE: f64 = 15.0;
const SWEEP_RE: f64 = 0.8;
const SWEEP_MU: f64 = 1.0;
const SWEEP_ETA: f64 = 10.0;

fn sweep_states() -> [QuantumNumbers; 3] {
    [
        QuantumNumbers::new(0, 0, 0),
        QuantumNumbers::new(1, 1, 0),
        QuantumNumbers::new(3, 2, 1),
    ]
}

#[derive(Clone, Copy)]
enum SweepVar {
    Mu,
    Re,
    De,
}

impl SweepVar {
    fn column(self) -> &'static str {
        match self {
            SweepVar::Mu => "mu",
            SweepVar::Re => "re",
            SweepVar::De => "De",
        }
    }

    fn grid(self) -> Vec<f64> {
        match self {
            SweepVar::Mu => (0..=96).map(|i| 0.2 + 0.05 * f64::from(i)).collect(),
            SweepVar::Re => (0..=56).map(|i| 0.2 + 0.05 * f64::from(i)).collect(),
            SweepVar::De => (0..=98).map(|i| 1.0 + 0.5 * f64::from(i)).collect(),
        }
    }

    /// (De, re, mu) with the swept slot replaced by `x`.
    fn params(self, x: f64) -> (f64, f64, f64) {
        match self {
            SweepVar::Mu => (SWEEP_DE, SWEEP_RE, x),
            SweepVar::Re => (SWEEP_DE, x, SWEEP_MU),
            SweepVar::De => (x, SWEEP_RE, SWEEP_MU),
        }
    }
}

fn sweep_spec(de: f64, re: f64, variant: Variant, eta: f64) -> Result<PotentialSpec> {
    let a = de * re * re;
    let b = 2.0 * de * re;
    match variant {
        Variant::KratzerFues => PotentialSpec::kratzer_fues(a, b, eta),
        _ => PotentialSpec::modified(a, b, eta),
    }
}

fn surface(name: &str, target: &ResolvedTarget, variant: Variant) -> Result<Table> {
    let spec = target.spec(variant, SURFACE_ETA)?;
    let mut table = Table::new(name, &["r", "theta", "v"]);
    let (r_lo, r_hi) = (0.6 * target.re, 3.0 * target.re);
    for i in 0..SURFACE_POINTS {
        let r = r_lo + (r_hi - r_lo) * i as f64 / (SURFACE_POINTS - 1) as f64;
        for j in 0..SURFACE_POINTS {
            let f = j as f64 / (SURFACE_POINTS - 1) as f64;
            let theta = std::f64::consts::PI * (0.05 + 0.9 * f);
            table.push(vec![
                r.into(),
                theta.into(),
                eval_spec(&spec, r, theta)?.into(),
            ]);
        }
    }
    Ok(table)
}

fn energy_sweep(name: &str, var: SweepVar) -> Result<Table> {
    let u = UnitSystem::natural();
    let mut columns = vec![var.column()];
    columns.extend_from_slice(&[
        "modified_000",
        "modified_110",
        "modified_321",
        "kratzer_fues_000",
        "kratzer_fues_110",
        "kratzer_fues_321",
    ]);
    let mut table = Table::new(name, &columns);
    for x in var.grid() {
        let (de, re, mu) = var.params(x);
        let mut row: Vec<Cell> = vec![x.into()];
        for variant in [Variant::ModifiedKratzer, Variant::KratzerFues] {
            let spec = sweep_spec(de, re, variant, SWEEP_ETA)?;
            for qn in sweep_states() {
                row.push(spectrum::energy(&spec, mu, &qn, &u).into());
            }
        }
        table.push(row);
    }
    Ok(table)
}

fn fisher_sweep(name: &str, var: SweepVar) -> Result<Table> {
    let u = UnitSystem::natural();
    let mut columns = vec![var.column()];
    columns.extend_from_slice(&[
        "eta1_modified_000",
        "eta1_modified_110",
        "eta1_modified_321",
        "eta1_kratzer_fues_000",
        "eta1_kratzer_fues_110",
        "eta1_kratzer_fues_321",
        "eta10_modified_000",
        "eta10_modified_110",
        "eta10_modified_321",
        "eta10_kratzer_fues_000",
        "eta10_kratzer_fues_110",
        "eta10_kratzer_fues_321",
    ]);
    let mut table = Table::new(name, &columns);
    for x in var.grid() {
        let (de, re, mu) = var.params(x);
        let mut row: Vec<Cell> = vec![x.into()];
        for eta in [1.0, 10.0] {
            for variant in [Variant::ModifiedKratzer, Variant::KratzerFues] {
                let spec = sweep_spec(de, re, variant, eta)?;
                for qn in sweep_states() {
                    let state = spectrum::derive_state(&spec, mu, &qn, &u)?;
                    let rep = crate::fisher::fisher_total(&state, FisherMode::ClosedForm)?;
                    row.push(rep.total.into());
                }
            }
        }
        table.push(row);
    }
    Ok(table)
}

/// All eight series in figure order.
pub fn run_figures(config: &RunConfig) -> Result<Vec<Table>> {
    let target = resolve_target(config)?;
    Ok(vec![
        surface("fig1", &target, Variant::ModifiedKratzer)?,
        surface("fig2", &target, Variant::KratzerFues)?,
        energy_sweep("fig3", SweepVar::Mu)?,
        energy_sweep("fig4", SweepVar::Re)?,
        energy_sweep("fig5", SweepVar::De)?,
        fisher_sweep("fig6", SweepVar::Mu)?,
        fisher_sweep("fig7", SweepVar::Re)?,
        fisher_sweep("fig8", SweepVar::De)?,
    ])
}
