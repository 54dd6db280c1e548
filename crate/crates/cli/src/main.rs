use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mie_ring_core::app::{self, CommandKind, OutputFormat, RunConfig, Target, UnitKind};
use mie_ring_core::{Error, Result, Variant};

/// Exact bound states, probability densities, and Fisher information for the
/// Mie-type ring-shaped diatomic potential.
#[derive(Parser)]
#[command(name = "mie-ring", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound-state energies over a quantum-number selection
    Spectrum(SelectArgs),
    /// Fisher information per state, closed form beside quadrature
    Fisher(SelectArgs),
    /// Probability density sampled on an (r, theta) grid
    Density(SelectArgs),
    /// Reference-table comparison artifacts (energies gated, information
    /// deltas reported)
    Tables(SelectArgs),
    /// Figure-series data: potential surfaces and parameter sweeps
    Figures(SelectArgs),
    /// Run the invariant suite and report per-group pass/fail
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SelectArgs {
    /// Molecule name from the catalog (default: its first entry)
    #[arg(long, conflicts_with_all = ["de", "re", "mu"])]
    molecule: Option<String>,

    /// Dissociation energy in eV for a custom target (with --re and --mu)
    #[arg(long = "De", value_name = "EV")]
    de: Option<f64>,

    /// Equilibrium separation in Angstrom for a custom target
    #[arg(long, value_name = "ANGSTROM")]
    re: Option<f64>,

    /// Reduced mass in amu for a custom target
    #[arg(long, value_name = "AMU")]
    mu: Option<f64>,

    /// Radial quantum number: single value or inclusive range a..b
    #[arg(long, value_parser = parse_range_u32, default_value = "0")]
    n: (u32, u32),

    /// Polar quantum number: single value or inclusive range a..b
    #[arg(long, value_parser = parse_range_u32, default_value = "0")]
    ntilde: (u32, u32),

    /// Azimuthal quantum number: single value or inclusive range a..b
    #[arg(long, value_parser = parse_range_i32, default_value = "0")]
    m: (i32, i32),

    /// Ring-strength values, comma separated
    #[arg(long, value_delimiter = ',', default_value = "0")]
    eta: Vec<f64>,

    /// Potential variant: the plain well, the depth-shifted one, or both
    #[arg(long, value_enum, default_value_t = VariantArg::Both)]
    variant: VariantArg,

    /// Unit system (physical: eV and Angstrom; natural: hbar = 2 mu = 1)
    #[arg(long, value_enum, default_value_t = UnitsArg::Physical)]
    units: UnitsArg,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Write to this file (one table) or directory (several) instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    select: SelectArgs,

    /// Subsample the tabulated states to roughly this many per group
    #[arg(long, value_name = "N")]
    states: Option<usize>,

    /// Corrupt a normalization constant (negative control for the suite)
    #[arg(long, hide = true)]
    inject_norm_error: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    KratzerFues,
    Modified,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnitsArg {
    Physical,
    Natural,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn parse_range_u32(s: &str) -> std::result::Result<(u32, u32), String> {
    parse_range(s)
}

fn parse_range_i32(s: &str) -> std::result::Result<(i32, i32), String> {
    parse_range(s)
}

/// "a..b" (inclusive) or a bare "a".
fn parse_range<T: std::str::FromStr + Copy>(s: &str) -> std::result::Result<(T, T), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<T>()
            .map_err(|_| format!("'{t}' is not a number"))
    };
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

fn build_config(kind: CommandKind, args: &SelectArgs) -> Result<RunConfig> {
    let mut config = RunConfig::new(kind, app::load_catalog()?);
    config.target = match (&args.molecule, args.de, args.re, args.mu) {
        (Some(name), ..) => Some(Target::Molecule(name.clone())),
        (None, None, None, None) => None,
        (None, Some(de), Some(re), Some(mu)) => Some(Target::Custom { de, re, mu }),
        _ => {
            return Err(Error::Config(
                "custom targets need all three of --De, --re, --mu".into(),
            ))
        }
    };
    config.n = args.n;
    config.ntilde = args.ntilde;
    config.m = args.m;
    config.eta = args.eta.clone();
    config.variants = match args.variant {
        VariantArg::KratzerFues => vec![Variant::KratzerFues],
        VariantArg::Modified => vec![Variant::ModifiedKratzer],
        VariantArg::Both => vec![Variant::KratzerFues, Variant::ModifiedKratzer],
    };
    config.units = match args.units {
        UnitsArg::Physical => UnitKind::Physical,
        UnitsArg::Natural => UnitKind::Natural,
    };
    config.format = match args.format {
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Json => OutputFormat::Json,
    };
    config.out = args.out.clone();
    Ok(config)
}

fn execute(cli: &Cli) -> Result<bool> {
    let config = match &cli.command {
        Command::Spectrum(a) => build_config(CommandKind::Spectrum, a)?,
        Command::Fisher(a) => build_config(CommandKind::Fisher, a)?,
        Command::Density(a) => build_config(CommandKind::Density, a)?,
        Command::Tables(a) => build_config(CommandKind::Tables, a)?,
        Command::Figures(a) => build_config(CommandKind::Figures, a)?,
        Command::Verify(a) => {
            let mut c = build_config(CommandKind::Verify, &a.select)?;
            c.states_limit = a.states;
            c.inject_norm_error = a.inject_norm_error;
            c
        }
    };
    let outcome = app::run(&config)?;
    for line in &outcome.diagnostics {
        eprintln!("{line}");
    }
    app::emit(&config, &outcome.tables)?;
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
