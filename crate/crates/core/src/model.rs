//! The potential family, the molecule catalog, and the unit system.
//!
//! The general two-exponent form
//!   V(r, theta) = De [ k/(j-k) (re/r)^j - j/(j-k) (re/r)^k ]
//!                 + eta cos^2(theta) / (r^2 sin^2(theta))
//! has its minimum -De at (re, pi/2) for every j > k >= 1. The solvable
//! member is j = 2, k = 1, which rearranges to
//!   V = a/r^2 - b/r + c + ring term,  a = De re^2, b = 2 De re,
//! with c = 0 (the minimum sits at -De) or c = De (the minimum sits at 0).
//! Everything downstream consumes this a/b/c/eta form.

use crate::error::{Error, Result};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// Which vertical offset the a/b/c form carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// c = 0: the well bottom sits at -De.
    KratzerFues,
    /// c = De: the well bottom shifted to 0.
    ModifiedKratzer,
    /// Caller-supplied c.
    Custom,
}

impl Variant {
    pub fn label(&self) -> &'static str {
        match self {
            Variant::KratzerFues => "kratzer-fues",
            Variant::ModifiedKratzer => "modified",
            Variant::Custom => "custom",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kratzer-fues" => Ok(Variant::KratzerFues),
            "modified" | "modified-kratzer" => Ok(Variant::ModifiedKratzer),
            "custom" => Ok(Variant::Custom),
            other => Err(Error::Config(format!(
                "unknown variant '{other}' (expected kratzer-fues, modified, or custom)"
            ))),
        }
    }
}

/// General two-exponent ring-shaped potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiePotential {
    /// Dissociation energy, eV.
    pub de: f64,
    /// Equilibrium bond length, Angstrom.
    pub re: f64,
    /// Repulsive exponent.
    pub j: u32,
    /// Attractive exponent; j > k >= 1.
    pub k: u32,
    /// Ring-strength, dimensionless, >= 0.
    pub eta: f64,
}

impl MiePotential {
    pub fn new(de: f64, re: f64, j: u32, k: u32, eta: f64) -> Result<Self> {
        if !(de > 0.0) || !(re > 0.0) {
            return Err(Error::Domain(format!(
                "potential needs de > 0 and re > 0, got de = {de}, re = {re}"
            )));
        }
        if k < 1 || j <= k {
            return Err(Error::Domain(format!(
                "exponents must satisfy j > k >= 1, got j = {j}, k = {k}"
            )));
        }
        if !(eta >= 0.0) {
            return Err(Error::Domain(format!("eta must be >= 0, got {eta}")));
        }
        Ok(MiePotential { de, re, j, k, eta })
    }
}

/// The solvable a/b/c form plus ring strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    /// eV Angstrom^2; a = De re^2.
    pub a: f64,
    /// eV Angstrom; b = 2 De re.
    pub b: f64,
    /// eV; vertical offset.
    pub c: f64,
    /// Ring strength, dimensionless.
    pub eta: f64,
    pub variant: Variant,
}

impl PotentialSpec {
    fn validated(a: f64, b: f64, c: f64, eta: f64, variant: Variant) -> Result<Self> {
        // The named molecular variants need a genuine well (a > 0); a custom
        // spec may set a = 0, the pure-Coulomb limit used for cross-checks.
        let a_ok = if variant == Variant::Custom {
            a >= 0.0
        } else {
            a > 0.0
        };
        if !a_ok || !(b > 0.0) {
            return Err(Error::Domain(format!(
                "potential spec needs a > 0 (>= 0 for custom) and b > 0, got a = {a}, b = {b}"
            )));
        }
        if !(eta >= 0.0) {
            return Err(Error::Domain(format!("eta must be >= 0, got {eta}")));
        }
        Ok(PotentialSpec {
            a,
            b,
            c,
            eta,
            variant,
        })
    }

    /// c = 0 form.
    pub fn kratzer_fues(a: f64, b: f64, eta: f64) -> Result<Self> {
        Self::validated(a, b, 0.0, eta, Variant::KratzerFues)
    }

    /// c = De form; De recovered as b^2 / (4a).
    pub fn modified(a: f64, b: f64, eta: f64) -> Result<Self> {
        let de = b * b / (4.0 * a);
        Self::validated(a, b, de, eta, Variant::ModifiedKratzer)
    }

    /// Arbitrary offset.
    pub fn custom(a: f64, b: f64, c: f64, eta: f64) -> Result<Self> {
        Self::validated(a, b, c, eta, Variant::Custom)
    }

    /// The dissociation energy implied by a and b: De = b^2 / (4a).
    pub fn dissociation_energy(&self) -> f64 {
        self.b * self.b / (4.0 * self.a)
    }

    /// The equilibrium separation implied by a and b: re = 2a / b.
    pub fn equilibrium_separation(&self) -> f64 {
        2.0 * self.a / self.b
    }

    /// Same well, other offset.
    pub fn with_variant(&self, variant: Variant) -> Self {
        let c = match variant {
            Variant::KratzerFues => 0.0,
            Variant::ModifiedKratzer => self.dissociation_energy(),
            Variant::Custom => self.c,
        };
        PotentialSpec {
            c,
            variant,
            ..*self
        }
    }
}

/// Catalog entry: spectroscopic constants of one diatomic molecule.
#[derive(Debug, Clone, PartialEq)]
pub struct Molecule {
    pub name: String,
    /// Dissociation energy, eV.
    pub de: f64,
    /// Equilibrium bond length, Angstrom.
    pub re: f64,
    /// Reduced mass, amu.
    pub mu: f64,
}

impl Molecule {
    pub fn new(name: &str, de: f64, re: f64, mu: f64) -> Result<Self> {
        if !(de > 0.0) || !(re > 0.0) || !(mu > 0.0) {
            return Err(Error::Domain(format!(
                "molecule '{name}' needs positive constants, got de = {de}, re = {re}, mu = {mu}"
            )));
        }
        Ok(Molecule {
            name: name.to_string(),
            de,
            re,
            mu,
        })
    }
}

/// Conversion constants taking (eV, Angstrom, amu) into the dimensionless
/// groups of the spectrum formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    /// eV per amu (mass-energy); 931.494028e6 in physical mode.
    pub amu_to_ev: f64,
    /// hbar*c in eV Angstrom; 1973.29 in physical mode.
    pub hbar_c: f64,
}

impl UnitSystem {
    /// The frozen physical constants. These exact values (not a newer CODATA
    /// set) are what the reference energy tables were produced with, so they
    /// stay fixed for bit-consistent reproduction.
    pub fn physical() -> Self {
        UnitSystem {
            amu_to_ev: 931.494_028e6,
            hbar_c: 1973.29,
        }
    }

    /// hbar = 1, mass unit = energy unit: the convention of the parameter
    /// sweep figures (mu = 1, De = 15, re = 0.8 and so on).
    pub fn natural() -> Self {
        UnitSystem {
            amu_to_ev: 1.0,
            hbar_c: 1.0,
        }
    }

    /// 2 mu / hbar^2 in (eV Angstrom^2)^-1 for mu in amu.
    pub fn two_mu_over_hbar_sq(&self, mu: f64) -> f64 {
        2.0 * mu * self.amu_to_ev / (self.hbar_c * self.hbar_c)
    }
}

/// General-form potential energy at (r, theta); eV.
pub fn eval_mie(p: &MiePotential, r: f64, theta: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let jk = f64::from(p.j - p.k);
    let radial = p.de
        * (f64::from(p.k) / jk * (p.re / r).powi(p.j as i32)
            - f64::from(p.j) / jk * (p.re / r).powi(p.k as i32));
    Ok(radial + ring_term(p.eta, r, theta)?)
}

/// a/b/c-form potential energy at (r, theta); eV.
pub fn eval_spec(p: &PotentialSpec, r: f64, theta: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let radial = p.a / (r * r) - p.b / r + p.c;
    Ok(radial + ring_term(p.eta, r, theta)?)
}

/// eta cos^2(theta) / (r^2 sin^2(theta)); exactly 0 when eta = 0 regardless
/// of theta (the term is absent, so the polar axis is not special).
fn ring_term(eta: f64, r: f64, theta: f64) -> Result<f64> {
    if eta == 0.0 {
        return Ok(0.0);
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::SingularParameter(format!(
            "ring term diverges on the polar axis: theta = {theta} with eta = {eta}"
        )));
    }
    let s = theta.sin();
    let c = theta.cos();
    Ok(eta * c * c / (r * r * s * s))
}

/// Map a catalog molecule onto the solvable form: a = De re^2, b = 2 De re,
/// c per variant. The custom variant is rejected because it carries no
/// molecule-derived offset.
pub fn from_molecule(m: &Molecule, variant: Variant, eta: f64) -> Result<PotentialSpec> {
    let a = m.de * m.re * m.re;
    let b = 2.0 * m.de * m.re;
    match variant {
        Variant::KratzerFues => PotentialSpec::kratzer_fues(a, b, eta),
        Variant::ModifiedKratzer => PotentialSpec::modified(a, b, eta),
        Variant::Custom => Err(Error::Config(
            "the custom variant needs an explicit offset; use kratzer-fues or modified".into(),
        )),
    }
}

/// The two scale groups of the bound-state formula:
/// (2 mu a / hbar^2, dimensionless) and (2 mu b^2 / hbar^2, eV).
pub fn dimensionless_groups(p: &PotentialSpec, mu: f64, u: &UnitSystem) -> (f64, f64) {
    let k2 = u.two_mu_over_hbar_sq(mu);
    (k2 * p.a, k2 * p.b * p.b)
}

/// The ten-molecule catalog shipped with the crate: first-row transition
/// metal hydrides plus five heavier partners, with dissociation energies,
/// bond lengths, and reduced masses as tabulated in the reference data.
pub fn builtin_molecules() -> Vec<Molecule> {
    [
        ("ScH", 2.25, 1.776, 0.986040),
        ("TiH", 2.05, 1.781, 0.987371),
        ("VH", 2.33, 1.719, 0.988005),
        ("CrH", 2.13, 1.694, 0.988976),
        ("MnH", 1.67, 1.753, 0.989984),
        ("CuLi", 1.74, 2.310, 6.259494),
        ("TiC", 2.66, 1.790, 9.606079),
        ("NiC", 2.76, 1.621, 9.974265),
        ("ScN", 4.56, 1.768, 10.682771),
        ("ScF", 5.85, 1.794, 13.358942),
    ]
    .into_iter()
    .map(|(name, de, re, mu)| Molecule::new(name, de, re, mu).expect("catalog constants"))
    .collect()
}

/// Find a molecule by name in a catalog slice.
pub fn find_molecule<'a>(catalog: &'a [Molecule], name: &str) -> Result<&'a Molecule> {
    catalog
        .iter()
        .find(|m| m.name == name)
        .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
}

const CATALOG_HEADER: &str = "name,De_eV,re_angstrom,mu_amu";

/// Parse a molecule catalog CSV. The header must be exactly
/// `name,De_eV,re_angstrom,mu_amu`; rows are name plus three positive
/// numbers. An empty file is an empty catalog (callers may warn).
pub fn load_molecules(path: &Path) -> Result<Vec<Molecule>> {
    let text = std::fs::read_to_string(path)?;
    parse_molecules(&text)
}

pub fn parse_molecules(text: &str) -> Result<Vec<Molecule>> {
    let mut out = Vec::new();
    let mut saw_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() {
            continue;
        }
        if !saw_header {
            if line != CATALOG_HEADER {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected header '{CATALOG_HEADER}', got '{line}'"),
                });
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 4 comma-separated fields, got {}", fields.len()),
            });
        }
        let mut nums = [0.0f64; 3];
        for (slot, field) in nums.iter_mut().zip(&fields[1..]) {
            *slot = field.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("'{field}' is not a number"),
            })?;
        }
        let m = Molecule::new(fields[0], nums[0], nums[1], nums[2]).map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        out.push(m);
    }
    Ok(out)
}
