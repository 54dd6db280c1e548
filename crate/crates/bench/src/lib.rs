//! Shared fixtures for the criterion benches: one light state and one in the
//! stiff corner of the catalog (largest radial exponent), so the hot paths
//! are timed at both ends of the parameter range.

use mie_ring_core::model::{builtin_molecules, find_molecule, from_molecule};
use mie_ring_core::spectrum::derive_state;
use mie_ring_core::{Molecule, QuantumNumbers, QuantumState, UnitSystem, Variant};

pub fn molecule(name: &str) -> Molecule {
    find_molecule(&builtin_molecules(), name).unwrap().clone()
}

pub fn state(name: &str, n: u32, ntilde: u32, m: i32, eta: f64) -> QuantumState {
    let mol = molecule(name);
    let spec = from_molecule(&mol, Variant::KratzerFues, eta).unwrap();
    derive_state(
        &spec,
        mol.mu,
        &QuantumNumbers::new(n, ntilde, m),
        &UnitSystem::physical(),
    )
    .unwrap()
}

/// Light diatomic, low quantum numbers: the cheap end.
pub fn light_state() -> QuantumState {
    state("ScH", 0, 0, 0, 1.0)
}

/// Heaviest radial exponent in the catalog: the stiff end.
pub fn stiff_state() -> QuantumState {
    state("ScF", 5, 4, 3, 10.0)
}
