use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use mie_ring_bench::{light_state, molecule, stiff_state};
use mie_ring_core::model::from_molecule;
use mie_ring_core::oracle::{
    check_normalization, fisher_quadrature, solve_angular, solve_radial, RadialGrid,
};
use mie_ring_core::specfun::{make_quadrature, QuadKind};
use mie_ring_core::spectrum::{energy, probability_density};
use mie_ring_core::{FisherMode, QuantumNumbers, UnitSystem, Variant};

fn bench_energy_grid(c: &mut Criterion) {
    let mol = molecule("ScH");
    let spec = from_molecule(&mol, Variant::KratzerFues, 10.0).unwrap();
    let u = UnitSystem::physical();
    c.bench_function("energy_120_levels", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for n in 0..6u32 {
                for nt in 0..5u32 {
                    for m in 0..4i32 {
                        acc += energy(&spec, mol.mu, &QuantumNumbers::new(n, nt, m), &u);
                    }
                }
            }
            black_box(acc)
        })
    });
}

fn bench_density(c: &mut Criterion) {
    let state = stiff_state();
    c.bench_function("density_stiff_point", |b| {
        b.iter(|| probability_density(black_box(&state), 1.65, 1.3).unwrap())
    });
}

fn bench_normalization(c: &mut Criterion) {
    let light = light_state();
    c.bench_function("normalization_light", |b| {
        b.iter(|| check_normalization(black_box(&light)).unwrap())
    });
    let stiff = stiff_state();
    c.bench_function("normalization_stiff", |b| {
        b.iter(|| check_normalization(black_box(&stiff)).unwrap())
    });
}

fn bench_fisher(c: &mut Criterion) {
    let state = stiff_state();
    c.bench_function("fisher_closed_stiff", |b| {
        b.iter(|| mie_ring_core::fisher::fisher_total(black_box(&state), FisherMode::ClosedForm))
    });
    c.bench_function("fisher_quadrature_stiff", |b| {
        b.iter(|| fisher_quadrature(black_box(&state)).unwrap())
    });
}

fn bench_quadrature_nodes(c: &mut Criterion) {
    c.bench_function("gauss_legendre_64_nodes", |b| {
        b.iter(|| make_quadrature(QuadKind::GaussLegendre, black_box(64)).unwrap())
    });
}

fn bench_eigensolvers(c: &mut Criterion) {
    let mol = molecule("ScH");
    let spec = from_molecule(&mol, Variant::KratzerFues, 0.0).unwrap();
    let u = UnitSystem::physical();
    let grid = RadialGrid::suggested(&spec, mol.mu, 0.0, &u, 2).unwrap();
    let mut group = c.benchmark_group("eigensolvers");
    group.sample_size(10);
    group.bench_function("radial_sch_richardson", |b| {
        b.iter(|| solve_radial(black_box(&spec), mol.mu, 0.0, &u, &grid, 3).unwrap())
    });
    group.bench_function("angular_eta10_m1", |b| {
        b.iter(|| solve_angular(black_box(10.0), 1, 6).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_energy_grid,
    bench_density,
    bench_normalization,
    bench_fisher,
    bench_quadrature_nodes,
    bench_eigensolvers
);
criterion_main!(benches);
