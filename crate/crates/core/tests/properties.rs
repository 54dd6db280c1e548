//! Randomized invariants. These complement the fixed-grid checks in the
//! verification suite: every property here must hold for arbitrary
//! parameters in the stated ranges, not just at tabulated points.

use proptest::prelude::*;

use mie_ring_core::fisher::{i_r_closed, i_theta_closed};
use mie_ring_core::model::{dimensionless_groups, eval_spec};
use mie_ring_core::output::fmt_sig;
use mie_ring_core::specfun::{
    gegenbauer, gegenbauer_deriv, gegenbauer_recurrence_check, laguerre_assoc, laguerre_deriv,
};
use mie_ring_core::spectrum::{derive_state, energy};
use mie_ring_core::{PotentialSpec, QuantumNumbers, QuantumState, UnitSystem, Variant};

fn spec_for(de: f64, re: f64, eta: f64, variant: Variant) -> PotentialSpec {
    let a = de * re * re;
    let b = 2.0 * de * re;
    match variant {
        Variant::KratzerFues => PotentialSpec::kratzer_fues(a, b, eta).unwrap(),
        Variant::ModifiedKratzer => PotentialSpec::modified(a, b, eta).unwrap(),
        Variant::Custom => unreachable!("properties use the molecular variants"),
    }
}

fn state_for(
    de: f64,
    re: f64,
    mu: f64,
    eta: f64,
    qn: QuantumNumbers,
    variant: Variant,
) -> QuantumState {
    let u = UnitSystem::physical();
    derive_state(&spec_for(de, re, eta, variant), mu, &qn, &u).unwrap()
}

proptest! {
    /// The corrected three-term recurrence holds at machine precision for
    /// arbitrary degree, weight index, and argument.
    #[test]
    fn gegenbauer_recurrence_residual_vanishes(
        n in 0u32..=10,
        lambda in 0.5f64..5.0,
        x in -1.0f64..=1.0,
    ) {
        let res = gegenbauer_recurrence_check(n, lambda, x).unwrap();
        let scale = gegenbauer(n + 2, lambda, x).unwrap().abs().max(1.0);
        prop_assert!(res.abs() <= 1e-12 * scale, "residual {res:.3e} at scale {scale:.3e}");
    }

    /// Laguerre three-term recurrence residual, anchored one degree up:
    /// (n+1) L_{n+1} - (2n + 1 + a - x) L_n + (n + a) L_{n-1} = 0.
    #[test]
    fn laguerre_recurrence_residual_vanishes(
        n in 1u32..=10,
        a in -0.9f64..5.0,
        x in 0.0f64..40.0,
    ) {
        let nf = f64::from(n);
        let t0 = (nf + 1.0) * laguerre_assoc(n + 1, a, x).unwrap();
        let t1 = (2.0 * nf + 1.0 + a - x) * laguerre_assoc(n, a, x).unwrap();
        let t2 = (nf + a) * laguerre_assoc(n - 1, a, x).unwrap();
        let res = (t0 - t1 + t2).abs();
        let scale = t0.abs().max(t1.abs()).max(t2.abs()).max(1.0);
        prop_assert!(res <= 1e-12 * scale, "residual {res:.3e} at scale {scale:.3e}");
    }

    /// The index-shift derivative rule agrees with a central difference of
    /// the evaluation itself, so the rule and the recurrence cross-check.
    #[test]
    fn gegenbauer_derivative_matches_central_difference(
        n in 1u32..=8,
        lambda in 0.5f64..4.0,
        x in -0.9f64..0.9,
    ) {
        let h = 1e-5;
        let numeric = (gegenbauer(n, lambda, x + h).unwrap()
            - gegenbauer(n, lambda, x - h).unwrap())
            / (2.0 * h);
        let closed = gegenbauer_deriv(n, lambda, x);
        prop_assert!(
            (closed - numeric).abs() <= 1e-6 * closed.abs().max(1.0),
            "closed {closed} vs numeric {numeric}"
        );
    }

    #[test]
    fn laguerre_derivative_matches_central_difference(
        n in 1u32..=8,
        a in -0.5f64..4.0,
        x in 0.1f64..30.0,
    ) {
        let h = 1e-5 * x.max(1.0);
        let numeric = (laguerre_assoc(n, a, x + h).unwrap()
            - laguerre_assoc(n, a, x - h).unwrap())
            / (2.0 * h);
        let closed = laguerre_deriv(n, a, x);
        prop_assert!(
            (closed - numeric).abs() <= 1e-6 * closed.abs().max(1.0),
            "closed {closed} vs numeric {numeric}"
        );
    }

    /// Levels march up monotonically with the radial quantum number.
    #[test]
    fn energy_increases_with_n(
        de in 0.5f64..8.0,
        re in 0.5f64..3.0,
        mu in 0.3f64..20.0,
        eta in 0.0f64..12.0,
        n in 0u32..8,
        ntilde in 0u32..5,
        m in -4i32..=4,
    ) {
        let u = UnitSystem::physical();
        let spec = spec_for(de, re, eta, Variant::KratzerFues);
        let lo = energy(&spec, mu, &QuantumNumbers::new(n, ntilde, m), &u);
        let hi = energy(&spec, mu, &QuantumNumbers::new(n + 1, ntilde, m), &u);
        prop_assert!(hi > lo, "E({}) = {hi} not above E({n}) = {lo}", n + 1);
    }

    /// With the ring term off, the effective index collapses to ntilde + |m|,
    /// so any two states sharing that sum are exactly degenerate.
    #[test]
    fn eta_zero_states_with_equal_index_sum_are_degenerate(
        de in 0.5f64..8.0,
        re in 0.5f64..3.0,
        mu in 0.3f64..20.0,
        n in 0u32..6,
        ntilde in 0u32..5,
        m1 in -4i32..=4,
        m2 in -4i32..=4,
    ) {
        prop_assume!(ntilde + m1.unsigned_abs() >= m2.unsigned_abs());
        let nt2 = ntilde + m1.unsigned_abs() - m2.unsigned_abs();
        let u = UnitSystem::physical();
        let spec = spec_for(de, re, 0.0, Variant::KratzerFues);
        let e1 = energy(&spec, mu, &QuantumNumbers::new(n, ntilde, m1), &u);
        let e2 = energy(&spec, mu, &QuantumNumbers::new(n, nt2, m2), &u);
        prop_assert_eq!(e1, e2);
    }

    /// Shifting the well offset moves every level by exactly that offset.
    #[test]
    fn variant_shift_moves_levels_by_the_well_depth(
        de in 0.5f64..8.0,
        re in 0.5f64..3.0,
        mu in 0.3f64..20.0,
        eta in 0.0f64..12.0,
        n in 0u32..6,
        ntilde in 0u32..5,
        m in -4i32..=4,
    ) {
        let u = UnitSystem::physical();
        let qn = QuantumNumbers::new(n, ntilde, m);
        let base = energy(&spec_for(de, re, eta, Variant::KratzerFues), mu, &qn, &u);
        let shifted = energy(&spec_for(de, re, eta, Variant::ModifiedKratzer), mu, &qn, &u);
        let dev = ((shifted - base) - de).abs();
        prop_assert!(dev <= 1e-12 * de, "shift off by {dev:.3e} eV");
    }

    /// Everything the wavefunction is built from ignores the offset entirely.
    #[test]
    fn derived_state_fields_are_offset_invariant(
        de in 0.5f64..8.0,
        re in 0.5f64..3.0,
        mu in 0.3f64..20.0,
        eta in 0.0f64..12.0,
        n in 0u32..6,
        ntilde in 0u32..5,
        m in -4i32..=4,
    ) {
        let qn = QuantumNumbers::new(n, ntilde, m);
        let a = state_for(de, re, mu, eta, qn, Variant::KratzerFues);
        let b = state_for(de, re, mu, eta, qn, Variant::ModifiedKratzer);
        prop_assert_eq!(a.varsigma, b.varsigma);
        prop_assert_eq!(a.gamma, b.gamma);
        prop_assert_eq!(a.zeta, b.zeta);
        prop_assert_eq!(a.norm_product, b.norm_product);
    }

    /// Every closed-form information component carries the decay rate
    /// squared as an overall factor, so doubling it quadruples each part
    /// exactly (scaling by a power of two commutes with rounding).
    #[test]
    fn information_components_scale_with_the_squared_decay_rate(
        de in 0.5f64..8.0,
        re in 0.5f64..3.0,
        mu in 0.3f64..20.0,
        eta in 0.1f64..12.0,
        n in 0u32..6,
        ntilde in 0u32..5,
        m in -4i32..=4,
    ) {
        let qn = QuantumNumbers::new(n, ntilde, m);
        let base = state_for(de, re, mu, eta, qn, Variant::KratzerFues);
        let mut doubled = base;
        doubled.varsigma *= 2.0;

        let (rp1, rt1) = i_r_closed(&base);
        let (rp2, rt2) = i_r_closed(&doubled);
        for (p1, p2) in rp1.iter().zip(rp2.iter()) {
            prop_assert_eq!(4.0 * p1, *p2);
        }
        prop_assert_eq!(4.0 * rt1, rt2);

        if let (Ok((tp1, tt1)), Ok((tp2, tt2))) =
            (i_theta_closed(&base), i_theta_closed(&doubled))
        {
            for (p1, p2) in tp1.iter().zip(tp2.iter()) {
                prop_assert_eq!(4.0 * p1, *p2);
            }
            prop_assert_eq!(4.0 * tt1, tt2);
        }
    }

    /// The combined radial form equals its five-part sum for arbitrary
    /// parameters, not just the audited draws.
    #[test]
    fn radial_information_parts_sum_to_the_combined_form(
        de in 0.5f64..8.0,
        re in 0.5f64..3.0,
        mu in 0.3f64..20.0,
        eta in 0.0f64..12.0,
        n in 0u32..7,
        ntilde in 0u32..6,
        m in -4i32..=4,
    ) {
        let qn = QuantumNumbers::new(n, ntilde, m);
        let state = state_for(de, re, mu, eta, qn, Variant::KratzerFues);
        let (parts, combined) = i_r_closed(&state);
        let sum: f64 = parts.iter().sum();
        prop_assert!(
            (sum - combined).abs() <= 1e-10 * combined.abs().max(1.0),
            "parts {sum} vs combined {combined}"
        );
    }

    /// The well floor sits at c - De over the equilibrium ring, and no point
    /// of the surface dips below it.
    #[test]
    fn potential_is_bounded_below_by_the_well_floor(
        de in 0.5f64..20.0,
        re in 0.5f64..3.0,
        eta in 0.0f64..12.0,
        r_scale in 0.2f64..10.0,
        theta in 0.05f64..3.09,
        shifted in proptest::bool::ANY,
    ) {
        let variant = if shifted { Variant::ModifiedKratzer } else { Variant::KratzerFues };
        let spec = spec_for(de, re, eta, variant);
        let floor = spec.c - de;
        let at_min = eval_spec(&spec, re, std::f64::consts::FRAC_PI_2).unwrap();
        prop_assert!(
            (at_min - floor).abs() <= 1e-12 * de.max(1.0),
            "well floor {at_min} vs {floor}"
        );
        let v = eval_spec(&spec, r_scale * re, theta).unwrap();
        prop_assert!(v >= floor - 1e-12 * de.max(1.0), "V = {v} below floor {floor}");
    }

    /// Both scale groups are linear in the reduced mass; doubling mu doubles
    /// them bitwise.
    #[test]
    fn scale_groups_are_linear_in_the_reduced_mass(
        de in 0.5f64..8.0,
        re in 0.5f64..3.0,
        mu in 0.3f64..20.0,
        eta in 0.0f64..12.0,
    ) {
        let u = UnitSystem::physical();
        let spec = spec_for(de, re, eta, Variant::KratzerFues);
        let (a1, b1) = dimensionless_groups(&spec, mu, &u);
        let (a2, b2) = dimensionless_groups(&spec, 2.0 * mu, &u);
        prop_assert_eq!(2.0 * a1, a2);
        prop_assert_eq!(2.0 * b1, b2);
    }

    /// Twelve significant digits survive a round trip, and formatting is
    /// idempotent: re-rendering the parsed value reproduces the string.
    #[test]
    fn formatted_numbers_round_trip(x in proptest::num::f64::ANY) {
        prop_assume!(x.is_finite());
        let rendered = fmt_sig(x, 12);
        let parsed: f64 = rendered.parse().unwrap();
        let tol = 1e-11 * x.abs().max(f64::MIN_POSITIVE);
        prop_assert!(
            (parsed - x).abs() <= tol,
            "{x} rendered as {rendered}, parsed back to {parsed}"
        );
        prop_assert_eq!(fmt_sig(parsed, 12), rendered);
    }
}
