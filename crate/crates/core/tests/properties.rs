mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use qcorr::channels::{apply_local, compose, dephasing, depolarizing, gad, validate_cptp};
use qcorr::correlations::{gd_closed, min_closed};
use qcorr::csv::g12;
use qcorr::markov::{evolve_family, uniform_grid, NoiseKind, RateSchedule};
use qcorr::nonmarkov::{
    amplitude_channel, amplitude_p, dephasing_p, evolve_nonmarkov, kernel_from_spectrum, DecoherenceFunction,
    LorentzianSpectrum, NonMarkovKind,
};
use qcorr::random::{random_state, random_unitary2};
use qcorr::states::{as_x_state, make_family, off_x_magnitude, StateFamily, StateFamilyParam};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family() -> impl Strategy<Value = StateFamily> {
    prop_oneof![
        Just(StateFamily::Pure),
        Just(StateFamily::Werner),
        Just(StateFamily::VedralPlenio)
    ]
}

fn noise(p: f64) -> [NoiseKind; 4] {
    [
        NoiseKind::Depolarizing,
        NoiseKind::Dephasing,
        NoiseKind::Damping { p },
        NoiseKind::Combined { p },
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ordering_on_random_states(seed in any::<u64>()) {
        let s = random_state(&mut ChaCha8Rng::seed_from_u64(seed));
        let (m, g) = (min_closed(&s), gd_closed(&s));
        prop_assert!(0.0 <= g && g <= m + 1e-12 && m <= 0.5 + 1e-12);
    }

    #[test]
    fn local_unitaries_leave_correlations(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state(&mut rng);
        let r = s.apply_local_unitary(&random_unitary2(&mut rng), &random_unitary2(&mut rng)).unwrap();
        prop_assert!((min_closed(&r) - min_closed(&s)).abs() <= 1e-9);
        prop_assert!((gd_closed(&r) - gd_closed(&s)).abs() <= 1e-9);
    }

    #[test]
    fn channels_are_trace_preserving(g in 0.0..=1.0f64, p in 0.0..=1.0f64) {
        for kind in noise(p) {
            prop_assert!(validate_cptp(&kind.channel(g).unwrap()));
        }
        prop_assert!(validate_cptp(&compose(&depolarizing(g).unwrap(), &gad(g, p).unwrap()).unwrap()));
    }

    #[test]
    fn channels_keep_x_states(f in family(), a in 0.0..=1.0f64, g in 0.0..=1.0f64, p in 0.0..=1.0f64) {
        let s = make_family(StateFamilyParam::new(f, a).unwrap()).unwrap();
        for kind in noise(p) {
            let ch = kind.channel(g).unwrap();
            let out = apply_local(&ch, &ch, &s).unwrap();
            prop_assert!(off_x_magnitude(out.matrix()) <= 1e-12);
            prop_assert!(out.eigenvalues()[3] >= -1e-12);
            prop_assert!((out.matrix().trace().re - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn unital_noise_does_not_raise_correlations(f in family(), a in 0.0..=1.0f64, t in 0.0..6.0f64) {
        let param = StateFamilyParam::new(f, a).unwrap();
        for kind in [NoiseKind::Depolarizing, NoiseKind::Dephasing] {
            let sched = RateSchedule::new(kind, 1.0).unwrap();
            let rows = evolve_family(param, &sched, &[0.0, t, t + 0.5]).unwrap();
            for w in rows.windows(2) {
                prop_assert!(w[1].min_engine <= w[0].min_engine + 1e-10);
                prop_assert!(w[1].gd_engine <= w[0].gd_engine + 1e-10);
            }
        }
    }

    #[test]
    fn twelve_digit_round_trip(x in prop::num::f64::NORMAL) {
        let back: f64 = g12(x).parse().unwrap();
        prop_assert!((back - x).abs() <= 5e-12 * x.abs());
    }

    #[test]
    fn decoherence_functions_are_bounded(lambda in 0.05..30.0f64, delta in -0.5..0.5f64) {
        let spec = LorentzianSpectrum::new(1.0, lambda, delta, 1.0).unwrap();
        let grid = uniform_grid(20.0, 201);
        prop_assert!(DecoherenceFunction::amplitude(&spec, &grid).is_ok());
        let pd = dephasing_p(&kernel_from_spectrum(&spec), &grid).unwrap();
        for (t, v) in pd.times().iter().zip(pd.values()) {
            prop_assert!((v - amplitude_p(&spec, *t)).norm() < 1e-8);
        }
    }

    #[test]
    fn amplitude_engine_is_physical(a in 0.0..=1.0f64, f in family(), re in -1.0..=1.0f64, im in -1.0..=1.0f64) {
        let p = Complex64::new(re, im);
        let p = if p.norm() > 1.0 { p / p.norm() } else { p };
        let s0 = make_family(StateFamilyParam::new(f, a).unwrap()).unwrap();
        let ch = amplitude_channel(p).unwrap();
        let out = apply_local(&ch, &ch, &s0).unwrap();
        prop_assert!(out.eigenvalues()[3] >= -1e-9);
        prop_assert!((out.matrix().trace().re - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn dephasing_matrix_map_matches_kraus_engine_in_modulus() {
    let spec = LorentzianSpectrum::new(1.0, 0.3, 0.2, 1.0).unwrap();
    let grid = uniform_grid(10.0, 101);
    let pd = dephasing_p(&kernel_from_spectrum(&spec), &grid).unwrap();
    for f in [StateFamily::Pure, StateFamily::Werner, StateFamily::VedralPlenio] {
        let start = make_family(StateFamilyParam::new(f, 0.35).unwrap()).unwrap();
        let s0 = as_x_state(&start).unwrap();
        let rows = evolve_nonmarkov(&s0, NonMarkovKind::Dephasing, &pd, None).unwrap();
        for (r, &p) in rows.iter().zip(pd.values()) {
            // dephasing Kraus pair {diag(1, p), diag(0, q)} on both qubits
            let q = (1.0 - p.norm_sqr()).max(0.0).sqrt();
            let ch = qcorr::channels::QubitChannel::new(
                vec![
                    qcorr::qmat::CMatrix2::diag([Complex64::new(1.0, 0.0), p]),
                    qcorr::qmat::CMatrix2::diag([Complex64::new(0.0, 0.0), Complex64::new(q, 0.0)]),
                ],
                "dephasing",
            )
            .unwrap();
            let engine = apply_local(&ch, &ch, &start).unwrap();
            assert!((min_closed(&engine) - r.min_engine).abs() < 1e-12);
            assert!((gd_closed(&engine) - r.gd_engine).abs() < 1e-12);
        }
    }
}

#[test]
fn markov_dephasing_matches_kraus_composition() {
    let s = make_family(StateFamilyParam::new(StateFamily::Werner, 0.7).unwrap()).unwrap();
    let (g1, g2) = (0.3, 0.45);
    let two = compose(&dephasing(g1).unwrap(), &dephasing(g2).unwrap()).unwrap();
    let one = dephasing(1.0 - (1.0 - g1) * (1.0 - g2)).unwrap();
    let a = apply_local(&two, &two, &s).unwrap();
    let b = apply_local(&one, &one, &s).unwrap();
    assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-14);
}

/// For lambda = 20 gamma0 the amplitude should stay within 0.02 of
/// `exp(-gamma0 t / 2)` up to `gamma0 t = 3`. The exact solution overshoots
/// by about 0.0218 near `t = 0.16` (the initial slip), so this fails.
#[test]
#[ignore = "unattainable as stated: max deviation is 0.0218 > 0.02 near t = 0.16"]
fn markov_regime_amplitude_within_two_percent() {
    let spec = LorentzianSpectrum::new(1.0, 20.0, 0.0, 0.0).unwrap();
    let worst = uniform_grid(3.0, 3001)
        .into_iter()
        .map(|t| (amplitude_p(&spec, t).re - (-0.5 * t).exp()).abs())
        .fold(0.0, f64::max);
    assert!(worst <= 0.02, "max deviation {worst}");
}

/// For lambda = 20 gamma0, MIN of rho1(0.3) under non-Markovian dephasing
/// should track the Markovian law `2 a (1-a) exp(-2 Gamma t)` with
/// `Gamma = 2 Re(kernel mass) = gamma0` to 5% relative on `[0, 2]`. The
/// initial slip holds `|p|` near 1 for `t < 1/lambda`, and the relative gap
/// reaches about 10%.
#[test]
#[ignore = "unattainable as stated: relative deviation peaks near 10% at early times"]
fn markov_consistency_within_five_percent() {
    let spec = LorentzianSpectrum::new(1.0, 20.0, 0.0, 0.0).unwrap();
    let kernel = kernel_from_spectrum(&spec);
    let rate = 2.0 * kernel.mass().re;
    let grid = uniform_grid(2.0, 2001);
    let pd = dephasing_p(&kernel, &grid).unwrap();
    let a = 0.3;
    let param = StateFamilyParam::new(StateFamily::Pure, a).unwrap();
    let s0 = as_x_state(&make_family(param).unwrap()).unwrap();
    let rows = evolve_nonmarkov(&s0, NonMarkovKind::Dephasing, &pd, Some(param)).unwrap();
    let worst = rows
        .iter()
        .map(|r| {
            let markov = 2.0 * a * (1.0 - a) * (-2.0 * rate * r.t).exp();
            (r.min_engine - markov).abs() / markov
        })
        .fold(0.0, f64::max);
    assert!(worst <= 0.05, "max relative deviation {worst}");
}

#[test]
fn volterra_oracle_reproduces_resonant_solution() {
    let f = |tau: f64| Complex64::new(0.05 * (-0.1 * tau).exp(), 0.0);
    let p = common::volterra_trapezoid(f, 20.0, 0.005);
    for (k, v) in p.iter().enumerate().step_by(100) {
        assert!((v.re - common::resonant_p(1.0, 0.1, k as f64 * 0.005)).abs() < 1e-5);
    }
}
