//! Acceptance criteria 1-12, one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are checked as stated and are
//! expected to print FAIL; the run exits non-zero only when the set of
//! failures differs from that list.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qcorr::channels::{apply_local, compose, dephasing, depolarizing, gad, unnormalized_depolarizing, validate_cptp};
use qcorr::correlations::{gd_closed, gd_oracle, min_closed, min_oracle};
use qcorr::markov::{alpha_grid, evolve_family, locate_crossing, uniform_grid, NoiseKind, RateSchedule};
use qcorr::nonmarkov::{
    amplitude_channel, amplitude_p, default_grid, dephasing_p, figure_data_nonmarkov, kernel_from_spectrum,
    LorentzianSpectrum, NonMarkovFigure,
};
use qcorr::random::{random_state, random_unitary2};
use qcorr::states::{bell, bloch_decompose, make_family, BellState, StateFamily, StateFamilyParam};
use qcorr::validate::run_validation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Criteria that cannot hold as written; see the decisions ledger.
/// 6: GD <= MIN for every state, so "GD > MIN before the crossing" is false.
const KNOWN_UNATTAINABLE: &[usize] = &[6];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn fam(f: StateFamily, a: f64) -> StateFamilyParam {
    StateFamilyParam::new(f, a).unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn c1() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for b in BellState::ALL {
        let s = bell(b);
        for v in [
            min_closed(&s),
            gd_closed(&s),
            min_oracle(&s, 1e-10).0,
            gd_oracle(&s, 1e-10).0,
        ] {
            worst = worst.max((v - 0.5).abs());
        }
    }
    let took = start.elapsed();
    outcome(
        worst <= 1e-12 && took < Duration::from_secs(1),
        format!(
            "Bell states: max |value - 0.5| = {worst:.2e} (tol 1e-12), {}",
            secs(took)
        ),
    )
}

fn depolarizing_grid(family: StateFamily, law: impl Fn(f64, f64) -> f64) -> (f64, f64, Duration) {
    let start = Instant::now();
    let grid = uniform_grid(8.0, 400);
    let sched = RateSchedule::new(NoiseKind::Depolarizing, 1.0).unwrap();
    let mut worst: f64 = 0.0;
    let mut worst_x: f64 = 0.0;
    for a in alpha_grid(101) {
        for r in evolve_family(fam(family, a), &sched, &grid).unwrap() {
            let g = -(-r.t).exp_m1();
            let want = law(a, g);
            worst = worst.max((r.min_engine - want).abs()).max((r.gd_engine - want).abs());
            let x = bloch_decompose(&r.state).x;
            worst_x = worst_x.max((x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt());
        }
    }
    (worst, worst_x, start.elapsed())
}

fn c2() -> Outcome {
    let (worst, _, took) = depolarizing_grid(StateFamily::Pure, |a, g| 2.0 * a * (1.0 - a) * (1.0 - g).powi(4));
    outcome(
        worst <= 1e-9 && took < Duration::from_secs(30),
        format!(
            "pure family, depolarizing, 101x400 grid: max residual {worst:.2e} (tol 1e-9), {}",
            secs(took)
        ),
    )
}

fn c3() -> Outcome {
    let (worst, worst_x, took) = depolarizing_grid(StateFamily::Werner, |a, g| a * a / 2.0 * (1.0 - g).powi(4));
    outcome(
        worst <= 1e-9 && worst_x <= 1e-12,
        format!(
            "Werner family, depolarizing: max residual {worst:.2e} (tol 1e-9), max |x| {worst_x:.2e} (tol 1e-12), {}",
            secs(took)
        ),
    )
}

fn dephased(f: StateFamily, a: f64, g: f64) -> (f64, f64) {
    let ch = dephasing(g).unwrap();
    let s = apply_local(&ch, &ch, &make_family(fam(f, a)).unwrap()).unwrap();
    (min_closed(&s), gd_closed(&s))
}

fn c4() -> Outcome {
    let g = 1.0 - 1e-12;
    let (m, d) = dephased(StateFamily::Pure, 0.5, g);
    let mut worst_other: f64 = 0.0;
    for a in alpha_grid(101).into_iter().filter(|&a| a != 0.5) {
        worst_other = worst_other.max(dephased(StateFamily::Pure, a, g).0);
    }
    outcome(
        (m - 0.25).abs() <= 1e-9 && d <= 1e-9 && worst_other <= 1e-9,
        format!(
            "alpha=0.5 at gamma=1-1e-12: |MIN-0.25| {:.2e}, GD {d:.2e}; max MIN over alpha!=0.5 {worst_other:.2e} (tol 1e-9)",
            (m - 0.25).abs()
        ),
    )
}

fn c5() -> Outcome {
    let g = 1.0 - 1e-12;
    let mut worst_min: f64 = 0.0;
    let mut worst_gd: f64 = 0.0;
    for a in [0.25, 0.5, 0.75, 1.0] {
        let (m, d) = dephased(StateFamily::Werner, a, g);
        worst_min = worst_min.max((m - (a / 2.0) * (a / 2.0)).abs());
        worst_gd = worst_gd.max(d);
    }
    outcome(
        worst_min <= 1e-9 && worst_gd <= 1e-9,
        format!("Werner floor: max |MIN-(a/2)^2| {worst_min:.2e}, max GD {worst_gd:.2e} (tol 1e-9)"),
    )
}

fn c6() -> Outcome {
    let s0 = make_family(fam(StateFamily::VedralPlenio, 0.25)).unwrap();
    let sched = RateSchedule::new(NoiseKind::Damping { p: 1.0 }, 1.0).unwrap();
    let at = |t: f64| {
        let ch = gad(sched.gamma(t), 1.0).unwrap();
        let s = apply_local(&ch, &ch, &s0).unwrap();
        (min_closed(&s), gd_closed(&s))
    };
    let Some(t_star) = locate_crossing(&s0, &sched, 8.0, 800, 1e-6, 1e-6).unwrap() else {
        return outcome(false, "no time with |MIN-GD| < 1e-6 on [0, 8]".into());
    };
    let (m, d) = at(t_star);
    let crossing = (m - d).abs() < 1e-6;
    let before: Vec<(f64, f64)> = (0..200).map(|k| at(t_star * k as f64 / 200.0)).collect();
    let gd_above = before.iter().filter(|(m, d)| d > m).count();
    let gd_below = before.iter().filter(|(m, d)| d < m).count();
    outcome(
        crossing && gd_above == before.len(),
        format!(
            "t* = {t_star:.6} with |MIN-GD| = {:.2e}; before t*: GD > MIN at {gd_above}/200 samples, GD < MIN at {gd_below}/200",
            (m - d).abs()
        ),
    )
}

fn c7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    let mut order_ok = true;
    for _ in 0..10_000 {
        let s = random_state(&mut rng);
        let (m, g) = (min_closed(&s), gd_closed(&s));
        worst = worst
            .max((m - min_oracle(&s, 1e-10).0).abs())
            .max((g - gd_oracle(&s, 1e-10).0).abs());
        order_ok &= 0.0 <= g && g <= m && m <= 0.5;
    }
    let took = start.elapsed();
    outcome(
        worst <= 1e-6 && order_ok && took < Duration::from_secs(300),
        format!(
            "10^4 random states: max |closed-oracle| {worst:.2e} (tol 1e-6), ordering {}, {}",
            if order_ok { "holds" } else { "violated" },
            secs(took)
        ),
    )
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    for _ in 0..1_000 {
        let s = random_state(&mut rng);
        let ua = random_unitary2(&mut rng);
        let ub = random_unitary2(&mut rng);
        let r = s.apply_local_unitary(&ua, &ub).unwrap();
        worst = worst
            .max((min_closed(&r) - min_closed(&s)).abs())
            .max((gd_closed(&r) - gd_closed(&s)).abs());
    }
    outcome(
        worst <= 1e-9,
        format!("10^3 triples: max change {worst:.2e} (tol 1e-9)"),
    )
}

fn c9() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut unnormalized_fail = true;
    for g in uniform_grid(1.0, 101) {
        let mut chans = vec![depolarizing(g).unwrap(), dephasing(g).unwrap()];
        for p in [0.0, 0.25, 0.5, 0.67, 1.0] {
            chans.push(gad(g, p).unwrap());
            chans.push(compose(&gad(g, p).unwrap(), &dephasing(g).unwrap()).unwrap());
        }
        chans.push(amplitude_channel(Complex64::from_polar((1.0 - g).sqrt(), 0.3)).unwrap());
        for ch in &chans {
            count += 1;
            worst = worst.max(ch.cptp_defect());
            assert!(validate_cptp(ch) == (ch.cptp_defect() <= 1e-10));
        }
        if g > 0.0 {
            unnormalized_fail &= unnormalized_depolarizing(g).unwrap().cptp_defect() > 1e-10;
        }
    }
    let report = run_validation(1, 10).unwrap();
    let entry = report.law("UnnormalizedDepolarizingKraus").unwrap();
    let documented = entry.tag() == "DISCREPANT" && !entry.required && report.passed();
    outcome(
        worst <= 1e-10 && unnormalized_fail && documented,
        format!(
            "{count} channels: max |sum E^dag E - I| {worst:.2e} (tol 1e-10); unnormalized depolarizing set fails: {unnormalized_fail}; report tags it {} ({})",
            entry.tag(),
            if entry.required { "required" } else { "informational" }
        ),
    )
}

fn c10() -> Outcome {
    let fig = NonMarkovFigure::F10;
    let spec = fig.spectrum();
    let grid = default_grid(&spec, 3000);
    let rows = figure_data_nonmarkov(fig, &spec, &alpha_grid(101), &grid).unwrap();
    let law_res = rows.iter().fold(0.0f64, |acc, r| {
        acc.max(r.record.residual_min.unwrap())
            .max(r.record.residual_gd.unwrap())
    });

    let resonant = LorentzianSpectrum::new(1.0, 0.1, 0.0, 1.0).unwrap();
    let pd = dephasing_p(&kernel_from_spectrum(&resonant), &grid).unwrap();
    let analytic = pd.times().iter().zip(pd.values()).fold(0.0f64, |acc, (&t, v)| {
        acc.max((v - common::resonant_p(1.0, 0.1, t)).norm())
    });

    // kernel written out here rather than taken from the library
    let f = |tau: f64| Complex64::from_polar(0.05 * (-0.1 * tau).exp(), 0.01 * tau);
    let h = 0.0025;
    let oracle = common::volterra_trapezoid(f, 30.0, h);
    let pd = dephasing_p(&kernel_from_spectrum(&spec), &grid).unwrap();
    let stride = (0.01 / h).round() as usize;
    let quad = pd
        .values()
        .iter()
        .enumerate()
        .fold(0.0f64, |acc, (k, v)| acc.max((v - oracle[k * stride]).norm()));
    outcome(
        law_res <= 1e-9 && analytic <= 1e-8 && quad <= 1e-6,
        format!(
            "law residual {law_res:.2e} (tol 1e-9); ODE vs resonant closed form {analytic:.2e} (tol 1e-8); ODE vs Volterra quadrature {quad:.2e} (tol 1e-6)"
        ),
    )
}

fn c11() -> Outcome {
    let fig = NonMarkovFigure::F9;
    let spec = fig.spectrum();
    let zero = common::first_root(|t| amplitude_p(&spec, t).re, 0.0, 30.0, 3000, 1e-10);
    let zero_ok = zero.is_some_and(|z| (z - 8.24).abs() <= 0.05);
    let rows = figure_data_nonmarkov(fig, &spec, &[0.5], &default_grid(&spec, 3000)).unwrap();
    let mins: Vec<f64> = rows.iter().map(|r| r.record.min_engine).collect();
    let mut best_rise: f64 = 0.0;
    for i in 1..mins.len() - 1 {
        if mins[i] < mins[i - 1] && mins[i] < mins[i + 1] {
            let peak = mins[i + 1..].iter().cloned().fold(f64::MIN, f64::max);
            best_rise = best_rise.max(peak - mins[i]);
        }
    }
    outcome(
        zero_ok && best_rise >= 1e-4,
        format!(
            "first zero of p_a at t = {} (want 8.24 +- 0.05); largest rise after a strict local minimum of MIN {best_rise:.3e} (need >= 1e-4)",
            zero.map_or("none".into(), |z| format!("{z:.4}"))
        ),
    )
}

fn c12() -> Outcome {
    let run = |n: &str| {
        Command::new(env!("CARGO_BIN_EXE_qcorr"))
            .args(["validate", "--seed", "12", "--n", n])
            .output()
            .expect("run qcorr")
    };
    let mut same = true;
    let mut bytes = 0;
    for n in ["1", "500"] {
        let (a, b) = (run(n), run(n));
        same &= a.status.success() && a.stdout == b.stdout && a.status == b.status;
        bytes += a.stdout.len();
    }
    outcome(
        same,
        format!("validate --seed 12 at n = 1 and n = 500, run twice each: identical ({bytes} bytes)"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("Bell-state baseline", c1),
        ("pure family under depolarizing", c2),
        ("Werner family under depolarizing", c3),
        ("dephasing robustness", c4),
        ("Werner dephasing floor", c5),
        ("MIN/GD crossing under damping", c6),
        ("oracle equivalence", c7),
        ("local-unitary invariance", c8),
        ("CPTP gate", c9),
        ("non-Markovian dephasing", c10),
        ("non-Markovian amplitude revivals", c11),
        ("determinism", c12),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let id = k + 1;
        let o = check();
        let known = KNOWN_UNATTAINABLE.contains(&id);
        let note = if !o.pass && known { " [known unattainable]" } else { "" };
        println!(
            "criterion {id:>2} {} {name}: {}{note}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed.push(id);
        }
    }
    let passed = criteria.len() - failed.len();
    println!(
        "acceptance: {passed}/{} criteria pass; failing {failed:?}",
        criteria.len()
    );
    if failed != KNOWN_UNATTAINABLE {
        eprintln!("acceptance: failures differ from the known-unattainable set {KNOWN_UNATTAINABLE:?}");
        std::process::exit(1);
    }
}
