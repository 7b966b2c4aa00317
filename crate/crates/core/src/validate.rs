//! The deterministic validation report: every closed-form law against the
//! Kraus engine, plus invariant suites over seeded random states.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::channels::{apply_local, compose, dephasing, depolarizing, gad, unnormalized_depolarizing, validate_cptp};
use crate::correlations::{closed_forms_after_local_unitary, gd_closed, gd_oracle, min_closed, min_oracle};
use crate::markov::{alpha_grid, element_residual, uniform_grid, CoherenceMatch, Law, LawTarget, LawValue, NoiseKind};
use crate::nonmarkov::{
    amplitude_channel, amplitude_elements, default_grid, dephasing_p, evolve_nonmarkov, kernel_from_spectrum,
    DecoherenceFunction, NonMarkovFigure, NonMarkovKind,
};
use crate::qmat::C64;
use crate::random::{random_state, random_unitary2};
use crate::states::{as_x_state, bloch_decompose, bloch_reconstruct, make_family, StateFamilyParam, TwoQubitState};
use crate::{tol, Result};

pub const DEFAULT_SEED: u64 = 20260;
pub const DEFAULT_STATES: usize = 10_000;
/// Local-unitary triples are capped at this count.
pub const UNITARY_TRIPLES: usize = 1_000;

/// Mixing values swept for damping laws.
const LAW_MIXINGS: [f64; 3] = [1.0, 0.5, 0.67];

/// One row of the law table.
#[derive(Clone, Debug, PartialEq)]
pub struct LawCheck {
    pub name: String,
    pub required: bool,
    pub max_residual: f64,
}

impl LawCheck {
    pub fn verified(&self) -> bool {
        self.max_residual <= tol::LAW_RESIDUAL
    }

    pub fn tag(&self) -> &'static str {
        if self.verified() {
            "VERIFIED"
        } else {
            "DISCREPANT"
        }
    }
}

/// One invariant suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub seed: u64,
    pub states: usize,
    pub laws: Vec<LawCheck>,
    pub suites: Vec<SuiteResult>,
}

impl ValidationReport {
    /// Required laws verified and every suite passed.
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| !l.required || l.verified()) && self.suites.iter().all(|s| s.passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawCheck> {
        self.laws.iter().find(|l| l.name == name)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "qcorr validation report");
        let _ = writeln!(out, "seed {}, random states {}", self.seed, self.states);
        let _ = writeln!(out);
        let _ = writeln!(out, "laws (max residual against the Kraus engine)");
        for l in &self.laws {
            let role = if l.required { "required" } else { "informational" };
            let _ = writeln!(
                out,
                "  {:<10} {:<13} {:>10.3e}  {}",
                l.tag(),
                role,
                l.max_residual,
                l.name
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "suites");
        for s in &self.suites {
            let _ = writeln!(
                out,
                "  {:<4}  {:<22} {}",
                if s.passed { "PASS" } else { "FAIL" },
                s.name,
                s.detail
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

fn law_kind(law: Law, p: f64) -> NoiseKind {
    match law {
        Law::DepolarizingPureElements | Law::DepolarizingPureCorrelations | Law::DepolarizingWernerCorrelations => {
            NoiseKind::Depolarizing
        }
        Law::GadPureElements | Law::GadWernerElements => NoiseKind::Damping { p },
        Law::CombinedPureElements => NoiseKind::Combined { p: 1.0 },
        _ => NoiseKind::Dephasing,
    }
}

/// Residual of one law at one grid point.
pub fn law_residual(law: Law, alpha: f64, gamma: f64, p: f64) -> Result<f64> {
    let kind = law_kind(law, p);
    let s0 = make_family(StateFamilyParam::new(law.family(), alpha)?)?;
    let ch = kind.channel(gamma)?;
    let s = apply_local(&ch, &ch, &s0)?;
    let mixing = law.needs_mixing().then_some(p);
    Ok(match (law.eval(alpha, gamma, mixing)?, law.target()) {
        (LawValue::Scalar(v), LawTarget::Min) => (min_closed(&s) - v).abs(),
        (LawValue::Scalar(v), LawTarget::Gd) => (gd_closed(&s) - v).abs(),
        (LawValue::Scalar(v), _) => (min_closed(&s) - v).abs().max((gd_closed(&s) - v).abs()),
        (LawValue::Elements(e), _) => element_residual(&e, &as_x_state(&s)?, law.coherence_match()),
    })
}

/// Largest residual over `alpha in {0, 0.1, ..., 1}`, `gamma in {0, 0.05, ..., 1}`
/// and, for damping laws, the plotted mixings.
pub fn markov_law_check(law: Law) -> Result<LawCheck> {
    let mixings: &[f64] = if law.needs_mixing() { &LAW_MIXINGS } else { &[1.0] };
    let mut points = Vec::new();
    for &p in mixings {
        for a in alpha_grid(11) {
            for g in uniform_grid(1.0, 21) {
                points.push((a, g, p));
            }
        }
    }
    let residuals: Vec<f64> = points
        .par_iter()
        .map(|&(a, g, p)| law_residual(law, a, g, p))
        .collect::<Result<_>>()?;
    Ok(LawCheck {
        name: law.name().to_string(),
        required: law.is_required(),
        max_residual: residuals.into_iter().fold(0.0, f64::max),
    })
}

fn nonmarkov_checks() -> Result<Vec<LawCheck>> {
    let fig = NonMarkovFigure::F10;
    let spec = fig.spectrum();
    let grid = default_grid(&spec, 3000);
    let pd = dephasing_p(&kernel_from_spectrum(&spec), &grid)?;
    let mut worst_min: f64 = 0.0;
    let mut worst_gd: f64 = 0.0;
    for a in alpha_grid(11) {
        let param = StateFamilyParam::new(crate::states::StateFamily::Pure, a)?;
        let s0 = as_x_state(&make_family(param)?)?;
        for r in evolve_nonmarkov(&s0, NonMarkovKind::Dephasing, &pd, Some(param))? {
            worst_min = worst_min.max(r.residual_min.unwrap_or(f64::INFINITY));
            worst_gd = worst_gd.max(r.residual_gd.unwrap_or(f64::INFINITY));
        }
    }

    let amp_spec = NonMarkovFigure::F9.spectrum();
    let pa = DecoherenceFunction::amplitude(&amp_spec, &default_grid(&amp_spec, 3000))?;
    let mut worst_elements: f64 = 0.0;
    for a in alpha_grid(11) {
        let param = StateFamilyParam::new(crate::states::StateFamily::Pure, a)?;
        let start = make_family(param)?;
        let s0 = as_x_state(&start)?;
        for &p in pa.values() {
            let ch = amplitude_channel(p)?;
            let engine = as_x_state(&apply_local(&ch, &ch, &start)?)?;
            let listed = amplitude_elements(&s0, p.norm().min(1.0));
            worst_elements = worst_elements.max(element_residual(&listed, &engine, CoherenceMatch::Direct));
        }
    }

    Ok(vec![
        LawCheck {
            name: "NonMarkovDephasingPureMin".into(),
            required: true,
            max_residual: worst_min,
        },
        LawCheck {
            name: "NonMarkovDephasingPureGd".into(),
            required: true,
            max_residual: worst_gd,
        },
        LawCheck {
            name: "NonMarkovAmplitudeElements".into(),
            required: false,
            max_residual: worst_elements,
        },
    ])
}

/// The `sqrt(g/2)` depolarizing set; the residual is
/// the largest deviation of `sum E^dag E` from the identity.
fn unnormalized_depolarizing_check() -> Result<LawCheck> {
    let mut worst: f64 = 0.0;
    for g in uniform_grid(1.0, 21) {
        worst = worst.max(unnormalized_depolarizing(g)?.cptp_defect());
    }
    Ok(LawCheck {
        name: "UnnormalizedDepolarizingKraus".into(),
        required: false,
        max_residual: worst,
    })
}

fn ordering_suite(states: &[TwoQubitState]) -> SuiteResult {
    let worst = states
        .par_iter()
        .map(|s| {
            let (m, g) = (min_closed(s), gd_closed(s));
            [-g, g - m, m - 0.5].into_iter().fold(0.0f64, f64::max)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, f64::max);
    SuiteResult {
        name: "ordering",
        passed: worst <= tol::ORDERING,
        detail: format!(
            "0 <= GD <= MIN <= 0.5 on {} states, worst violation {worst:.3e}",
            states.len()
        ),
    }
}

fn oracle_suite(states: &[TwoQubitState]) -> SuiteResult {
    let worst = states
        .par_iter()
        .map(|s| {
            let dm = (min_closed(s) - min_oracle(s, tol::ORACLE_TOL).0).abs();
            let dg = (gd_closed(s) - gd_oracle(s, tol::ORACLE_TOL).0).abs();
            dm.max(dg)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, f64::max);
    SuiteResult {
        name: "oracle-agreement",
        passed: worst <= tol::ORACLE_AGREEMENT,
        detail: format!("closed form vs oracle on {} states, worst {worst:.3e}", states.len()),
    }
}

fn unitary_suite(triples: &[(TwoQubitState, crate::qmat::CMatrix2, crate::qmat::CMatrix2)]) -> Result<SuiteResult> {
    let diffs: Vec<f64> = triples
        .par_iter()
        .map(|(s, ua, ub)| {
            let (m, g) = closed_forms_after_local_unitary(s, ua, ub)?;
            Ok((m - min_closed(s)).abs().max((g - gd_closed(s)).abs()))
        })
        .collect::<Result<_>>()?;
    let worst = diffs.into_iter().fold(0.0, f64::max);
    Ok(SuiteResult {
        name: "local-unitary",
        passed: worst <= tol::LOCAL_UNITARY,
        detail: format!(
            "{} random (state, U_A, U_B) triples, worst change {worst:.3e}",
            triples.len()
        ),
    })
}

fn round_trip_suite(states: &[TwoQubitState]) -> SuiteResult {
    let worst = states
        .iter()
        .map(|s| bloch_reconstruct(&bloch_decompose(s)).rho.max_abs_diff(s.matrix()))
        .fold(0.0, f64::max);
    SuiteResult {
        name: "bloch-round-trip",
        passed: worst <= tol::ROUND_TRIP,
        detail: format!(
            "decompose then reconstruct on {} states, worst {worst:.3e}",
            states.len()
        ),
    }
}

fn cptp_suite() -> Result<SuiteResult> {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    let mut channels_ok = true;
    for g in uniform_grid(1.0, 21) {
        let mut channels = vec![depolarizing(g)?, dephasing(g)?];
        for p in LAW_MIXINGS {
            channels.push(gad(g, p)?);
            channels.push(compose(&gad(g, p)?, &dephasing(g)?)?);
        }
        let amp = (1.0 - g).sqrt();
        channels.push(amplitude_channel(C64::new(amp, 0.0))?);
        channels.push(amplitude_channel(C64::from_polar(amp, 0.7))?);
        for ch in &channels {
            count += 1;
            channels_ok &= validate_cptp(ch);
            worst = worst.max(ch.cptp_defect());
        }
    }
    Ok(SuiteResult {
        name: "cptp",
        passed: channels_ok,
        detail: format!("{count} constructed channels, worst |sum E^dag E - I| {worst:.3e}"),
    })
}

/// Runs every law and suite. Random states are drawn sequentially from a
/// ChaCha8 stream, so the report depends only on `seed` and `states`.
pub fn run_validation(seed: u64, states: usize) -> Result<ValidationReport> {
    let mut laws = Vec::new();
    for law in Law::ALL {
        laws.push(markov_law_check(law)?);
    }
    laws.extend(nonmarkov_checks()?);
    laws.push(unnormalized_depolarizing_check()?);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<TwoQubitState> = (0..states).map(|_| random_state(&mut rng)).collect();
    let triples: Vec<_> = (0..states.min(UNITARY_TRIPLES))
        .map(|_| {
            let s = random_state(&mut rng);
            let ua = random_unitary2(&mut rng);
            let ub = random_unitary2(&mut rng);
            (s, ua, ub)
        })
        .collect();

    let suites = vec![
        ordering_suite(&sample),
        oracle_suite(&sample),
        unitary_suite(&triples)?,
        round_trip_suite(&sample),
        cptp_suite()?,
    ];
    Ok(ValidationReport {
        seed,
        states,
        laws,
        suites,
    })
}
