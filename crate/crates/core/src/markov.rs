//! Markovian evolution under exponential rate schedules, the closed-form decay
//! laws for each (family, channel) pair, and figure grids.
//!
//! The Kraus engine is the reference. Closed-form laws are evaluated verbatim
//! and only ever compared against it.

use rayon::prelude::*;

use crate::channels::{apply_local, compose, dephasing, depolarizing, gad, QubitChannel};
use crate::correlations::{gd_closed, gd_from_bloch, min_closed, min_from_bloch};
use crate::states::{
    as_x_state, bell, make_family, BellState, BlochForm, StateFamily, StateFamilyParam, TwoQubitState, XState,
};
use crate::{check_unit_interval, Error, Result};

/// Local noise acting identically on both qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NoiseKind {
    Depolarizing,
    Dephasing,
    /// Generalized amplitude damping with mixing `p`.
    Damping {
        p: f64,
    },
    /// Dephasing composed after damping, both at the same strength.
    Combined {
        p: f64,
    },
}

impl NoiseKind {
    pub fn channel(&self, gamma: f64) -> Result<QubitChannel> {
        match *self {
            NoiseKind::Depolarizing => depolarizing(gamma),
            NoiseKind::Dephasing => dephasing(gamma),
            NoiseKind::Damping { p } => gad(gamma, p),
            NoiseKind::Combined { p } => compose(&gad(gamma, p)?, &dephasing(gamma)?),
        }
    }

    pub fn mixing(&self) -> Option<f64> {
        match *self {
            NoiseKind::Damping { p } | NoiseKind::Combined { p } => Some(p),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            NoiseKind::Depolarizing => "depol".into(),
            NoiseKind::Dephasing => "deph".into(),
            NoiseKind::Damping { p } => format!("gad:p={p}"),
            NoiseKind::Combined { p } => format!("deph+gad:p={p}"),
        }
    }

    fn validated(self) -> Result<Self> {
        if let Some(p) = self.mixing() {
            check_unit_interval("p", p)?;
        }
        Ok(self)
    }
}

/// `gamma(t) = 1 - exp(-rate t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateSchedule {
    kind: NoiseKind,
    rate: f64,
}

impl RateSchedule {
    pub fn new(kind: NoiseKind, rate: f64) -> Result<Self> {
        if !(rate.is_finite() && rate > 0.0) {
            return Err(Error::OutOfRange {
                name: "rate",
                value: rate,
                lo: 0.0,
                hi: f64::INFINITY,
            });
        }
        Ok(RateSchedule {
            kind: kind.validated()?,
            rate,
        })
    }

    pub fn kind(&self) -> NoiseKind {
        self.kind
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn gamma(&self, t: f64) -> f64 {
        (-(-self.rate * t).exp_m1()).clamp(0.0, 1.0)
    }
}

/// Which quantity a law predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawTarget {
    Min,
    Gd,
    MinAndGd,
    Elements,
}

/// The closed-form laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    DepolarizingPureElements,
    DepolarizingPureCorrelations,
    DepolarizingWernerCorrelations,
    DephasingPureElements,
    DephasingPureMin,
    DephasingPureGd,
    DephasingWernerElements,
    DephasingWernerMin,
    DephasingWernerGd,
    GadPureElements,
    GadWernerElements,
    CombinedPureElements,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LawValue {
    Scalar(f64),
    /// Element law; not validated, may be unphysical.
    Elements(XState),
}

fn x(rho11: f64, rho22: f64, rho33: f64, rho44: f64, rho14: f64, rho23: f64) -> XState {
    XState {
        rho11,
        rho22,
        rho33,
        rho44,
        rho14,
        rho23,
        phases: [0.0; 2],
    }
}

impl Law {
    pub const ALL: [Law; 12] = [
        Law::DepolarizingPureElements,
        Law::DepolarizingPureCorrelations,
        Law::DepolarizingWernerCorrelations,
        Law::DephasingPureElements,
        Law::DephasingPureMin,
        Law::DephasingPureGd,
        Law::DephasingWernerElements,
        Law::DephasingWernerMin,
        Law::DephasingWernerGd,
        Law::GadPureElements,
        Law::GadWernerElements,
        Law::CombinedPureElements,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::DepolarizingPureElements => "DepolarizingPureElements",
            Law::DepolarizingPureCorrelations => "DepolarizingPureCorrelations",
            Law::DepolarizingWernerCorrelations => "DepolarizingWernerCorrelations",
            Law::DephasingPureElements => "DephasingPureElements",
            Law::DephasingPureMin => "DephasingPureMin",
            Law::DephasingPureGd => "DephasingPureGd",
            Law::DephasingWernerElements => "DephasingWernerElements",
            Law::DephasingWernerMin => "DephasingWernerMin",
            Law::DephasingWernerGd => "DephasingWernerGd",
            Law::GadPureElements => "GadPureElements",
            Law::GadWernerElements => "GadWernerElements",
            Law::CombinedPureElements => "CombinedPureElements",
        }
    }

    pub fn family(self) -> StateFamily {
        match self {
            Law::DepolarizingWernerCorrelations
            | Law::DephasingWernerElements
            | Law::DephasingWernerMin
            | Law::DephasingWernerGd
            | Law::GadWernerElements => StateFamily::Werner,
            _ => StateFamily::Pure,
        }
    }

    pub fn target(self) -> LawTarget {
        match self {
            Law::DepolarizingPureCorrelations | Law::DepolarizingWernerCorrelations => LawTarget::MinAndGd,
            Law::DephasingPureMin | Law::DephasingWernerMin => LawTarget::Min,
            Law::DephasingPureGd | Law::DephasingWernerGd => LawTarget::Gd,
            _ => LawTarget::Elements,
        }
    }

    /// Laws held to the residual threshold; the rest are informational.
    pub fn is_required(self) -> bool {
        !matches!(
            self,
            Law::DepolarizingPureElements | Law::GadPureElements | Law::GadWernerElements | Law::CombinedPureElements
        )
    }

    pub fn needs_mixing(self) -> bool {
        matches!(self, Law::GadPureElements | Law::GadWernerElements)
    }

    /// Whether the law describes `family` under `kind`.
    pub fn applies_to(self, family: StateFamily, kind: NoiseKind) -> bool {
        if family != self.family() {
            return false;
        }
        match self {
            Law::DepolarizingPureElements | Law::DepolarizingPureCorrelations | Law::DepolarizingWernerCorrelations => {
                kind == NoiseKind::Depolarizing
            }
            Law::DephasingPureElements
            | Law::DephasingPureMin
            | Law::DephasingPureGd
            | Law::DephasingWernerElements
            | Law::DephasingWernerMin
            | Law::DephasingWernerGd => kind == NoiseKind::Dephasing,
            Law::GadPureElements | Law::GadWernerElements => {
                matches!(kind, NoiseKind::Damping { .. })
            }
            Law::CombinedPureElements => kind == NoiseKind::Combined { p: 1.0 },
        }
    }

    /// The coherence of the combined law sits at the other corner
    /// of the X; its comparison accepts either placement.
    pub fn coherence_match(self) -> CoherenceMatch {
        match self {
            Law::CombinedPureElements => CoherenceMatch::EitherCorner,
            _ => CoherenceMatch::Direct,
        }
    }

    /// Evaluates the formula as written.
    pub fn eval(self, alpha: f64, gamma: f64, p: Option<f64>) -> Result<LawValue> {
        let a = check_unit_interval("alpha", alpha)?;
        let g = check_unit_interval("gamma", gamma)?;
        let p = match (self.needs_mixing(), p) {
            (true, None) => return Err(Error::MissingMixing(self.name())),
            (true, Some(p)) => check_unit_interval("p", p)?,
            (false, _) => 0.0,
        };
        let c = (a - a * a).max(0.0).sqrt();
        let k = 1.0 - g;
        let v = match self {
            Law::DepolarizingPureElements => {
                let r11 = (1.0 - a) * k + g * g / 4.0;
                let r22 = g / 2.0 * (1.0 - g / 2.0);
                LawValue::Elements(x(r11, r22, r22, 1.0 - r11 - 2.0 * r22, c * k * k, 0.0))
            }
            Law::DepolarizingPureCorrelations => LawValue::Scalar(2.0 * a * (1.0 - a) * k.powi(4)),
            Law::DepolarizingWernerCorrelations => LawValue::Scalar(a * a / 2.0 * k.powi(4)),
            Law::DephasingPureElements => LawValue::Elements(x(1.0 - a, 0.0, 0.0, a, k * c, 0.0)),
            Law::DephasingPureMin => LawValue::Scalar(if a == 0.5 {
                0.25 + k * k / 4.0
            } else {
                2.0 * a * (1.0 - a) * k * k
            }),
            Law::DephasingPureGd => LawValue::Scalar(2.0 * a * (1.0 - a) * k * k),
            Law::DephasingWernerElements => {
                let (w, m) = ((1.0 - a) / 4.0, (1.0 + a) / 4.0);
                LawValue::Elements(x(w, m, m, w, 0.0, -a / 2.0 * k))
            }
            Law::DephasingWernerMin => {
                let h = (a / 2.0).powi(2);
                LawValue::Scalar(h * k * k + h)
            }
            Law::DephasingWernerGd => LawValue::Scalar(2.0 * (a / 2.0).powi(2) * k * k),
            Law::GadPureElements => {
                let r11 = (1.0 - (1.0 - p) * g).powi(2) - a * k * (1.0 - (1.0 - 2.0 * p) * g);
                let r22 = -g * (-1.0 + a + p * (1.0 - 2.0 * a * k - 2.0 * g) + g * (1.0 + p * p - a));
                LawValue::Elements(x(r11, r22, r22, 1.0 - r11 - 2.0 * r22, c * k, 0.0))
            }
            Law::GadWernerElements => {
                let r11 = 0.25 * (-a * k * k + (1.0 + (2.0 * p - 1.0) * g).powi(2));
                // unbalanced bracket in print; read as 1 + a k^2 - ((1-2p)^2 g)^2
                let r22 = 0.25 * (1.0 + a * k * k - ((1.0 - 2.0 * p).powi(2) * g).powi(2));
                LawValue::Elements(x(r11, r22, r22, 1.0 - r11 - 2.0 * r22, 0.0, a / 2.0 * k))
            }
            Law::CombinedPureElements => {
                let e = k;
                let r22 = a * (1.0 - e).powi(2) * e;
                LawValue::Elements(x(1.0 - a + a * (1.0 - e).powi(2), r22, r22, a * e * e, 0.0, c * e * e))
            }
        };
        Ok(v)
    }
}

/// How predicted coherences are matched to the engine's.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoherenceMatch {
    Direct,
    /// Minimum over the direct and the swapped `rho14 <-> rho23` placement.
    EitherCorner,
}

/// Largest element deviation. Populations are compared as signed values,
/// coherences by modulus (local phases carry no correlation content).
pub fn element_residual(pred: &XState, engine: &XState, m: CoherenceMatch) -> f64 {
    let pops = pred
        .populations()
        .iter()
        .zip(engine.populations())
        .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()));
    let direct = (pred.rho14.abs() - engine.rho14.abs())
        .abs()
        .max((pred.rho23.abs() - engine.rho23.abs()).abs());
    let coh = match m {
        CoherenceMatch::Direct => direct,
        CoherenceMatch::EitherCorner => direct.min(
            (pred.rho14.abs() - engine.rho23.abs())
                .abs()
                .max((pred.rho23.abs() - engine.rho14.abs()).abs()),
        ),
    };
    pops.max(coh)
}

/// Predictions gathered from the applicable laws at one time step.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Prediction {
    pub min: Option<f64>,
    pub gd: Option<f64>,
    pub elements: Option<(XState, CoherenceMatch)>,
}

/// Combines every law matching `(family, kind)`. Correlation laws take
/// precedence over values derived from predicted elements.
pub fn predict(family: StateFamilyParam, kind: NoiseKind, gamma: f64) -> Result<Prediction> {
    let mut out = Prediction::default();
    let mut direct_min = None;
    let mut direct_gd = None;
    for law in Law::ALL {
        if !law.applies_to(family.family, kind) {
            continue;
        }
        match (law.eval(family.alpha, gamma, kind.mixing())?, law.target()) {
            (LawValue::Scalar(v), LawTarget::Min) => direct_min = Some(v),
            (LawValue::Scalar(v), LawTarget::Gd) => direct_gd = Some(v),
            (LawValue::Scalar(v), LawTarget::MinAndGd) => {
                direct_min = Some(v);
                direct_gd = Some(v);
            }
            (LawValue::Elements(e), _) => {
                let b = BlochForm::from_matrix(&e.to_matrix());
                out.min = Some(min_from_bloch(&b));
                out.gd = Some(gd_from_bloch(&b));
                out.elements = Some((e, law.coherence_match()));
            }
            (LawValue::Scalar(_), LawTarget::Elements) => unreachable!("element laws return elements"),
        }
    }
    out.min = direct_min.or(out.min);
    out.gd = direct_gd.or(out.gd);
    Ok(out)
}

/// One time step of an evolution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectoryRecord {
    pub t: f64,
    /// `gamma(t)` for Markovian rows, `|p(t)|` for non-Markovian ones.
    pub strength: f64,
    pub state: TwoQubitState,
    pub min_engine: f64,
    pub gd_engine: f64,
    pub min_predicted: Option<f64>,
    pub gd_predicted: Option<f64>,
    pub residual_min: Option<f64>,
    pub residual_gd: Option<f64>,
    pub element_residual: Option<f64>,
}

impl TrajectoryRecord {
    pub fn new(t: f64, strength: f64, state: TwoQubitState, pred: Prediction) -> Self {
        let min_engine = min_closed(&state);
        let gd_engine = gd_closed(&state);
        let element_residual = pred
            .elements
            .and_then(|(e, m)| as_x_state(&state).ok().map(|engine| element_residual(&e, &engine, m)));
        TrajectoryRecord {
            t,
            strength,
            state,
            min_engine,
            gd_engine,
            min_predicted: pred.min,
            gd_predicted: pred.gd,
            residual_min: pred.min.map(|v| (min_engine - v).abs()),
            residual_gd: pred.gd.map(|v| (gd_engine - v).abs()),
            element_residual,
        }
    }
}

/// Ascending, finite, starting at 0 (or empty).
pub fn check_time_grid(t_grid: &[f64]) -> Result<()> {
    let ok = t_grid.first().is_none_or(|&t0| t0 == 0.0)
        && t_grid.iter().all(|t| t.is_finite())
        && t_grid.windows(2).all(|w| w[0] < w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::BadTimeGrid)
    }
}

/// `points` equally spaced times on `[0, t_max]`.
pub fn uniform_grid(t_max: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.0],
        n => (0..n)
            .map(|k| {
                if k == n - 1 {
                    t_max
                } else {
                    t_max * k as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Applies the scheduled channel to both qubits at every grid time. When
/// `family` names the initial state, matching laws are attached.
pub fn evolve_markov(
    s0: &TwoQubitState,
    sched: &RateSchedule,
    t_grid: &[f64],
    family: Option<StateFamilyParam>,
) -> Result<Vec<TrajectoryRecord>> {
    check_time_grid(t_grid)?;
    t_grid
        .par_iter()
        .map(|&t| {
            let gamma = sched.gamma(t);
            let ch = sched.kind.channel(gamma)?;
            let state = apply_local(&ch, &ch, s0)?;
            let pred = match family {
                Some(f) => predict(f, sched.kind, gamma)?,
                None => Prediction::default(),
            };
            Ok(TrajectoryRecord::new(t, gamma, state, pred))
        })
        .collect()
}

/// [`evolve_markov`] from a family member.
pub fn evolve_family(family: StateFamilyParam, sched: &RateSchedule, t_grid: &[f64]) -> Result<Vec<TrajectoryRecord>> {
    evolve_markov(&make_family(family)?, sched, t_grid, Some(family))
}

/// Simultaneous dephasing and amplitude damping at a common rate.
pub fn combined_evolve(
    s0: &TwoQubitState,
    rate: f64,
    t_grid: &[f64],
    family: Option<StateFamilyParam>,
) -> Result<Vec<TrajectoryRecord>> {
    let sched = RateSchedule::new(NoiseKind::Combined { p: 1.0 }, rate)?;
    evolve_markov(s0, &sched, t_grid, family)
}

/// First time at which `MIN - GD` drops to `threshold`, located by a scan
/// over `samples` points on `[0, t_max]` and bisection to width `t_tol`.
pub fn locate_crossing(
    s0: &TwoQubitState,
    sched: &RateSchedule,
    t_max: f64,
    samples: usize,
    threshold: f64,
    t_tol: f64,
) -> Result<Option<f64>> {
    let gap = |t: f64| -> Result<f64> {
        let ch = sched.kind.channel(sched.gamma(t))?;
        let s = apply_local(&ch, &ch, s0)?;
        Ok(min_closed(&s) - gd_closed(&s))
    };
    if gap(0.0)? <= threshold {
        return Ok(Some(0.0));
    }
    let grid = uniform_grid(t_max, samples.max(2));
    let mut lo = 0.0;
    let mut hi = None;
    for &t in &grid[1..] {
        if gap(t)? <= threshold {
            hi = Some(t);
            break;
        }
        lo = t;
    }
    let Some(mut hi) = hi else {
        return Ok(None);
    };
    while hi - lo > t_tol {
        let mid = 0.5 * (lo + hi);
        if gap(mid)? <= threshold {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

/// The Markovian figure grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MarkovFigure {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
}

/// Initial condition of a figure series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SeriesStart {
    Family(StateFamily),
    Fixed(StateFamilyParam),
    Bell(BellState),
}

/// The mixing values plotted for damping.
pub const DAMPING_MIXINGS: [f64; 3] = [1.0, 0.5, 0.67];

impl MarkovFigure {
    pub const ALL: [MarkovFigure; 8] = [
        MarkovFigure::F1,
        MarkovFigure::F2,
        MarkovFigure::F3,
        MarkovFigure::F4,
        MarkovFigure::F5,
        MarkovFigure::F6,
        MarkovFigure::F7,
        MarkovFigure::F8,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MarkovFigure::F1 => "F1",
            MarkovFigure::F2 => "F2",
            MarkovFigure::F3 => "F3",
            MarkovFigure::F4 => "F4",
            MarkovFigure::F5 => "F5",
            MarkovFigure::F6 => "F6",
            MarkovFigure::F7 => "F7",
            MarkovFigure::F8 => "F8",
        }
    }

    /// Series in output order.
    pub fn series(self) -> Vec<(NoiseKind, SeriesStart)> {
        let damping = |f| {
            DAMPING_MIXINGS
                .iter()
                .map(|&p| (NoiseKind::Damping { p }, SeriesStart::Family(f)))
                .collect()
        };
        let three = |start| {
            vec![
                (NoiseKind::Depolarizing, start),
                (NoiseKind::Dephasing, start),
                (NoiseKind::Damping { p: 1.0 }, start),
            ]
        };
        match self {
            MarkovFigure::F1 => vec![(NoiseKind::Depolarizing, SeriesStart::Family(StateFamily::Pure))],
            MarkovFigure::F2 => vec![(NoiseKind::Dephasing, SeriesStart::Family(StateFamily::Pure))],
            MarkovFigure::F3 => vec![(NoiseKind::Dephasing, SeriesStart::Family(StateFamily::Werner))],
            MarkovFigure::F4 => damping(StateFamily::Werner),
            MarkovFigure::F5 => damping(StateFamily::Pure),
            MarkovFigure::F6 => vec![(NoiseKind::Combined { p: 1.0 }, SeriesStart::Family(StateFamily::Pure))],
            MarkovFigure::F7 => three(SeriesStart::Fixed(StateFamilyParam {
                family: StateFamily::VedralPlenio,
                alpha: 0.25,
            })),
            MarkovFigure::F8 => three(SeriesStart::Bell(BellState::PhiPlus)),
        }
    }
}

impl std::str::FromStr for MarkovFigure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MarkovFigure::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown figure `{s}` (expected F1..F8)"))
    }
}

/// One row of figure output.
#[derive(Clone, Debug, PartialEq)]
pub struct FigureRow {
    pub series: String,
    pub alpha: Option<f64>,
    pub record: TrajectoryRecord,
}

/// `n` equally spaced values on `[0, 1]`, endpoints exact.
pub fn alpha_grid(n: usize) -> Vec<f64> {
    uniform_grid(1.0, n)
}

/// Rows for every series, alpha and time of a figure, with unit rate so
/// the time axis reads `Gamma t`.
pub fn figure_data(fig: MarkovFigure, t_grid: &[f64], alphas: &[f64]) -> Result<Vec<FigureRow>> {
    check_time_grid(t_grid)?;
    let mut jobs = Vec::new();
    for (kind, start) in fig.series() {
        match start {
            SeriesStart::Family(f) => {
                for &a in alphas {
                    jobs.push((kind, Some(StateFamilyParam::new(f, a)?)));
                }
            }
            SeriesStart::Fixed(p) => jobs.push((kind, Some(p))),
            SeriesStart::Bell(_) => jobs.push((kind, None)),
        }
    }
    let bell_start = fig.series().iter().find_map(|(_, s)| match s {
        SeriesStart::Bell(b) => Some(bell(*b)),
        _ => None,
    });
    let blocks: Vec<Vec<FigureRow>> = jobs
        .par_iter()
        .map(|&(kind, family)| {
            let sched = RateSchedule::new(kind, 1.0)?;
            let records = match family {
                Some(f) => evolve_family(f, &sched, t_grid)?,
                None => evolve_markov(bell_start.as_ref().expect("bell series"), &sched, t_grid, None)?,
            };
            let series = kind.label();
            Ok(records
                .into_iter()
                .map(|record| FigureRow {
                    series: series.clone(),
                    alpha: family.map(|f| f.alpha),
                    record,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().flatten().collect())
}
