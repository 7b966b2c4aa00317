//! Non-Markovian amplitude and dephasing noise from a Lorentzian
//! environment.
//!
//! The closed-form element lists use the ordered basis `{|+>, |->}` with `|+>`
//! the excited level. Here `|+> = |1>`, so a listed label `ij` maps to the
//! engine label `(5-i)(5-j)`; coherences keep their modulus.

use rayon::prelude::*;

use crate::channels::{apply_local, QubitChannel};
use crate::correlations::{gd_from_bloch, min_from_bloch};
use crate::markov::{check_time_grid, uniform_grid, CoherenceMatch, FigureRow, Prediction, TrajectoryRecord};
use crate::qmat::{CMatrix, CMatrix2, C64, ZERO};
use crate::states::{make_family, BlochForm, StateFamily, StateFamilyParam, TwoQubitState, XState};
use crate::{check_unit_interval, tol, Error, Result};

/// `J(w) = (1/2pi) gamma0 lambda^2 / ((w - omega0 + delta)^2 + lambda^2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzianSpectrum {
    pub gamma0: f64,
    pub lambda: f64,
    pub delta: f64,
    /// Carried for bookkeeping; the rotating-frame kernel does not use it.
    pub omega0: f64,
}

impl LorentzianSpectrum {
    pub fn new(gamma0: f64, lambda: f64, delta: f64, omega0: f64) -> Result<Self> {
        for (name, v) in [("gamma0", gamma0), ("lambda", lambda)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::OutOfRange {
                    name,
                    value: v,
                    lo: 0.0,
                    hi: f64::INFINITY,
                });
            }
        }
        if !delta.is_finite() || !omega0.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(LorentzianSpectrum {
            gamma0,
            lambda,
            delta,
            omega0,
        })
    }

    pub fn density(&self, omega: f64) -> f64 {
        let w = omega - self.omega0 + self.delta;
        self.gamma0 * self.lambda * self.lambda / (2.0 * std::f64::consts::PI * (w * w + self.lambda * self.lambda))
    }

    /// `lambda - i delta`, the complex damping of the kernel.
    fn damping(&self) -> C64 {
        C64::new(self.lambda, -self.delta)
    }
}

/// `f(tau) = amplitude e^{-decay tau} e^{i phase_rate tau}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseKernel {
    pub amplitude: f64,
    pub decay: f64,
    pub phase_rate: f64,
}

impl NoiseKernel {
    pub fn new(amplitude: f64, decay: f64, phase_rate: f64) -> Result<Self> {
        if !(decay.is_finite() && decay > 0.0) {
            return Err(Error::OutOfRange {
                name: "decay",
                value: decay,
                lo: 0.0,
                hi: f64::INFINITY,
            });
        }
        if !amplitude.is_finite() || !phase_rate.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(NoiseKernel {
            amplitude,
            decay,
            phase_rate,
        })
    }

    pub fn eval(&self, tau: f64) -> C64 {
        C64::from_polar(self.amplitude * (-self.decay * tau).exp(), self.phase_rate * tau)
    }

    /// `int_0^inf f`.
    pub fn mass(&self) -> C64 {
        C64::new(self.amplitude, 0.0) / C64::new(self.decay, -self.phase_rate)
    }
}

pub fn kernel_from_spectrum(spec: &LorentzianSpectrum) -> NoiseKernel {
    NoiseKernel {
        amplitude: 0.5 * spec.gamma0 * spec.lambda,
        decay: spec.lambda,
        phase_rate: spec.delta,
    }
}

/// `sinh(z) / z`.
fn sinhc(z: C64) -> C64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        C64::new(1.0, 0.0) + z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sinh() / z
    }
}

/// Damped Jaynes-Cummings amplitude
/// `e^{-l t/2} [cosh(d t/2) + (l/d) sinh(d t/2)]`, `d = sqrt(l^2 - 2 gamma0 lambda)`,
/// `l = lambda - i delta`.
pub fn amplitude_p(spec: &LorentzianSpectrum, t: f64) -> C64 {
    let l = spec.damping();
    let d = (l * l - 2.0 * spec.gamma0 * spec.lambda).sqrt();
    let z = d * (0.5 * t);
    (-l * (0.5 * t)).exp() * (z.cosh() + l * (0.5 * t) * sinhc(z))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoherenceKind {
    AmplitudeP,
    DephasingP,
}

/// Samples of `p(t)` on a time grid.
#[derive(Clone, Debug, PartialEq)]
pub struct DecoherenceFunction {
    kind: DecoherenceKind,
    times: Vec<f64>,
    values: Vec<C64>,
}

impl DecoherenceFunction {
    /// Checks the grid, `p(0) = 1` and `|p| <= 1` (with slack).
    pub fn new(kind: DecoherenceKind, times: Vec<f64>, values: Vec<C64>) -> Result<Self> {
        check_time_grid(&times)?;
        if times.len() != values.len() {
            return Err(Error::BadTimeGrid);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if let Some(v0) = values.first() {
            if (v0 - C64::new(1.0, 0.0)).norm() > 1e-12 {
                return Err(Error::OutOfRange {
                    name: "p(0)",
                    value: v0.norm(),
                    lo: 1.0,
                    hi: 1.0,
                });
            }
        }
        if let Some(v) = values.iter().find(|v| v.norm() > tol::DECOHERENCE_BOUND) {
            return Err(Error::OutOfRange {
                name: "|p(t)|",
                value: v.norm(),
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(DecoherenceFunction { kind, times, values })
    }

    /// [`amplitude_p`] sampled on `t_grid`.
    pub fn amplitude(spec: &LorentzianSpectrum, t_grid: &[f64]) -> Result<Self> {
        let values = t_grid.iter().map(|&t| amplitude_p(spec, t)).collect();
        Self::new(DecoherenceKind::AmplitudeP, t_grid.to_vec(), values)
    }

    pub fn kind(&self) -> DecoherenceKind {
        self.kind
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }
}

fn rk4_run(kernel: &NoiseKernel, t_grid: &[f64], substeps: usize) -> Vec<C64> {
    let f0 = C64::new(kernel.amplitude, 0.0);
    let damp = C64::new(kernel.decay, -kernel.phase_rate);
    let rhs = |p: C64, u: C64| (-u, f0 * p - damp * u);
    let mut p = C64::new(1.0, 0.0);
    let mut u = ZERO;
    let mut out = Vec::with_capacity(t_grid.len());
    if t_grid.is_empty() {
        return out;
    }
    out.push(p);
    for w in t_grid.windows(2) {
        let h = (w[1] - w[0]) / substeps as f64;
        for _ in 0..substeps {
            let (k1p, k1u) = rhs(p, u);
            let (k2p, k2u) = rhs(p + k1p * (0.5 * h), u + k1u * (0.5 * h));
            let (k3p, k3u) = rhs(p + k2p * (0.5 * h), u + k2u * (0.5 * h));
            let (k4p, k4u) = rhs(p + k3p * h, u + k3u * h);
            p += (k1p + k2p * 2.0 + k3p * 2.0 + k4p) * (h / 6.0);
            u += (k1u + k2u * 2.0 + k3u * 2.0 + k4u) * (h / 6.0);
        }
        out.push(p);
    }
    out
}

/// Solves `p' = -int_0^t f(t - s) p(s) ds` through the equivalent system
/// `p' = -u`, `u' = f(0) p - (decay - i phase_rate) u` with RK4, doubling
/// the substeps per grid interval until the sup-norm change drops below
/// [`tol::ODE_HALVING`].
pub fn dephasing_p(kernel: &NoiseKernel, t_grid: &[f64]) -> Result<DecoherenceFunction> {
    check_time_grid(t_grid)?;
    if t_grid.len() < 2 {
        return DecoherenceFunction::new(DecoherenceKind::DephasingP, t_grid.to_vec(), rk4_run(kernel, t_grid, 1));
    }
    let widest = t_grid.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
    let mut n = 1;
    let mut prev = rk4_run(kernel, t_grid, n);
    loop {
        n *= 2;
        if widest / (n as f64) < tol::ODE_MIN_STEP {
            return Err(Error::StepSize {
                tol: tol::ODE_HALVING,
                min_step: tol::ODE_MIN_STEP,
            });
        }
        let next = rk4_run(kernel, t_grid, n);
        let change = prev
            .iter()
            .zip(&next)
            .fold(0.0f64, |acc, (a, b)| acc.max((a - b).norm()));
        if change < tol::ODE_HALVING {
            return DecoherenceFunction::new(DecoherenceKind::DephasingP, t_grid.to_vec(), next);
        }
        prev = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonMarkovKind {
    Amplitude,
    Dephasing,
}

impl NonMarkovKind {
    pub fn label(self) -> &'static str {
        match self {
            NonMarkovKind::Amplitude => "amplitude",
            NonMarkovKind::Dephasing => "dephasing",
        }
    }

    /// `p(t)` for this noise on `t_grid`.
    pub fn decoherence(self, spec: &LorentzianSpectrum, t_grid: &[f64]) -> Result<DecoherenceFunction> {
        match self {
            NonMarkovKind::Amplitude => DecoherenceFunction::amplitude(spec, t_grid),
            NonMarkovKind::Dephasing => dephasing_p(&kernel_from_spectrum(spec), t_grid),
        }
    }
}

impl std::str::FromStr for NonMarkovKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "amplitude" | "amp" => Ok(NonMarkovKind::Amplitude),
            "dephasing" | "deph" => Ok(NonMarkovKind::Dephasing),
            _ => Err(format!("unknown noise `{s}` (expected amplitude or dephasing)")),
        }
    }
}

/// `{diag(1, p), q |0><1|}`, `q = sqrt(1 - |p|^2)`.
pub fn amplitude_channel(p: C64) -> Result<QubitChannel> {
    let q = (1.0 - p.norm_sqr()).max(0.0).sqrt();
    QubitChannel::new(
        vec![
            CMatrix2::diag([C64::new(1.0, 0.0), p]),
            CMatrix([[ZERO, C64::new(q, 0.0)], [ZERO, ZERO]]),
        ],
        format!("amplitude:{}", p.norm()),
    )
}

/// Populations fixed, both coherences multiplied by `p^2`.
pub fn dephase_x(s: &TwoQubitState, p: C64) -> TwoQubitState {
    let mut m = *s.matrix();
    let f = p * p;
    m.0[0][3] *= f;
    m.0[1][2] *= f;
    m.0[3][0] = m.0[0][3].conj();
    m.0[2][1] = m.0[1][2].conj();
    TwoQubitState::from_trusted(m)
}

/// Both correlation laws for `rho1(alpha)` under dephasing.
pub fn law_eval_nonmarkov(alpha: f64, pd_abs: f64) -> Result<(f64, f64)> {
    let a = check_unit_interval("alpha", alpha)?;
    let p = check_unit_interval("pd_abs", pd_abs)?;
    let q = p.powi(4) * (a - a * a);
    let min = if a != 0.5 {
        2.0 * q
    } else {
        0.25 + 2.0 * q - q.min(0.25)
    };
    let gd = 2.0 * q + 0.25 + (0.5 - a).powi(2) - (0.5 - a + a * a).max(q);
    Ok((min, gd))
}

/// The closed-form amplitude-damping elements, in engine labels.
pub fn amplitude_elements(s0: &XState, p_abs: f64) -> XState {
    let p2 = p_abs * p_abs;
    let q2 = 1.0 - p2;
    let (r11, r22, r33) = (s0.rho44, s0.rho33, s0.rho22);
    XState {
        rho44: p2 * p2 * r11,
        rho33: p2 * (r22 + q2 * r33),
        rho22: p2 * (r33 + q2 * r11),
        rho11: 1.0 - r11 - r22 - r33,
        rho14: p2 * s0.rho14,
        rho23: p2 * s0.rho23,
        phases: [0.0; 2],
    }
}

fn predict_nonmarkov(
    s0: &XState,
    kind: NonMarkovKind,
    p_abs: f64,
    family: Option<StateFamilyParam>,
) -> Result<Prediction> {
    match kind {
        NonMarkovKind::Dephasing => match family {
            Some(f) if f.family == StateFamily::Pure => {
                let (min, gd) = law_eval_nonmarkov(f.alpha, p_abs.min(1.0))?;
                Ok(Prediction {
                    min: Some(min),
                    gd: Some(gd),
                    elements: None,
                })
            }
            _ => Ok(Prediction::default()),
        },
        NonMarkovKind::Amplitude => {
            let e = amplitude_elements(s0, p_abs.min(1.0));
            let b = BlochForm::from_matrix(&e.to_matrix());
            Ok(Prediction {
                min: Some(min_from_bloch(&b)),
                gd: Some(gd_from_bloch(&b)),
                elements: Some((e, CoherenceMatch::Direct)),
            })
        }
    }
}

/// Evolves `s0` with the sampled `p(t)`. Dephasing applies the element
/// map directly; amplitude noise goes through the Kraus engine. The stored
/// phases of `s0` are not re-applied.
pub fn evolve_nonmarkov(
    s0: &XState,
    kind: NonMarkovKind,
    p: &DecoherenceFunction,
    family: Option<StateFamilyParam>,
) -> Result<Vec<TrajectoryRecord>> {
    let start = s0.to_state()?;
    p.times
        .par_iter()
        .zip(p.values.par_iter())
        .map(|(&t, &pt)| {
            let state = match kind {
                NonMarkovKind::Dephasing => dephase_x(&start, pt),
                NonMarkovKind::Amplitude => {
                    let ch = amplitude_channel(pt)?;
                    apply_local(&ch, &ch, &start)?
                }
            };
            let pred = predict_nonmarkov(s0, kind, pt.norm(), family)?;
            Ok(TrajectoryRecord::new(t, pt.norm(), state, pred))
        })
        .collect()
}

/// The non-Markovian figure grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonMarkovFigure {
    F9,
    F10,
}

impl NonMarkovFigure {
    pub const ALL: [NonMarkovFigure; 2] = [NonMarkovFigure::F9, NonMarkovFigure::F10];

    pub fn id(self) -> &'static str {
        match self {
            NonMarkovFigure::F9 => "F9",
            NonMarkovFigure::F10 => "F10",
        }
    }

    pub fn kind(self) -> NonMarkovKind {
        match self {
            NonMarkovFigure::F9 => NonMarkovKind::Amplitude,
            NonMarkovFigure::F10 => NonMarkovKind::Dephasing,
        }
    }

    /// `gamma0 = 1`, `lambda = 0.1`, `omega0 = 1`; F10 detuned by `0.01`.
    pub fn spectrum(self) -> LorentzianSpectrum {
        let delta = match self {
            NonMarkovFigure::F9 => 0.0,
            NonMarkovFigure::F10 => 0.01,
        };
        LorentzianSpectrum {
            gamma0: 1.0,
            lambda: 0.1,
            delta,
            omega0: 1.0,
        }
    }
}

impl std::str::FromStr for NonMarkovFigure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        NonMarkovFigure::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown figure `{s}` (expected F9 or F10)"))
    }
}

/// `intervals + 1` points on `[0, 30 / gamma0]`.
pub fn default_grid(spec: &LorentzianSpectrum, intervals: usize) -> Vec<f64> {
    if intervals == 0 {
        return Vec::new();
    }
    uniform_grid(30.0 / spec.gamma0, intervals + 1)
}

/// Rows over `alphas` of the pure family for `kind` noise.
pub fn family_sweep_nonmarkov(
    kind: NonMarkovKind,
    spec: &LorentzianSpectrum,
    family: StateFamily,
    alphas: &[f64],
    t_grid: &[f64],
) -> Result<Vec<FigureRow>> {
    let p = kind.decoherence(spec, t_grid)?;
    let blocks: Vec<Vec<FigureRow>> = alphas
        .par_iter()
        .map(|&a| {
            let param = StateFamilyParam::new(family, a)?;
            let s0 = crate::states::as_x_state(&make_family(param)?)?;
            let rows = evolve_nonmarkov(&s0, kind, &p, Some(param))?;
            Ok(rows
                .into_iter()
                .map(|record| FigureRow {
                    series: kind.label().to_string(),
                    alpha: Some(a),
                    record,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

/// Figure rows for the pure family.
pub fn figure_data_nonmarkov(
    fig: NonMarkovFigure,
    spec: &LorentzianSpectrum,
    alphas: &[f64],
    t_grid: &[f64],
) -> Result<Vec<FigureRow>> {
    family_sweep_nonmarkov(fig.kind(), spec, StateFamily::Pure, alphas, t_grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::{gd_closed, min_closed};
    use crate::markov::alpha_grid;
    use crate::states::as_x_state;
    use approx::assert_abs_diff_eq;

    fn fig9() -> LorentzianSpectrum {
        NonMarkovFigure::F9.spectrum()
    }

    #[test]
    fn kernel_examples() {
        let spec = LorentzianSpectrum::new(1.0, 0.1, 0.0, 1.0).unwrap();
        let k = kernel_from_spectrum(&spec);
        assert_abs_diff_eq!(k.eval(0.0).re, 0.05);
        assert_eq!(k.eval(3.0).im, 0.0);
        let wide = kernel_from_spectrum(&LorentzianSpectrum::new(1.0, 1e6, 0.3, 1.0).unwrap());
        assert!((wide.mass() - C64::new(0.5, 0.0)).norm() < 1e-6);
        assert!(LorentzianSpectrum::new(0.0, 1.0, 0.0, 0.0).is_err());
        assert!(NoiseKernel::new(1.0, 0.0, 0.0).is_err());
        assert!(spec.density(1.0) > spec.density(1.5));
    }

    #[test]
    fn amplitude_examples() {
        let spec = fig9();
        assert_eq!(amplitude_p(&spec, 0.0), C64::new(1.0, 0.0));
        let om = (0.2f64 - 0.01).sqrt();
        for t in [0.5f64, 3.0, 8.0, 20.0] {
            let want = (-0.05 * t).exp() * ((0.5 * om * t).cos() + 0.1 / om * (0.5 * om * t).sin());
            assert_abs_diff_eq!(amplitude_p(&spec, t).re, want, epsilon = 1e-12);
        }
        let critical = LorentzianSpectrum::new(1.0, 2.0, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(amplitude_p(&critical, 1.0).re, (-1.0f64).exp() * 2.0, epsilon = 1e-12);
    }

    #[test]
    fn ode_matches_closed_form() {
        let spec = fig9();
        let grid = default_grid(&spec, 3000);
        let p = dephasing_p(&kernel_from_spectrum(&spec), &grid).unwrap();
        for (t, v) in p.times().iter().zip(p.values()) {
            assert!((v - amplitude_p(&spec, *t)).norm() < 1e-8);
        }
        let detuned = NonMarkovFigure::F10.spectrum();
        let p = dephasing_p(&kernel_from_spectrum(&detuned), &grid).unwrap();
        for (t, v) in p.times().iter().zip(p.values()) {
            assert!((v - amplitude_p(&detuned, *t)).norm() < 1e-8);
        }
    }

    #[test]
    fn decoherence_bounded() {
        for lambda in [0.1, 1.0, 20.0] {
            let spec = LorentzianSpectrum::new(1.0, lambda, 0.0, 0.0).unwrap();
            let grid = uniform_grid(30.0, 601);
            assert!(DecoherenceFunction::amplitude(&spec, &grid).is_ok());
            assert!(dephasing_p(&kernel_from_spectrum(&spec), &grid).is_ok());
        }
        let bad = DecoherenceFunction::new(
            DecoherenceKind::DephasingP,
            vec![0.0, 1.0],
            vec![C64::new(1.0, 0.0), C64::new(1.1, 0.0)],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn law_examples() {
        assert_abs_diff_eq!(law_eval_nonmarkov(0.5, 1.0).unwrap().0, 0.5);
        let (m, g) = law_eval_nonmarkov(0.3, 0.0).unwrap();
        assert_eq!(m, 0.0);
        assert_abs_diff_eq!(g, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            law_eval_nonmarkov(0.5, 0.5f64.sqrt()).unwrap().0,
            0.3125,
            epsilon = 1e-15
        );
        assert!(law_eval_nonmarkov(1.2, 0.5).is_err());
    }

    #[test]
    fn identity_when_p_is_one() {
        let s0 = as_x_state(&make_family(StateFamilyParam::new(StateFamily::Werner, 0.6).unwrap()).unwrap()).unwrap();
        let p = DecoherenceFunction::new(
            DecoherenceKind::AmplitudeP,
            vec![0.0, 1.0, 2.0],
            vec![C64::new(1.0, 0.0); 3],
        )
        .unwrap();
        for kind in [NonMarkovKind::Amplitude, NonMarkovKind::Dephasing] {
            for r in evolve_nonmarkov(&s0, kind, &p, None).unwrap() {
                assert!(r.state.matrix().max_abs_diff(&s0.to_matrix()) < 1e-15);
            }
        }
    }

    #[test]
    fn dephasing_rows_follow_the_laws() {
        let fig = NonMarkovFigure::F10;
        let spec = fig.spectrum();
        let rows = figure_data_nonmarkov(fig, &spec, &alpha_grid(11), &default_grid(&spec, 300)).unwrap();
        for r in &rows {
            assert!(r.record.residual_min.unwrap() <= 1e-9);
            assert!(r.record.residual_gd.unwrap() <= 1e-9);
        }
    }

    #[test]
    fn amplitude_engine_is_physical_and_revives() {
        let spec = fig9();
        let grid = default_grid(&spec, 600);
        let rows = figure_data_nonmarkov(NonMarkovFigure::F9, &spec, &[0.0, 0.5], &grid).unwrap();
        for r in &rows {
            assert!(r.record.state.eigenvalues()[3] > -1e-9);
            assert_abs_diff_eq!(r.record.state.matrix().trace().re, 1.0, epsilon = 1e-12);
            if r.alpha == Some(0.0) {
                assert!(r.record.min_engine.abs() < 1e-15);
            }
        }
        let mins: Vec<f64> = rows
            .iter()
            .filter(|r| r.alpha == Some(0.5))
            .map(|r| r.record.min_engine)
            .collect();
        assert!(mins.windows(3).any(|w| w[1] < w[0] && w[1] < w[2]));
        assert_abs_diff_eq!(mins[0], 0.5, epsilon = 1e-12);
    }

    #[test]
    fn amplitude_element_list_fails_trace() {
        let s0 = as_x_state(&make_family(StateFamilyParam::new(StateFamily::Pure, 0.4).unwrap()).unwrap()).unwrap();
        let ch = amplitude_channel(C64::new(0.6, 0.0)).unwrap();
        let engine = as_x_state(&apply_local(&ch, &ch, &s0.to_state().unwrap()).unwrap()).unwrap();
        let listed = amplitude_elements(&s0, 0.6);
        assert!(crate::markov::element_residual(&listed, &engine, CoherenceMatch::Direct) > 1e-3);
        assert_abs_diff_eq!(
            min_closed(&engine.to_state().unwrap()),
            min_closed(&engine.to_state().unwrap())
        );
        assert!(gd_closed(&engine.to_state().unwrap()) <= min_closed(&engine.to_state().unwrap()) + 1e-12);
    }
}
