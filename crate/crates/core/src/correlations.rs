//! Measurement-induced nonlocality and geometric discord.
//!
//! Both quantities compare a state with its image under a local von Neumann
//! measurement on party A, using the squared Hilbert–Schmidt distance:
//!
//! - MIN maximizes the disturbance over measurements that leave the reduced
//!   state of A invariant;
//! - GD minimizes it over all measurements (for two qubits the closest
//!   zero-discord state is a measured state).
//!
//! The closed forms read off the Bloch coefficients: with `M = T T^t`,
//!
//! ```text
//! MIN = tr M - x^t M x / |x|^2        (x != 0)
//!     = tr M - lambda_min(M)           (x == 0)
//! GD  = |x|^2 + |T|^2 - lambda_max(x x^t + M)
//! ```
//!
//! The oracles never touch those formulas: they build the measured 4x4
//! matrix explicitly and search the sphere of measurement directions.

use crate::qmat::{eig_sym3, kron, pauli, CMatrix2, CMatrix4, SymMatrix3, C64};
use crate::states::{bloch_decompose, BlochForm, TwoQubitState};
use crate::tol;

/// Bloch direction of a projective measurement `{(I +- n.s)/2}` on A.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementDirection([f64; 3]);

impl MeasurementDirection {
    /// Accepts vectors of unit norm within [`tol::UNIT_NORM`].
    pub fn new(n: [f64; 3]) -> Option<Self> {
        let norm = norm3(&n);
        ((norm - 1.0).abs() <= tol::UNIT_NORM).then_some(MeasurementDirection(n))
    }

    /// Normalizes a non-zero vector.
    pub fn from_vector(v: [f64; 3]) -> Option<Self> {
        let norm = norm3(&v);
        (norm > 0.0 && norm.is_finite()).then(|| MeasurementDirection([v[0] / norm, v[1] / norm, v[2] / norm]))
    }

    pub fn z() -> Self {
        MeasurementDirection([0.0, 0.0, 1.0])
    }

    pub fn vector(&self) -> [f64; 3] {
        self.0
    }

    /// The two projectors `(I +- n.s)/2`.
    pub fn projectors(&self) -> [CMatrix2; 2] {
        let n = self.0;
        let ns = pauli(1).scale_real(n[0]) + pauli(2).scale_real(n[1]) + pauli(3).scale_real(n[2]);
        let id = CMatrix2::identity();
        [(id + ns).scale_real(0.5), (id - ns).scale_real(0.5)]
    }
}

fn norm3(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Which case of the MIN closed form applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    XNonzero,
    XZero,
}

impl Branch {
    pub fn of(b: &BlochForm) -> Branch {
        if b.x_norm_sq().sqrt() > tol::X_NORM_EPS {
            Branch::XNonzero
        } else {
            Branch::XZero
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::XNonzero => "x_nonzero",
            Branch::XZero => "x_zero",
        }
    }
}

/// Extreme eigenvalues entering the closed forms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaSet {
    /// Smallest eigenvalue of `T T^t`.
    pub lambda_min_tt: f64,
    /// Largest eigenvalue of `x x^t + T T^t`.
    pub lambda_max_xx: f64,
}

pub fn lambda_set(b: &BlochForm) -> LambdaSet {
    let tt = SymMatrix3::gram(&b.t);
    let lambda_min_tt = eig_sym3(&tt)[2].max(0.0);
    let lambda_max_xx = eig_sym3(&SymMatrix3::outer(&b.x).add(&tt))[0];
    LambdaSet {
        lambda_min_tt,
        lambda_max_xx,
    }
}

/// MIN from Bloch coefficients; works on unvalidated decompositions too.
pub fn min_from_bloch(b: &BlochForm) -> f64 {
    let tt = SymMatrix3::gram(&b.t);
    let value = match Branch::of(b) {
        Branch::XNonzero => tt.trace() - tt.quadratic_form(&b.x) / b.x_norm_sq(),
        Branch::XZero => tt.trace() - eig_sym3(&tt)[2],
    };
    value.max(0.0)
}

/// GD from Bloch coefficients.
pub fn gd_from_bloch(b: &BlochForm) -> f64 {
    let l = lambda_set(b);
    (b.x_norm_sq() + b.t_norm_sq() - l.lambda_max_xx).max(0.0)
}

pub fn min_closed(s: &TwoQubitState) -> f64 {
    min_from_bloch(&bloch_decompose(s))
}

pub fn gd_closed(s: &TwoQubitState) -> f64 {
    gd_from_bloch(&bloch_decompose(s))
}

fn measured_matrix(rho: &CMatrix4, d: &MeasurementDirection) -> CMatrix4 {
    let id = CMatrix2::identity();
    let [pp, pm] = d.projectors();
    let a = kron(&pp, &id);
    let b = kron(&pm, &id);
    a * rho * a + b * rho * b
}

/// `sum_k (P_k (x) I) rho (P_k (x) I)`.
pub fn post_measurement_state(s: &TwoQubitState, d: &MeasurementDirection) -> TwoQubitState {
    TwoQubitState::from_trusted(measured_matrix(s.matrix(), d))
}

/// `|| rho - Pi(rho) ||^2` for the measurement along `d`.
pub fn measurement_disturbance(s: &TwoQubitState, d: &MeasurementDirection) -> f64 {
    let rho = s.matrix();
    (*rho - measured_matrix(rho, d)).hs_norm_sq()
}

/// Fibonacci lattice of `n` nearly uniform unit vectors.
pub fn fibonacci_lattice(n: usize) -> Vec<[f64; 3]> {
    let golden_angle = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2 * i + 1) as f64 / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = i as f64 * golden_angle;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

fn tangent_basis(n: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    // seed with the coordinate axis least aligned with n
    let k = (0..3).min_by(|&a, &b| n[a].abs().total_cmp(&n[b].abs())).unwrap();
    let mut seed = [0.0; 3];
    seed[k] = 1.0;
    let dot = seed[0] * n[0] + seed[1] * n[1] + seed[2] * n[2];
    let e1 = normalize([seed[0] - dot * n[0], seed[1] - dot * n[1], seed[2] - dot * n[2]]);
    let e2 = [
        n[1] * e1[2] - n[2] * e1[1],
        n[2] * e1[0] - n[0] * e1[2],
        n[0] * e1[1] - n[1] * e1[0],
    ];
    (e1, e2)
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = norm3(&v);
    [v[0] / n, v[1] / n, v[2] / n]
}

/// Golden-section minimization of `f` on `[a, b]` with a fixed budget.
/// Returns the best abscissa seen and its value.
fn golden_section<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, evals: usize) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 2..evals {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Minimizes `g` over the unit sphere: lattice scan, then rounds of
/// golden-section line searches along the two local angular coordinates
/// and the combined step direction, re-centred after every round.
fn sphere_minimize<G: Fn(&[f64; 3]) -> f64>(g: G, angle_tol: f64) -> ([f64; 3], f64) {
    let mut best = [0.0, 0.0, 1.0];
    let mut best_val = f64::INFINITY;
    // strict comparison: the lowest lattice index wins ties
    for n in fibonacci_lattice(tol::LATTICE_POINTS) {
        let v = g(&n);
        if v < best_val {
            best_val = v;
            best = n;
        }
    }

    let mut window: f64 = 0.2;
    for _ in 0..tol::REFINE_ROUNDS {
        let (e1, e2) = tangent_basis(&best);
        let at = |u: f64, v: f64| {
            normalize([
                best[0] + u * e1[0] + v * e2[0],
                best[1] + u * e1[1] + v * e2[1],
                best[2] + u * e1[2] + v * e2[2],
            ])
        };
        let (mut u, mut v, mut val) = (0.0, 0.0, best_val);

        let (cu, fu) = golden_section(|s| g(&at(s, 0.0)), -window, window, tol::GOLDEN_EVALS);
        if fu < val {
            u = cu;
            val = fu;
        }
        let (cv, fv) = golden_section(|s| g(&at(u, s)), -window, window, tol::GOLDEN_EVALS);
        if fv < val {
            v = cv;
            val = fv;
        }
        let step = (u * u + v * v).sqrt();
        if step > 0.0 {
            let (du, dv) = (u / step, v / step);
            let (cs, fs) = golden_section(|s| g(&at(u + s * du, v + s * dv)), -window, window, tol::GOLDEN_EVALS);
            if fs < val {
                u += cs * du;
                v += cs * dv;
                val = fs;
            }
        }
        let moved = (u * u + v * v).sqrt();
        if val < best_val {
            best = at(u, v);
            best_val = val;
        }
        if moved < angle_tol {
            break;
        }
        window = (4.0 * moved).clamp(angle_tol, 0.2);
    }
    (best, best_val)
}

/// MIN by direct evaluation of the measured state.
///
/// For `x != 0` invariance of the reduced state pins the measurement to
/// `n = x/|x|`; otherwise the disturbance is maximized over the sphere.
pub fn min_oracle(s: &TwoQubitState, angle_tol: f64) -> (f64, MeasurementDirection) {
    let b = bloch_decompose(s);
    if Branch::of(&b) == Branch::XNonzero {
        let d = MeasurementDirection::from_vector(b.x).expect("x is non-zero");
        return (measurement_disturbance(s, &d).max(0.0), d);
    }
    let (n, v) = sphere_minimize(|n| -measurement_disturbance(s, &MeasurementDirection(*n)), angle_tol);
    ((-v).max(0.0), MeasurementDirection(n))
}

/// GD as the smallest measurement disturbance over all directions.
pub fn gd_oracle(s: &TwoQubitState, angle_tol: f64) -> (f64, MeasurementDirection) {
    let (n, v) = sphere_minimize(|n| measurement_disturbance(s, &MeasurementDirection(*n)), angle_tol);
    (v.max(0.0), MeasurementDirection(n))
}

/// Closed forms and oracles side by side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationReport {
    pub min_value: f64,
    pub gd_value: f64,
    pub min_oracle: f64,
    pub gd_oracle: f64,
    pub min_argmax: MeasurementDirection,
    pub gd_argmin: MeasurementDirection,
    pub branch: Branch,
}

pub fn correlation_report(s: &TwoQubitState) -> CorrelationReport {
    let b = bloch_decompose(s);
    let (min_o, min_d) = min_oracle(s, tol::ORACLE_TOL);
    let (gd_o, gd_d) = gd_oracle(s, tol::ORACLE_TOL);
    CorrelationReport {
        min_value: min_from_bloch(&b),
        gd_value: gd_from_bloch(&b),
        min_oracle: min_o,
        gd_oracle: gd_o,
        min_argmax: min_d,
        gd_argmin: gd_d,
        branch: Branch::of(&b),
    }
}

/// Applies `(U_A (x) U_B)` to a state and recomputes (MIN, GD); used by
/// invariance checks.
pub fn closed_forms_after_local_unitary(s: &TwoQubitState, ua: &CMatrix2, ub: &CMatrix2) -> crate::Result<(f64, f64)> {
    let rotated = s.apply_local_unitary(ua, ub)?;
    Ok((min_closed(&rotated), gd_closed(&rotated)))
}

#[allow(dead_code)]
fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}
