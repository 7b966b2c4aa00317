//! Two-qubit density matrices and their Bloch (Pauli) decomposition.
//!
//! Coefficients use the half-normalized convention
//!
//! ```text
//! rho = I/4 + 1/2 sum_i x_i s_i (x) I + 1/2 sum_j y_j I (x) s_j
//!           + 1/2 sum_ij t_ij s_i (x) s_j
//! ```
//!
//! so that `x_i = tr(rho s_i (x) I) / 2` and `t_ij = tr(rho s_i (x) s_j) / 2`,
//! and a Bell state has `|t_ii| = 1/2`.

use crate::qmat::{eig_herm4, kron, pauli, CMatrix2, CMatrix4, C64, ZERO};
use crate::{check_unit_interval, tol, Error, Result};

/// A validated two-qubit density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitState {
    rho: CMatrix4,
}

impl TwoQubitState {
    /// Accepts `rho` if it is finite, Hermitian, unit-trace and positive
    /// within the tolerances in [`tol`].
    pub fn new(rho: CMatrix4) -> Result<Self> {
        if !rho.is_finite() {
            return Err(Error::NonFinite);
        }
        let defect = rho.hermiticity_defect();
        if defect > tol::HERMITIAN {
            return Err(Error::NotHermitian(defect));
        }
        let tr = rho.trace();
        if (tr.re - 1.0).abs() > tol::TRACE || tr.im.abs() > tol::TRACE {
            return Err(Error::InvalidTrace(tr.re));
        }
        let ev = eig_herm4(&rho)?;
        if ev[3] < -tol::POSITIVITY {
            return Err(Error::NotPositive(ev[3]));
        }
        Ok(TwoQubitState { rho })
    }

    pub fn maximally_mixed() -> Self {
        TwoQubitState {
            rho: CMatrix4::identity().scale_real(0.25),
        }
    }

    /// `|psi><psi|` for a normalized 4-component vector.
    pub fn pure(psi: [C64; 4]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        let mut rho = CMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                rho.0[i][j] = psi[i] * psi[j].conj() / norm;
            }
        }
        Self::new(rho)
    }

    pub fn matrix(&self) -> &CMatrix4 {
        &self.rho
    }

    pub fn purity(&self) -> f64 {
        self.rho.trace_product(&self.rho).re
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        eig_herm4(&self.rho).expect("validated state is Hermitian")
    }

    /// `(U_A (x) U_B) rho (U_A (x) U_B)^dag`.
    pub fn apply_local_unitary(&self, ua: &CMatrix2, ub: &CMatrix2) -> Result<Self> {
        let u = kron(ua, ub);
        Self::new(self.rho.conjugate_by(&u))
    }

    /// Bypasses validation for matrices produced by CPTP maps of valid states.
    pub(crate) fn from_trusted(rho: CMatrix4) -> Self {
        TwoQubitState { rho }
    }
}

/// Local Bloch vectors and correlation matrix of a two-qubit operator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochForm {
    pub x: [f64; 3],
    pub y: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl BlochForm {
    /// Decomposes an arbitrary 4x4 operator without validating it; used
    /// for law predictions that need not be physical.
    pub fn from_matrix(rho: &CMatrix4) -> Self {
        let id = pauli(0);
        let mut x = [0.0; 3];
        let mut y = [0.0; 3];
        let mut t = [[0.0; 3]; 3];
        for i in 0..3 {
            let si = pauli(i + 1);
            x[i] = 0.5 * rho.trace_product(&kron(&si, &id)).re;
            y[i] = 0.5 * rho.trace_product(&kron(&id, &si)).re;
            for (j, tij) in t[i].iter_mut().enumerate() {
                *tij = 0.5 * rho.trace_product(&kron(&si, &pauli(j + 1))).re;
            }
        }
        BlochForm { x, y, t }
    }

    pub fn x_norm_sq(&self) -> f64 {
        self.x.iter().map(|v| v * v).sum()
    }

    pub fn y_norm_sq(&self) -> f64 {
        self.y.iter().map(|v| v * v).sum()
    }

    /// Squared Frobenius norm of the correlation matrix.
    pub fn t_norm_sq(&self) -> f64 {
        self.t.iter().flatten().map(|v| v * v).sum()
    }

    /// Assembles the operator back from its coefficients.
    pub fn to_matrix(&self) -> CMatrix4 {
        let id = pauli(0);
        let mut rho = CMatrix4::identity().scale_real(0.25);
        for i in 0..3 {
            let si = pauli(i + 1);
            rho = rho + kron(&si, &id).scale_real(0.5 * self.x[i]);
            rho = rho + kron(&id, &si).scale_real(0.5 * self.y[i]);
            for j in 0..3 {
                rho = rho + kron(&si, &pauli(j + 1)).scale_real(0.5 * self.t[i][j]);
            }
        }
        rho
    }
}

/// Coefficients of a valid state.
pub fn bloch_decompose(s: &TwoQubitState) -> BlochForm {
    BlochForm::from_matrix(s.matrix())
}

/// Output of [`bloch_reconstruct`]: the assembled matrix together with its
/// smallest eigenvalue, so callers can tell whether it is a state.
#[derive(Clone, Copy, Debug)]
pub struct Reconstruction {
    pub rho: CMatrix4,
    pub min_eigenvalue: f64,
}

impl Reconstruction {
    pub fn is_positive(&self) -> bool {
        self.min_eigenvalue >= -tol::POSITIVITY
    }

    pub fn into_state(self) -> Result<TwoQubitState> {
        TwoQubitState::new(self.rho)
    }
}

/// Rebuilds the operator from Bloch coefficients, flagging rather than
/// rejecting non-positive results.
pub fn bloch_reconstruct(b: &BlochForm) -> Reconstruction {
    let rho = b.to_matrix();
    let min_eigenvalue = eig_herm4(&rho).map(|ev| ev[3]).unwrap_or(f64::NEG_INFINITY);
    Reconstruction { rho, min_eigenvalue }
}

/// The one-parameter initial-state families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateFamily {
    /// `sqrt(1-a)|00> + sqrt(a)|11>`.
    Pure,
    /// `(1-a)/4 I + a |psi-><psi-|`.
    Werner,
    /// `a/2 (|00><00| + |11><11|) + (1-a) |psi-><psi-|`.
    VedralPlenio,
}

impl StateFamily {
    pub fn label(self) -> &'static str {
        match self {
            StateFamily::Pure => "pure",
            StateFamily::Werner => "werner",
            StateFamily::VedralPlenio => "vp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateFamilyParam {
    pub family: StateFamily,
    pub alpha: f64,
}

impl StateFamilyParam {
    pub fn new(family: StateFamily, alpha: f64) -> Result<Self> {
        check_unit_interval("alpha", alpha)?;
        Ok(StateFamilyParam { family, alpha })
    }
}

/// Builds the family member entry by entry, so diagonal entries are exact.
pub fn make_family(p: StateFamilyParam) -> Result<TwoQubitState> {
    let a = check_unit_interval("alpha", p.alpha)?;
    let x = match p.family {
        StateFamily::Pure => XState {
            rho11: 1.0 - a,
            rho22: 0.0,
            rho33: 0.0,
            rho44: a,
            rho14: (a * (1.0 - a)).sqrt(),
            rho23: 0.0,
            phases: [0.0; 2],
        },
        StateFamily::Werner => {
            let w = (1.0 - a) / 4.0;
            XState {
                rho11: w,
                rho22: w + a / 2.0,
                rho33: w + a / 2.0,
                rho44: w,
                rho14: 0.0,
                rho23: -a / 2.0,
                phases: [0.0; 2],
            }
        }
        StateFamily::VedralPlenio => XState {
            rho11: a / 2.0,
            rho22: (1.0 - a) / 2.0,
            rho33: (1.0 - a) / 2.0,
            rho44: a / 2.0,
            rho14: 0.0,
            rho23: -(1.0 - a) / 2.0,
            phases: [0.0; 2],
        },
    };
    TwoQubitState::new(x.to_matrix())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];
}

pub fn bell(b: BellState) -> TwoQubitState {
    let (i, j, sign) = match b {
        BellState::PhiPlus => (0, 3, 1.0),
        BellState::PhiMinus => (0, 3, -1.0),
        BellState::PsiPlus => (1, 2, 1.0),
        BellState::PsiMinus => (1, 2, -1.0),
    };
    let mut rho = CMatrix4::zeros();
    rho.0[i][i] = C64::new(0.5, 0.0);
    rho.0[j][j] = C64::new(0.5, 0.0);
    rho.0[i][j] = C64::new(0.5 * sign, 0.0);
    rho.0[j][i] = C64::new(0.5 * sign, 0.0);
    TwoQubitState::from_trusted(rho)
}

/// Two-qubit state supported on the diagonal and anti-diagonal.
///
/// Matrix elements use 1-based labels in the basis `|00>, |01>, |10>, |11>`.
/// `phases` holds the local phase angles `(a, b)` of the unitary
/// `diag(1, e^{ia}) (x) diag(1, e^{ib})` that made the coherences real and
/// non-negative; zero for states built directly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XState {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub rho14: f64,
    pub rho23: f64,
    pub phases: [f64; 2],
}

impl XState {
    /// Checks unit trace and positivity of the two 2x2 blocks.
    pub fn validate(&self) -> Result<()> {
        let d = [self.rho11, self.rho22, self.rho33, self.rho44];
        if d.iter().chain([self.rho14, self.rho23].iter()).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = d.iter().sum();
        if (sum - 1.0).abs() > tol::TRACE {
            return Err(Error::InvalidTrace(sum));
        }
        if d.iter().any(|&v| v < -tol::POSITIVITY) {
            return Err(Error::InvalidXState("negative population"));
        }
        let outer = (self.rho11.max(0.0) * self.rho44.max(0.0)).sqrt();
        let inner = (self.rho22.max(0.0) * self.rho33.max(0.0)).sqrt();
        if self.rho14.abs() > outer + tol::X_BLOCK {
            return Err(Error::InvalidXState("|rho14| exceeds sqrt(rho11 rho44)"));
        }
        if self.rho23.abs() > inner + tol::X_BLOCK {
            return Err(Error::InvalidXState("|rho23| exceeds sqrt(rho22 rho33)"));
        }
        Ok(())
    }

    /// The real X matrix with these elements (phases are not re-applied).
    pub fn to_matrix(&self) -> CMatrix4 {
        let mut m = CMatrix4::zeros();
        m.0[0][0] = C64::new(self.rho11, 0.0);
        m.0[1][1] = C64::new(self.rho22, 0.0);
        m.0[2][2] = C64::new(self.rho33, 0.0);
        m.0[3][3] = C64::new(self.rho44, 0.0);
        m.0[0][3] = C64::new(self.rho14, 0.0);
        m.0[3][0] = C64::new(self.rho14, 0.0);
        m.0[1][2] = C64::new(self.rho23, 0.0);
        m.0[2][1] = C64::new(self.rho23, 0.0);
        m
    }

    pub fn to_state(&self) -> Result<TwoQubitState> {
        self.validate()?;
        TwoQubitState::new(self.to_matrix())
    }

    pub fn populations(&self) -> [f64; 4] {
        [self.rho11, self.rho22, self.rho33, self.rho44]
    }

    /// Largest absolute difference over the six elements.
    pub fn max_element_diff(&self, other: &XState) -> f64 {
        [
            self.rho11 - other.rho11,
            self.rho22 - other.rho22,
            self.rho33 - other.rho33,
            self.rho44 - other.rho44,
            self.rho14 - other.rho14,
            self.rho23 - other.rho23,
        ]
        .iter()
        .fold(0.0, |acc, d| acc.max(d.abs()))
    }
}

/// Largest modulus among the entries outside the X pattern.
pub fn off_x_magnitude(m: &CMatrix4) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                worst = worst.max(m.0[i][j].norm());
            }
        }
    }
    worst
}

/// Extracts the X elements, rotating the coherence phases away with a
/// diagonal local unitary.
pub fn as_x_state(s: &TwoQubitState) -> Result<XState> {
    let m = s.matrix();
    let off = off_x_magnitude(m);
    if off > tol::X_STATE {
        return Err(Error::NotXState(off));
    }
    let c14 = m.0[0][3];
    let c23 = m.0[1][2];
    let th14 = if c14 == ZERO { 0.0 } else { c14.arg() };
    let th23 = if c23 == ZERO { 0.0 } else { c23.arg() };
    let x = XState {
        rho11: m.0[0][0].re,
        rho22: m.0[1][1].re,
        rho33: m.0[2][2].re,
        rho44: m.0[3][3].re,
        rho14: c14.norm(),
        rho23: c23.norm(),
        phases: [0.5 * (th14 + th23), 0.5 * (th14 - th23)],
    };
    Ok(x)
}

/// The diagonal local unitary `diag(1, e^{ia}) (x) diag(1, e^{ib})`.
pub fn phase_unitaries(phases: [f64; 2]) -> (CMatrix2, CMatrix2) {
    let ua = CMatrix2::diag([C64::new(1.0, 0.0), C64::from_polar(1.0, phases[0])]);
    let ub = CMatrix2::diag([C64::new(1.0, 0.0), C64::from_polar(1.0, phases[1])]);
    (ua, ub)
}
