//! Single-qubit Kraus channels and their local action on two qubits.

use crate::qmat::{eigh_herm4, kron, pauli, CMatrix, CMatrix2, CMatrix4, C64, ZERO};
use crate::states::TwoQubitState;
use crate::{check_unit_interval, tol, Error, Result};

/// A qubit channel given by at most four Kraus operators.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitChannel {
    kraus: Vec<CMatrix2>,
    label: String,
}

impl QubitChannel {
    /// Wraps a Kraus list. Trace preservation is not enforced here so that
    /// defective sets can still be inspected with [`validate_cptp`].
    pub fn new(kraus: Vec<CMatrix2>, label: impl Into<String>) -> Result<Self> {
        if kraus.is_empty() || kraus.len() > 4 {
            return Err(Error::TooManyKraus(kraus.len()));
        }
        if kraus.iter().any(|k| !k.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(QubitChannel {
            kraus,
            label: label.into(),
        })
    }

    pub fn identity() -> Self {
        QubitChannel {
            kraus: vec![CMatrix2::identity()],
            label: "identity".into(),
        }
    }

    pub fn kraus(&self) -> &[CMatrix2] {
        &self.kraus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `sum_k E_k rho E_k^dag` on a single qubit.
    pub fn apply(&self, rho: &CMatrix2) -> CMatrix2 {
        self.kraus
            .iter()
            .fold(CMatrix2::zeros(), |acc, e| acc + e * rho * e.dagger())
    }

    /// Deviation of `sum E^dag E` from the identity.
    pub fn cptp_defect(&self) -> f64 {
        completeness(&self.kraus).max_abs_diff(&CMatrix2::identity())
    }
}

fn completeness(kraus: &[CMatrix2]) -> CMatrix2 {
    kraus.iter().fold(CMatrix2::zeros(), |acc, e| acc + e.dagger() * e)
}

fn real(v: f64) -> C64 {
    C64::new(v, 0.0)
}

/// `{sqrt(1-3g/4) I, sqrt(g/4) X, sqrt(g/4) Y, sqrt(g/4) Z}`.
pub fn depolarizing(gamma: f64) -> Result<QubitChannel> {
    let g = check_unit_interval("gamma", gamma)?;
    let a = (1.0 - 0.75 * g).sqrt();
    let b = (0.25 * g).sqrt();
    QubitChannel::new(
        vec![
            pauli(0).scale_real(a),
            pauli(1).scale_real(b),
            pauli(2).scale_real(b),
            pauli(3).scale_real(b),
        ],
        format!("depol:{g}"),
    )
}

/// The depolarizing set with `sqrt(g/2)` Pauli weights. Not trace
/// preserving for `g > 0`; kept to document the defect.
pub fn unnormalized_depolarizing(gamma: f64) -> Result<QubitChannel> {
    let g = check_unit_interval("gamma", gamma)?;
    let a = (1.0 - 0.75 * g).sqrt();
    let b = (0.5 * g).sqrt();
    QubitChannel::new(
        vec![
            pauli(0).scale_real(a),
            pauli(1).scale_real(b),
            pauli(2).scale_real(b),
            pauli(3).scale_real(b),
        ],
        format!("unnormalized-depol:{g}"),
    )
}

/// `{diag(1, sqrt(1-g)), diag(0, sqrt(g))}`.
pub fn dephasing(gamma: f64) -> Result<QubitChannel> {
    let g = check_unit_interval("gamma", gamma)?;
    QubitChannel::new(
        vec![
            CMatrix2::diag([real(1.0), real((1.0 - g).sqrt())]),
            CMatrix2::diag([ZERO, real(g.sqrt())]),
        ],
        format!("deph:{g}"),
    )
}

/// Generalized amplitude damping towards `diag(p, 1-p)`.
pub fn gad(gamma: f64, p: f64) -> Result<QubitChannel> {
    let g = check_unit_interval("gamma", gamma)?;
    let p = check_unit_interval("p", p)?;
    let sp = p.sqrt();
    let sq = (1.0 - p).sqrt();
    let keep = (1.0 - g).sqrt();
    let jump = g.sqrt();
    QubitChannel::new(
        vec![
            CMatrix2::diag([real(sp), real(sp * keep)]),
            CMatrix([[ZERO, real(sp * jump)], [ZERO, ZERO]]),
            CMatrix2::diag([real(sq * keep), real(sq)]),
            CMatrix([[ZERO, ZERO], [real(sq * jump), ZERO]]),
        ],
        format!("gad:{g}:{p}"),
    )
}

/// `Sigma E^dag E = I` within [`tol::CPTP`].
pub fn validate_cptp(ch: &QubitChannel) -> bool {
    ch.cptp_defect() <= tol::CPTP
}

/// The channel `second . first`, reduced to at most four Kraus operators
/// through the Choi matrix when the product list is longer.
pub fn compose(first: &QubitChannel, second: &QubitChannel) -> Result<QubitChannel> {
    let mut products = Vec::with_capacity(first.kraus.len() * second.kraus.len());
    for f in &second.kraus {
        for e in &first.kraus {
            products.push(f * e);
        }
    }
    let label = format!("{}+{}", second.label, first.label);
    if products.len() <= 4 {
        return QubitChannel::new(products, label);
    }
    QubitChannel::new(reduce_kraus(&products)?, label)
}

fn vec_of(k: &CMatrix2) -> [C64; 4] {
    [k.0[0][0], k.0[0][1], k.0[1][0], k.0[1][1]]
}

/// Canonical Kraus operators `sqrt(lambda) unvec(v)` from the eigenpairs of
/// `sum_k vec(K) vec(K)^dag`, largest weight first.
fn reduce_kraus(kraus: &[CMatrix2]) -> Result<Vec<CMatrix2>> {
    let mut choi = CMatrix4::zeros();
    for k in kraus {
        let v = vec_of(k);
        for i in 0..4 {
            for j in 0..4 {
                choi.0[i][j] += v[i] * v[j].conj();
            }
        }
    }
    let (values, vectors) = eigh_herm4(&choi)?;
    let cutoff = values[0].max(0.0) * 1e-15;
    let mut out = Vec::new();
    for (col, &lambda) in values.iter().enumerate() {
        if lambda <= cutoff {
            continue;
        }
        let s = lambda.sqrt();
        let v = |r: usize| vectors.0[r][col] * s;
        out.push(CMatrix([[v(0), v(1)], [v(2), v(3)]]));
    }
    if out.is_empty() {
        out.push(CMatrix2::zeros());
    }
    Ok(out)
}

/// `sum_{mu nu} (E_mu (x) F_nu) rho (E_mu (x) F_nu)^dag`.
///
/// Both channels must be trace preserving.
pub fn apply_local(ch_a: &QubitChannel, ch_b: &QubitChannel, s: &TwoQubitState) -> Result<TwoQubitState> {
    for ch in [ch_a, ch_b] {
        let d = ch.cptp_defect();
        if d > tol::CPTP {
            return Err(Error::NotTracePreserving(d));
        }
    }
    let rho = s.matrix();
    let mut out = CMatrix4::zeros();
    for e in &ch_a.kraus {
        for f in &ch_b.kraus {
            let k = kron(e, f);
            out = out + k * rho * k.dagger();
        }
    }
    Ok(TwoQubitState::from_trusted(out))
}

/// Affine action `v -> T v + t` on the single-qubit Bloch vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochAffine {
    pub t_matrix: [[f64; 3]; 3],
    pub shift: [f64; 3],
}

impl BlochAffine {
    pub fn is_unital(&self) -> bool {
        self.shift.iter().all(|v| v.abs() <= 1e-12)
    }

    pub fn apply(&self, v: &[f64; 3]) -> [f64; 3] {
        let mut out = self.shift;
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..3 {
                *o += self.t_matrix[i][j] * v[j];
            }
        }
        out
    }
}

fn qubit_bloch(rho: &CMatrix2) -> [f64; 3] {
    [1, 2, 3].map(|k| rho.trace_product(&pauli(k)).re)
}

/// Reads `T` and `t` off the images of `I/2` and `(I + s_k)/2`.
pub fn bloch_affine(ch: &QubitChannel) -> BlochAffine {
    let half = CMatrix2::identity().scale_real(0.5);
    let shift = qubit_bloch(&ch.apply(&half));
    let mut t_matrix = [[0.0; 3]; 3];
    for k in 0..3 {
        let image = qubit_bloch(&ch.apply(&(half + pauli(k + 1).scale_real(0.5))));
        for i in 0..3 {
            t_matrix[i][k] = image[i] - shift[i];
        }
    }
    BlochAffine { t_matrix, shift }
}

/// Channel strengths, both in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelStrength {
    pub gamma: f64,
    pub p: f64,
}

impl ChannelStrength {
    pub fn new(gamma: f64, p: f64) -> Result<Self> {
        Ok(ChannelStrength {
            gamma: check_unit_interval("gamma", gamma)?,
            p: check_unit_interval("p", p)?,
        })
    }
}
