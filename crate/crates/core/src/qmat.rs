//! Exact-size complex linear algebra for one and two qubits.
//!
//! Matrices are stored row-major in fixed arrays. The only general-purpose
//! machinery is a pair of tiny eigen-solvers: a closed-form (trigonometric)
//! solver for real symmetric 3x3 matrices with a Jacobi fallback near
//! degeneracy, and a cyclic complex Jacobi solver for Hermitian 4x4 matrices.

use std::f64::consts::PI;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

use crate::{tol, Error, Result};

pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };
pub const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Square complex matrix of fixed size `N`, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix<const N: usize>(pub [[C64; N]; N]);

/// Single-qubit operator.
pub type CMatrix2 = CMatrix<2>;
/// Two-qubit operator.
pub type CMatrix4 = CMatrix<4>;

impl<const N: usize> CMatrix<N> {
    pub fn zeros() -> Self {
        CMatrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    /// Builds a matrix after checking every entry is finite.
    pub fn try_new(entries: [[C64; N]; N]) -> Result<Self> {
        let m = CMatrix(entries);
        if m.is_finite() {
            Ok(m)
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_real(entries: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros();
        for (row, src) in m.0.iter_mut().zip(entries.iter()) {
            for (z, &x) in row.iter_mut().zip(src.iter()) {
                *z = C64::new(x, 0.0);
            }
        }
        m
    }

    pub fn diag(d: [C64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, &z) in d.iter().enumerate() {
            m.0[i][i] = z;
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    /// `tr(A B)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> C64 {
        let mut acc = ZERO;
        for i in 0..N {
            for k in 0..N {
                acc += self.0[i][k] * other.0[k][i];
            }
        }
        acc
    }

    /// Squared Hilbert–Schmidt norm, `tr(M^dag M)`.
    pub fn hs_norm_sq(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|z| *z *= s);
        m
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - self^dag`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// `U M U^dag`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u * self * u.dagger()
    }
}

impl<const N: usize> Default for CMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Mul for &CMatrix<N> {
    type Output = CMatrix<N>;
    fn mul(self, rhs: &CMatrix<N>) -> CMatrix<N> {
        let mut m = CMatrix::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    m.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<CMatrix<N>> for &CMatrix<N> {
    type Output = CMatrix<N>;
    #[allow(clippy::op_ref)]
    fn mul(self, rhs: CMatrix<N>) -> CMatrix<N> {
        self * &rhs
    }
}

impl<const N: usize> Mul<&CMatrix<N>> for CMatrix<N> {
    type Output = CMatrix<N>;
    #[allow(clippy::op_ref)]
    fn mul(self, rhs: &CMatrix<N>) -> CMatrix<N> {
        &self * rhs
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = CMatrix<N>;
    #[allow(clippy::op_ref)]
    fn mul(self, rhs: CMatrix<N>) -> CMatrix<N> {
        &self * &rhs
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = CMatrix<N>;
    fn add(mut self, rhs: CMatrix<N>) -> CMatrix<N> {
        self.0
            .iter_mut()
            .flatten()
            .zip(rhs.0.iter().flatten())
            .for_each(|(a, b)| *a += b);
        self
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = CMatrix<N>;
    fn sub(mut self, rhs: CMatrix<N>) -> CMatrix<N> {
        self.0
            .iter_mut()
            .flatten()
            .zip(rhs.0.iter().flatten())
            .for_each(|(a, b)| *a -= b);
        self
    }
}

impl<const N: usize> Neg for CMatrix<N> {
    type Output = CMatrix<N>;
    fn neg(self) -> CMatrix<N> {
        self.scale_real(-1.0)
    }
}

/// Pauli matrix `sigma_k` for `k = 1, 2, 3`; `k = 0` is the identity.
pub fn pauli(k: usize) -> CMatrix2 {
    match k {
        0 => CMatrix2::identity(),
        1 => CMatrix([[ZERO, ONE], [ONE, ZERO]]),
        2 => CMatrix([[ZERO, -I], [I, ZERO]]),
        3 => CMatrix([[ONE, ZERO], [ZERO, -ONE]]),
        _ => panic!("pauli index {k} out of range"),
    }
}

/// Kronecker product, `entry[(2i+k),(2j+l)] = a[i,j] * b[k,l]`.
pub fn kron(a: &CMatrix2, b: &CMatrix2) -> CMatrix4 {
    let mut m = CMatrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m.0[2 * i + k][2 * j + l] = a.0[i][j] * b.0[k][l];
                }
            }
        }
    }
    m
}

/// `m^dag`; free-function spelling of [`CMatrix::dagger`].
pub fn dagger<const N: usize>(m: &CMatrix<N>) -> CMatrix<N> {
    m.dagger()
}

/// `tr(m^dag m)`.
pub fn hs_norm_sq<const N: usize>(m: &CMatrix<N>) -> f64 {
    m.hs_norm_sq()
}

/// Real symmetric 3x3 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymMatrix3([[f64; 3]; 3]);

impl SymMatrix3 {
    /// Rejects non-finite or asymmetric input. The stored matrix is the
    /// symmetrized average of the input.
    pub fn new(m: [[f64; 3]; 3]) -> Result<Self> {
        if m.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut defect: f64 = 0.0;
        let mut s = m;
        for i in 0..3 {
            for j in (i + 1)..3 {
                defect = defect.max((m[i][j] - m[j][i]).abs());
                let avg = 0.5 * (m[i][j] + m[j][i]);
                s[i][j] = avg;
                s[j][i] = avg;
            }
        }
        if defect > tol::SYMMETRY {
            return Err(Error::NotSymmetric(defect));
        }
        Ok(SymMatrix3(s))
    }

    pub fn diag(d: [f64; 3]) -> Self {
        SymMatrix3([[d[0], 0.0, 0.0], [0.0, d[1], 0.0], [0.0, 0.0, d[2]]])
    }

    /// `A A^t` for an arbitrary real 3x3 `A`.
    pub fn gram(a: &[[f64; 3]; 3]) -> Self {
        let mut s = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let v: f64 = (0..3).map(|k| a[i][k] * a[j][k]).sum();
                s[i][j] = v;
                s[j][i] = v;
            }
        }
        SymMatrix3(s)
    }

    /// `v v^t`.
    pub fn outer(v: &[f64; 3]) -> Self {
        let mut s = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                s[i][j] = v[i] * v[j];
            }
        }
        SymMatrix3(s)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.0;
        for i in 0..3 {
            for j in 0..3 {
                s[i][j] += other.0[i][j];
            }
        }
        SymMatrix3(s)
    }

    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.0
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> f64 {
        det3(&self.0)
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `v^t M v`.
    pub fn quadratic_form(&self, v: &[f64; 3]) -> f64 {
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                acc += v[i] * self.0[i][j] * v[j];
            }
        }
        acc
    }
}

fn det3(a: &[[f64; 3]; 3]) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Eigenvalues of a real symmetric 3x3 matrix, sorted descending.
pub fn eig_sym3(m: &SymMatrix3) -> [f64; 3] {
    let a = &m.0;
    let scale = a.iter().flatten().fold(0.0_f64, |acc, x| acc.max(x.abs()));
    if scale == 0.0 {
        return [0.0; 3];
    }
    let off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    if off == 0.0 {
        return sorted_desc([a[0][0], a[1][1], a[2][2]]);
    }
    let q = m.trace() / 3.0;
    let d = [a[0][0] - q, a[1][1] - q, a[2][2] - q];
    let p2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + 2.0 * off;
    let p = (p2 / 6.0).sqrt();
    if p2 <= tol::CARDANO_DEGENERACY * scale * scale {
        return jacobi_sym3(m);
    }
    let mut b = *a;
    for (i, row) in b.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if i == j {
                *x -= q;
            }
            *x /= p;
        }
    }
    let r = det3(&b) / 2.0;
    if 1.0 - r * r <= tol::CARDANO_DEGENERACY {
        return jacobi_sym3(m);
    }
    let phi = r.clamp(-1.0, 1.0).acos() / 3.0;
    let l1 = q + 2.0 * p * phi.cos();
    let l3 = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
    let l2 = 3.0 * q - l1 - l3;
    sorted_desc([l1, l2, l3])
}

fn sorted_desc(mut v: [f64; 3]) -> [f64; 3] {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Cyclic Jacobi on a real symmetric 3x3 matrix.
pub fn jacobi_sym3(m: &SymMatrix3) -> [f64; 3] {
    let mut a = m.0;
    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        let off = (2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2])).sqrt();
        if off < tol::JACOBI_OFFDIAG {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            let apq = a[p][q];
            if apq == 0.0 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            // A <- J^t A J with the rotation living in the (p, q) plane.
            for k in 0..3 {
                let akp = a[k][p];
                let akq = a[k][q];
                a[k][p] = c * akp - s * akq;
                a[k][q] = s * akp + c * akq;
            }
            for k in 0..3 {
                let apk = a[p][k];
                let aqk = a[q][k];
                a[p][k] = c * apk - s * aqk;
                a[q][k] = s * apk + c * aqk;
            }
        }
    }
    sorted_desc([a[0][0], a[1][1], a[2][2]])
}

/// Eigen-decomposition of a Hermitian 4x4 matrix by cyclic complex Jacobi.
///
/// Returns eigenvalues sorted descending and the unitary whose columns are
/// the matching eigenvectors.
pub fn eigh_herm4(m: &CMatrix4) -> Result<([f64; 4], CMatrix4)> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let defect = m.hermiticity_defect();
    if defect > tol::HERMITIAN {
        return Err(Error::NotHermitian(defect));
    }
    let mut a = *m;
    let mut v = CMatrix4::identity();
    let mut converged = false;
    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        if offdiag_norm(&a) < tol::JACOBI_OFFDIAG {
            converged = true;
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a.0[p][q];
                let r = apq.norm();
                if r < 1e-300 {
                    continue;
                }
                let phase = apq / r; // e^{i phi}
                let app = a.0[p][p].re;
                let aqq = a.0[q][q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // J = D R with D = diag(.., 1 at p, e^{-i phi} at q, ..).
                let mut j = CMatrix4::identity();
                j.0[p][p] = C64::new(c, 0.0);
                j.0[p][q] = C64::new(s, 0.0);
                j.0[q][p] = phase.conj() * (-s);
                j.0[q][q] = phase.conj() * c;
                a = j.dagger() * a * j;
                v = v * j;
            }
        }
    }
    if !converged && offdiag_norm(&a) >= tol::JACOBI_OFFDIAG {
        return Err(Error::NoConvergence);
    }
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&x, &y| a.0[y][y].re.total_cmp(&a.0[x][x].re));
    let mut values = [0.0; 4];
    let mut vectors = CMatrix4::zeros();
    for (col, &src) in order.iter().enumerate() {
        values[col] = a.0[src][src].re;
        for row in 0..4 {
            vectors.0[row][col] = v.0[row][src];
        }
    }
    Ok((values, vectors))
}

/// Eigenvalues of a Hermitian 4x4 matrix, sorted descending.
pub fn eig_herm4(m: &CMatrix4) -> Result<[f64; 4]> {
    eigh_herm4(m).map(|(values, _)| values)
}

fn offdiag_norm(a: &CMatrix4) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                acc += a.0[i][j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Characteristic-polynomial residual `|det(m - lambda I)|` for a real
/// symmetric matrix, used to root-verify eigenvalues.
pub fn sym3_char_residual(m: &SymMatrix3, lambda: f64) -> f64 {
    let mut a = m.0;
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    det3(&a).abs()
}

/// `|det(m - lambda I)|` for a 4x4 complex matrix.
pub fn herm4_char_residual(m: &CMatrix4, lambda: f64) -> f64 {
    let mut a = *m;
    for i in 0..4 {
        a.0[i][i] -= lambda;
    }
    det4(&a).norm()
}

fn det4(m: &CMatrix4) -> C64 {
    // Laplace expansion along the first row.
    let mut acc = ZERO;
    for col in 0..4 {
        let mut minor = [[ZERO; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c == col {
                    continue;
                }
                minor[r - 1][cc] = m.0[r][c];
                cc += 1;
            }
        }
        let d = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1])
            - minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0])
            + minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        acc += m.0[0][col] * d * sign;
    }
    acc
}
