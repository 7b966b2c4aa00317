//! Random states and local unitaries for property checks and the validation
//! report.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::qmat::{CMatrix, CMatrix2, CMatrix4, C64};
use crate::states::TwoQubitState;

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Hilbert–Schmidt random two-qubit state: `G G^dag / tr(G G^dag)` with `G`
/// a 4x4 matrix of independent standard complex Gaussians.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    let mut g = CMatrix4::zeros();
    g.0.iter_mut().flatten().for_each(|z| *z = complex_gaussian(rng));
    let w = g * g.dagger();
    let tr = w.trace().re;
    let mut rho = w.scale_real(1.0 / tr);
    // exact Hermitian symmetry before validation
    for i in 0..4 {
        rho.0[i][i].im = 0.0;
        for j in (i + 1)..4 {
            rho.0[j][i] = rho.0[i][j].conj();
        }
    }
    TwoQubitState::new(rho).expect("Ginibre construction is a valid state")
}

/// Haar-random 2x2 unitary.
pub fn random_unitary2<R: Rng + ?Sized>(rng: &mut R) -> CMatrix2 {
    let a = complex_gaussian(rng);
    let b = complex_gaussian(rng);
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / n, b / n);
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    CMatrix([[a * phase, -b.conj() * phase], [b * phase, a.conj() * phase]])
}

/// Uniform unit vector on the sphere.
pub fn random_direction<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-6 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}
