//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_complex::Complex64;

/// Solves `p' = -int_0^t f(t - s) p(s) ds`, `p(0) = 1`, by the trapezoid
/// rule on a uniform step `h` (implicit in the newest sample). Returns the
/// samples at `0, h, 2h, ...` up to `t_max`.
pub fn volterra_trapezoid(f: impl Fn(f64) -> Complex64, t_max: f64, h: f64) -> Vec<Complex64> {
    let n = (t_max / h).round() as usize;
    let kern: Vec<Complex64> = (0..=n).map(|k| f(k as f64 * h)).collect();
    let mut p = vec![Complex64::new(1.0, 0.0)];
    let mut integral = vec![Complex64::new(0.0, 0.0)];
    for m in 1..=n {
        // trapezoid for int_0^{t_m} f(t_m - s) p(s) ds without the p_m term
        let mut known = kern[m] * p[0] * 0.5;
        for j in 1..m {
            known += kern[m - j] * p[j];
        }
        known *= h;
        let self_weight = 0.5 * h * kern[0];
        let prev = p[m - 1];
        let rhs = prev - (integral[m - 1] + known) * (0.5 * h);
        let pm = rhs / (Complex64::new(1.0, 0.0) + self_weight * (0.5 * h));
        integral.push(known + self_weight * pm);
        p.push(pm);
    }
    p
}

/// Resonant solution `e^{-lt/2} [cos(w t/2) + (l/w) sin(w t/2)]`,
/// `w = sqrt(2 g0 l - l^2)`, valid for `l < 2 g0`.
pub fn resonant_p(gamma0: f64, lambda: f64, t: f64) -> f64 {
    let w = (2.0 * gamma0 * lambda - lambda * lambda).sqrt();
    (-0.5 * lambda * t).exp() * ((0.5 * w * t).cos() + lambda / w * (0.5 * w * t).sin())
}

/// First sign change of `g` on `[a, b]`, scanned with `samples` points and
/// bisected to `tol`.
pub fn first_root(g: impl Fn(f64) -> f64, a: f64, b: f64, samples: usize, tol: f64) -> Option<f64> {
    let mut lo = a;
    let glo = g(a);
    for k in 1..=samples {
        let t = a + (b - a) * k as f64 / samples as f64;
        if g(t).signum() != glo.signum() {
            let mut hi = t;
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if g(mid).signum() == glo.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Some(0.5 * (lo + hi));
        }
        lo = t;
    }
    None
}
