//! Two-qubit quantum-correlation dynamics.
//!
//! Computes measurement-induced nonlocality (MIN) and geometric discord (GD)
//! of two-qubit density matrices, both from their closed forms in terms of
//! the Bloch correlation matrix and from brute-force searches over local
//! projective measurements. States are evolved through local Kraus channels
//! (depolarizing, dephasing, generalized amplitude damping) under Markovian
//! rate schedules, and through non-Markovian amplitude and dephasing noise
//! driven by a Lorentzian environment. Closed-form decay laws are evaluated
//! alongside the Kraus engine and their residuals reported.
//!
//! Module map:
//!
//! - [`qmat`]: fixed-size complex matrices and small eigen-solvers.
//! - [`states`]: density matrices, Bloch form, state families, X states.
//! - [`correlations`]: closed forms and optimization oracles for MIN / GD.
//! - [`channels`]: qubit Kraus channels and their local two-qubit action.
//! - [`markov`]: rate schedules, decay laws, trajectories, figure grids.
//! - [`nonmarkov`]: Lorentzian kernels, decoherence functions, trajectories.
//! - [`validate`]: the law / invariant report behind `qcorr validate`.
//! - [`cli`]: command-line front end.

#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

pub mod channels;
pub mod cli;
pub mod correlations;
pub mod csv;
pub mod markov;
pub mod nonmarkov;
pub mod qmat;
pub mod random;
pub mod states;
pub mod tol;
pub mod validate;

use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("matrix is not symmetric (deviation {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("state is not an X state (off-X entry of magnitude {0:e})")]
    NotXState(f64),

    #[error("X-state elements are inconsistent: {0}")]
    InvalidXState(&'static str),

    #[error("parameter `{name}` = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("Kraus set is not trace preserving (deviation {0:e})")]
    NotTracePreserving(f64),

    #[error("a qubit channel holds at most 4 Kraus operators, got {0}")]
    TooManyKraus(usize),

    #[error("law `{0}` needs the mixing parameter p")]
    MissingMixing(&'static str),

    #[error("time grid must be ascending and start at 0")]
    BadTimeGrid,

    #[error("step halving did not reach {tol:e} before the minimum step {min_step:e}")]
    StepSize { tol: f64, min_step: f64 },

    #[error("Jacobi iteration did not converge")]
    NoConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_unit_interval(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            lo: 0.0,
            hi: 1.0,
        })
    }
}
