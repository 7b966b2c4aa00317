//! Numerical tolerances shared by the library, its tests and the validation
//! report. Every threshold lives here.

/// Entrywise symmetry slack for [`crate::qmat::SymMatrix3`].
pub const SYMMETRY: f64 = 1e-12;
/// Hermiticity slack for density matrices and `eig_herm4` input.
pub const HERMITIAN: f64 = 1e-10;
/// Unit-trace slack for density matrices.
pub const TRACE: f64 = 1e-10;
/// Most negative eigenvalue admitted for a density matrix.
pub const POSITIVITY: f64 = 1e-9;
/// Largest off-X entry magnitude tolerated by `as_x_state`.
pub const X_STATE: f64 = 1e-10;
/// Slack on the X-state block positivity conditions.
pub const X_BLOCK: f64 = 1e-12;
/// `sum E^dag E = I` slack.
pub const CPTP: f64 = 1e-10;
/// Unit-norm slack for measurement directions.
pub const UNIT_NORM: f64 = 1e-12;

/// Below this Bloch-vector norm the local vector is treated as zero.
pub const X_NORM_EPS: f64 = 1e-9;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_OFFDIAG: f64 = 1e-12;
/// Sweep cap for the Jacobi solvers.
pub const JACOBI_MAX_SWEEPS: usize = 64;
/// The closed-form 3x3 solver hands over to Jacobi when its discriminant
/// (scaled spread of the eigenvalues) falls within this distance of zero.
pub const CARDANO_DEGENERACY: f64 = 1e-14;

/// Fibonacci-lattice size for the sphere search.
pub const LATTICE_POINTS: usize = 2048;
/// Refinement rounds after the lattice scan.
pub const REFINE_ROUNDS: usize = 60;
/// Golden-section evaluations per line search.
pub const GOLDEN_EVALS: usize = 48;
/// Default angular tolerance handed to the oracles.
pub const ORACLE_TOL: f64 = 1e-10;
/// Required oracle vs closed-form agreement.
pub const ORACLE_AGREEMENT: f64 = 1e-6;

/// Engine-vs-law residual under which a law is reported as verified.
pub const LAW_RESIDUAL: f64 = 1e-9;
/// Local-unitary invariance slack.
pub const LOCAL_UNITARY: f64 = 1e-9;
/// Slack for monotone-decay checks on trajectories.
pub const MONOTONE_SLACK: f64 = 1e-10;

/// Halving the RK4 step must change the decoherence function by less than this.
pub const ODE_HALVING: f64 = 1e-8;
/// Smallest RK4 step tried before giving up.
pub const ODE_MIN_STEP: f64 = 1e-6;
/// Largest admitted |p(t)| for a decoherence function.
pub const DECOHERENCE_BOUND: f64 = 1.0 + 1e-9;
/// Slack on the ordering `0 <= GD <= MIN <= 1/2`.
pub const ORDERING: f64 = 1e-12;
/// Bloch decompose / reconstruct round-trip slack.
pub const ROUND_TRIP: f64 = 1e-12;
