//! Default numerical tolerances, stated at f64 scale.
//!
//! Matrix entries in this crate are at most of order d^2 with benign
//! conditioning, so absolute tolerances suffice. Generic code that must
//! also run at lower precision widens these with `scalar::scaled_tol`.

/// Jacobi convergence: off-diagonal norm target relative to the diagonal.
pub const EIG_CONVERGENCE: f64 = 1e-12;

/// Downstream numeric comparisons (identity residuals, fixtures).
pub const COMPARE: f64 = 1e-9;

/// Largest imaginary part tolerated when a trace is materialized as real.
pub const ENTRY_IMAG: f64 = 1e-10;

/// Hermiticity defect allowed in a density matrix.
pub const HERMITICITY: f64 = 1e-10;

/// Trace-one defect allowed in a density matrix.
pub const TRACE: f64 = 1e-10;

/// Most negative eigenvalue tolerated in a density matrix.
pub const PSD_FLOOR: f64 = -1e-8;

/// Slack on the purity range check.
pub const PURITY_SLACK: f64 = 1e-10;

/// A state counts as pure when its purity exceeds one minus this.
pub const PURITY_GATE: f64 = 1e-8;

/// Margin above which the entanglement detector reports a detection.
pub const DETECTION: f64 = 1e-9;

/// Bisection resolution of the white-noise scanner.
pub const NOISE_RESOLUTION: f64 = 1e-6;
