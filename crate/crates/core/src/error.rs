//! Error type shared across the crate.

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, LctError>;

/// Everything that can go wrong when validating parameters, grids, or
/// running a transform / convolution / solve.
#[derive(Debug, Clone, PartialEq)]
pub enum LctError {
    /// `|ad - bc - 1|` exceeded the unimodularity tolerance.
    DeterminantViolation { det: f64 },
    /// `|b|` below the minimum; the chirp-multiplication branch is out of scope.
    ZeroB { b: f64 },
    /// Grid spacing must be positive and finite.
    NonPositiveStep { step: f64 },
    /// Grids need at least two samples.
    GridTooSmall { count: usize },
    /// Sample vector length disagrees with the grid.
    LengthMismatch { expected: usize, got: usize },
    /// A sample value was NaN or infinite.
    NonFiniteSample { index: usize },
    /// The quadratic chirp advances more than pi per sample somewhere on the
    /// grid; the discretization would alias silently.
    GridTooCoarse { max_phase_step: f64 },
    /// Two signals must share the same step (and lattice, where stated).
    IncompatibleGrids { left_step: f64, right_step: f64 },
    /// Lp exponent outside `[1, inf]`.
    InvalidExponent { p: f64 },
    /// `min |Lambda(u)|` fell below the scale-aware threshold: the symbol is
    /// numerically non-invertible on the working band.
    NonInvertibleSymbol { min_abs: f64, threshold: f64 },
    /// `lambda = 0` with a spectrally null `g`: no symbol scale exists.
    DegenerateCase,
    /// The independent residual check after a solve exceeded the tolerance.
    ResidualTooLarge { residual: f64, tol: f64 },
}

impl fmt::Display for LctError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LctError::DeterminantViolation { det } => {
                write!(f, "determinant violation: ad - bc = {det}, expected 1")
            }
            LctError::ZeroB { b } => {
                write!(
                    f,
                    "parameter b = {b} is too close to zero (b = 0 case unsupported)"
                )
            }
            LctError::NonPositiveStep { step } => {
                write!(f, "grid step must be positive and finite, got {step}")
            }
            LctError::GridTooSmall { count } => {
                write!(f, "grid needs at least 2 samples, got {count}")
            }
            LctError::LengthMismatch { expected, got } => {
                write!(
                    f,
                    "value vector length {got} does not match grid count {expected}"
                )
            }
            LctError::NonFiniteSample { index } => {
                write!(f, "non-finite sample at index {index}")
            }
            LctError::GridTooCoarse { max_phase_step } => {
                write!(
                    f,
                    "grid too coarse: chirp phase advances {max_phase_step:.3} rad per sample (limit pi)"
                )
            }
            LctError::IncompatibleGrids {
                left_step,
                right_step,
            } => {
                write!(
                    f,
                    "incompatible grids: steps {left_step} and {right_step} differ"
                )
            }
            LctError::InvalidExponent { p } => {
                write!(f, "invalid Lp exponent {p}; need 1 <= p <= inf")
            }
            LctError::NonInvertibleSymbol { min_abs, threshold } => {
                write!(
                    f,
                    "non-invertible symbol: min |Lambda| = {min_abs:.3e} below threshold {threshold:.3e}"
                )
            }
            LctError::DegenerateCase => {
                write!(
                    f,
                    "degenerate case: lambda = 0 and the spectrum of g is null"
                )
            }
            LctError::ResidualTooLarge { residual, tol } => {
                write!(f, "residual {residual:.3e} exceeds tolerance {tol:.3e}")
            }
        }
    }
}

impl core::error::Error for LctError {}
