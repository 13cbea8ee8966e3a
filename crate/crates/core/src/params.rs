//! Transform parameters: the unimodular matrix `A = (a, b, c, d)`.

use crate::error::{LctError, Result};

/// Unimodularity tolerance used at construction.
pub const DET_TOL: f64 = 1e-12;
/// Minimum admissible `|b|`; below this the transform degenerates into a
/// chirp multiplication, which this crate does not implement.
pub const MIN_B: f64 = 1e-12;

/// Parameter matrix of the linear canonical transform.
///
/// Invariants enforced at construction: `|ad - bc - 1| <= 1e-12` and
/// `|b| >= 1e-12`. Fields are read-only afterwards, so every `LctParams`
/// in circulation is valid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LctParams {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl LctParams {
    /// Validate and build a parameter matrix.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !det.is_finite() || libm::fabs(det - 1.0) > DET_TOL {
            return Err(LctError::DeterminantViolation { det });
        }
        if libm::fabs(b) < MIN_B {
            return Err(LctError::ZeroB { b });
        }
        Ok(Self { a, b, c, d })
    }

    /// The Fourier case `(0, 1, -1, 0)`.
    pub fn fourier() -> Self {
        Self {
            a: 0.0,
            b: 1.0,
            c: -1.0,
            d: 0.0,
        }
    }

    /// Rotation matrix `(cos α, sin α, -sin α, cos α)`; fails when
    /// `sin α` is numerically zero.
    pub fn rotation(alpha: f64) -> Result<Self> {
        Self::new(
            libm::cos(alpha),
            libm::sin(alpha),
            -libm::sin(alpha),
            libm::cos(alpha),
        )
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    #[inline]
    pub fn d(&self) -> f64 {
        self.d
    }

    /// `ad - bc` as computed in floating point.
    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix inverse `(d, -b, -c, a)`.
    ///
    /// Closed under inversion: the determinant is the same float expression,
    /// so no re-validation is needed, and `inverse(inverse(A)) == A` exactly.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }
}
