//! Uniform sampling grids for the time and transform domains.

use crate::error::{LctError, Result};

/// Tolerance for deciding whether two grids share a step, and whether an
/// offset between two grids is an integral number of samples.
pub const GRID_TOL: f64 = 1e-12;

/// Uniform grid `point(k) = start + k * step`, `0 <= k < count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    start: f64,
    step: f64,
    count: usize,
}

impl SampleGrid {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(LctError::NonPositiveStep { step });
        }
        if count < 2 {
            return Err(LctError::GridTooSmall { count });
        }
        if !start.is_finite() {
            return Err(LctError::NonFiniteSample { index: 0 });
        }
        Ok(Self { start, step, count })
    }

    /// Grid symmetric about 0 in the half-open convention `[-half, half)`:
    /// `count` samples with `step = 2 * half / count`, so `t = 0` falls on
    /// the sample at index `count / 2` when `count` is even.
    pub fn symmetric(half_width: f64, count: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(LctError::NonPositiveStep { step: half_width });
        }
        let step = 2.0 * half_width / count as f64;
        Self::new(-half_width, step, count)
    }

    #[inline]
    pub fn start(&self) -> f64 {
        self.start
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.step
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    /// `start + k * step`, exactly reproducible.
    #[inline]
    pub fn point(&self, k: usize) -> f64 {
        self.start + k as f64 * self.step
    }

    /// Last grid point.
    pub fn end(&self) -> f64 {
        self.point(self.count - 1)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.point(k))
    }

    /// Largest `|t|` over the grid; drives the chirp aliasing guard.
    pub fn max_abs(&self) -> f64 {
        libm::fabs(self.start).max(libm::fabs(self.end()))
    }

    /// Steps equal within [`GRID_TOL`].
    pub fn same_step(&self, other: &Self) -> bool {
        libm::fabs(self.step - other.step) <= GRID_TOL
    }

    /// Offset of `other.start` from this lattice, in samples. Returns the
    /// nearest integer index when the offset is integral within tolerance.
    pub fn lattice_offset(&self, other: &Self) -> Option<i64> {
        if !self.same_step(other) {
            return None;
        }
        let shift = (other.start - self.start) / self.step;
        let rounded = libm::round(shift);
        if libm::fabs(shift - rounded) <= 1e-9 {
            Some(rounded as i64)
        } else {
            None
        }
    }
}
