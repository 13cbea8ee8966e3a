//! Sampled complex-valued signals and spectra.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{LctError, Result};
use crate::grid::SampleGrid;
use crate::params::LctParams;

fn check_values(grid: &SampleGrid, values: &[Complex64]) -> Result<()> {
    if values.len() != grid.count() {
        return Err(LctError::LengthMismatch {
            expected: grid.count(),
            got: values.len(),
        });
    }
    for (index, v) in values.iter().enumerate() {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(LctError::NonFiniteSample { index });
        }
    }
    Ok(())
}

/// Uniformly sampled complex signal on a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: SampleGrid,
    values: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(grid: SampleGrid, values: Vec<Complex64>) -> Result<Self> {
        check_values(&grid, &values)?;
        Ok(Self { grid, values })
    }

    /// Sample a function on the grid.
    pub fn from_fn(grid: SampleGrid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values: Vec<Complex64> = grid.points().map(f).collect();
        Self::new(grid, values)
    }

    pub fn zeros(grid: SampleGrid) -> Self {
        let values = vec![Complex64::new(0.0, 0.0); grid.count()];
        Self { grid, values }
    }

    #[inline]
    pub fn grid(&self) -> &SampleGrid {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise `alpha * self`.
    pub fn scaled(&self, alpha: Complex64) -> Self {
        let values = self.values.iter().map(|v| alpha * v).collect();
        Self {
            grid: self.grid,
            values,
        }
    }

    /// Pointwise sum; grids must match exactly.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(LctError::IncompatibleGrids {
                left_step: self.grid.step(),
                right_step: other.grid.step(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            grid: self.grid,
            values,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(Complex64::new(-1.0, 0.0)))
    }

    /// Extract the samples of `target` from this signal. The target must sit
    /// on the same lattice (equal step, integral offset) and inside the span.
    pub fn restricted_to(&self, target: &SampleGrid) -> Result<Self> {
        let offset = self
            .grid
            .lattice_offset(target)
            .ok_or(LctError::IncompatibleGrids {
                left_step: self.grid.step(),
                right_step: target.step(),
            })?;
        if offset < 0 || offset as usize + target.count() > self.grid.count() {
            return Err(LctError::LengthMismatch {
                expected: target.count(),
                got: self.grid.count(),
            });
        }
        let lo = offset as usize;
        let values = self.values[lo..lo + target.count()].to_vec();
        Ok(Self {
            grid: *target,
            values,
        })
    }

    /// Embed this signal into a larger lattice-aligned grid, zero outside.
    pub fn extended_to(&self, target: &SampleGrid) -> Result<Self> {
        let offset = target
            .lattice_offset(&self.grid)
            .ok_or(LctError::IncompatibleGrids {
                left_step: self.grid.step(),
                right_step: target.step(),
            })?;
        if offset < 0 || offset as usize + self.grid.count() > target.count() {
            return Err(LctError::LengthMismatch {
                expected: target.count(),
                got: self.grid.count(),
            });
        }
        let mut values = vec![Complex64::new(0.0, 0.0); target.count()];
        let lo = offset as usize;
        values[lo..lo + self.len()].copy_from_slice(&self.values);
        Ok(Self {
            grid: *target,
            values,
        })
    }

    /// Linear interpolation onto an arbitrary grid, zero outside the span.
    /// Interpolation error is O(step^2); prefer lattice-aligned grids where
    /// exactness matters.
    pub fn resample_linear(&self, target: &SampleGrid) -> Self {
        let n = self.len();
        let values = target
            .points()
            .map(|t| {
                let x = (t - self.grid.start()) / self.grid.step();
                if x < 0.0 || x > (n - 1) as f64 {
                    return Complex64::new(0.0, 0.0);
                }
                let k = (libm::floor(x) as usize).min(n - 2);
                let w = x - k as f64;
                self.values[k] * (1.0 - w) + self.values[k + 1] * w
            })
            .collect();
        Self {
            grid: *target,
            values,
        }
    }

    /// Largest sample magnitude.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }
}

/// Sampled LCT-domain function together with the parameters that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: SampleGrid,
    values: Vec<Complex64>,
    params: LctParams,
}

impl Spectrum {
    pub fn new(grid: SampleGrid, values: Vec<Complex64>, params: LctParams) -> Result<Self> {
        check_values(&grid, &values)?;
        Ok(Self {
            grid,
            values,
            params,
        })
    }

    /// Internal constructor for values known finite by construction
    /// (quadrature of finite inputs with unimodular kernels).
    pub(crate) fn from_parts_unchecked(
        grid: SampleGrid,
        values: Vec<Complex64>,
        params: LctParams,
    ) -> Self {
        debug_assert_eq!(values.len(), grid.count());
        Self {
            grid,
            values,
            params,
        }
    }

    #[inline]
    pub fn grid(&self) -> &SampleGrid {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    #[inline]
    pub fn params(&self) -> &LctParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// Pointwise map of the values, keeping grid and params.
    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Self {
        let values = self
            .grid
            .points()
            .zip(&self.values)
            .map(|(u, v)| f(u, *v))
            .collect();
        Self {
            grid: self.grid,
            values,
            params: self.params,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> SampleGrid {
        SampleGrid::new(0.0, 0.5, 8).unwrap()
    }

    #[test]
    fn domain_types_are_send_sync() {
        // everything is plain owned data; concurrent use needs no locking
        fn check<T: Send + Sync>() {}
        check::<SampleGrid>();
        check::<SampledSignal>();
        check::<Spectrum>();
        check::<LctParams>();
        check::<crate::LctError>();
    }

    #[test]
    fn rejects_length_mismatch() {
        let err = SampledSignal::new(grid(), vec![Complex64::new(1.0, 0.0); 3]);
        assert!(matches!(err, Err(LctError::LengthMismatch { .. })));
    }

    #[test]
    fn rejects_non_finite() {
        let mut v = vec![Complex64::new(0.0, 0.0); 8];
        v[5] = Complex64::new(f64::NAN, 0.0);
        let err = SampledSignal::new(grid(), v);
        assert!(matches!(err, Err(LctError::NonFiniteSample { index: 5 })));
    }

    #[test]
    fn restrict_and_extend_round_trip() {
        let big = SampleGrid::new(-2.0, 0.5, 16).unwrap();
        let s = SampledSignal::from_fn(grid(), |t| Complex64::new(t, -t)).unwrap();
        let ext = s.extended_to(&big).unwrap();
        assert_eq!(ext.values()[0], Complex64::new(0.0, 0.0));
        let back = ext.restricted_to(&grid()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn linear_resample_is_exact_on_lines() {
        let s = SampledSignal::from_fn(grid(), |t| Complex64::new(2.0 * t + 1.0, 0.0)).unwrap();
        let shifted = SampleGrid::new(0.25, 0.5, 7).unwrap();
        let r = s.resample_linear(&shifted);
        for (t, v) in shifted.points().zip(r.values()) {
            assert!((v.re - (2.0 * t + 1.0)).abs() < 1e-12);
        }
    }
}
