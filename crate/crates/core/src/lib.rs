//! Numerical toolkit for the linear canonical transform (LCT) and its
//! canonical convolution operators.
//!
//! The transform path is a chirp–FFT–chirp factorization backed by a
//! Bluestein scaled DFT, so spectra can be evaluated on arbitrary uniform
//! output grids in O(N log N). A slow trapezoidal quadrature of the defining
//! integral ([`lct::lct_oracle`]) is kept as an independent ground truth.
//!
//! On top of the transform sit the canonical convolution operators
//! ([`conv`]), executable verifiers for the convolution theorem, Young's
//! inequality and the operator algebra ([`theorems`]), and a spectral-division
//! solver for convolution equations ([`solver`]).
//!
//! The crate is `no_std` (alloc required); float math goes through `libm`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod conv;
pub mod error;
pub mod fft;
pub mod grid;
pub mod lct;
pub mod params;
pub mod signal;
pub mod solver;
pub mod theorems;

pub use error::{LctError, Result};
pub use grid::SampleGrid;
pub use params::LctParams;
pub use signal::{SampledSignal, Spectrum};

pub use num_complex::Complex64;

/// Complex phase factor `e^{j theta}`.
#[inline]
pub(crate) fn cis(theta: f64) -> Complex64 {
    Complex64::new(libm::cos(theta), libm::sin(theta))
}
