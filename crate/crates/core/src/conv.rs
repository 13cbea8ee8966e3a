//! Canonical convolution operators.
//!
//! All operators here are discretized on the exact lattice: convolving
//! samples on grids starting at `f0` and `g0` (equal step) produces
//! `count_f + count_g - 1` samples starting at `f0 + g0 + shift`, where
//! `shift` is the operator's built-in argument offset (`-b`, `+b`, or 0).
//! Carrying the offset in the output grid instead of resampling keeps the
//! discrete convolution theorem, commutativity, and associativity exact at
//! the floating-point level for every `b`, including `b` irrational relative
//! to the step. Use [`SampledSignal::restricted_to`] or
//! [`SampledSignal::resample_linear`] to re-align results to an input window.
//!
//! The quadrature is the plain Riemann sum `dt * sum`, matching the
//! transform side, so identities checked through `lct_forward` hold without
//! quadrature mismatch.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::cis;
use crate::error::{LctError, Result};
use crate::grid::SampleGrid;
use crate::lct::{chirp_guard, induced_grid, kernel_scale, lct_forward_on, lct_inverse};
use crate::params::LctParams;
use crate::signal::{SampledSignal, Spectrum};

/// How to evaluate the new canonical convolution.
///
/// `DirectQuadrature` sums the defining integral termwise and doubles as the
/// brute-force oracle; the two chirp paths are the O(N log N) factorizations
/// through a classical convolution, differing in which factor carries the
/// linear phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realization {
    DirectQuadrature,
    ChirpPathOne,
    ChirpPathTwo,
}

/// Output grid of a lattice convolution with argument offset `shift`.
fn conv_grid(f: &SampleGrid, g: &SampleGrid, shift: f64) -> Result<SampleGrid> {
    if !f.same_step(g) {
        return Err(LctError::IncompatibleGrids {
            left_step: f.step(),
            right_step: g.step(),
        });
    }
    SampleGrid::new(
        f.start() + g.start() + shift,
        f.step(),
        f.count() + g.count() - 1,
    )
}

fn guard_inputs(params: &LctParams, f: &SampleGrid, g_shifted: &SampleGrid) -> Result<()> {
    let rate = params.a() / params.b();
    chirp_guard(rate, f)?;
    chirp_guard(rate, g_shifted)
}

/// Shared chirp-multiply / FFT-convolve / chirp-multiply skeleton.
///
/// Computes `scale * sum_{n+m=k} f_n e^{j(fq t_n^2 + fl t_n)}
/// g_m e^{j(gq s_m^2 + gl s_m)} * e^{j(oq t_k^2 + ol t_k)}` on the shifted
/// output lattice, with `s_m` the shifted g coordinate.
#[allow(clippy::too_many_arguments)]
fn chirp_convolve(
    f: &SampledSignal,
    g: &SampledSignal,
    shift: f64,
    (fq, fl): (f64, f64),
    (gq, gl): (f64, f64),
    (oq, ol): (f64, f64),
    scale: Complex64,
) -> Result<SampledSignal> {
    let out = conv_grid(f.grid(), g.grid(), shift)?;

    let pre_f: Vec<Complex64> = f
        .values()
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let t = f.grid().point(n);
            v * cis(fq * t * t + fl * t)
        })
        .collect();
    let g0 = g.grid().start() + shift;
    let pre_g: Vec<Complex64> = g
        .values()
        .iter()
        .enumerate()
        .map(|(m, v)| {
            let s = g0 + m as f64 * g.grid().step();
            v * cis(gq * s * s + gl * s)
        })
        .collect();

    let conv = crate::fft::linear_convolve(&pre_f, &pre_g);
    let values: Vec<Complex64> = conv
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let t = out.point(k);
            scale * cis(oq * t * t + ol * t) * v
        })
        .collect();
    SampledSignal::new(out, values)
}

/// Termwise summation of a lattice convolution with the kernel phase given
/// in the symmetric two-point form `phase(tau, y)`.
fn direct_convolve(
    f: &SampledSignal,
    g: &SampledSignal,
    shift: f64,
    scale: Complex64,
    phase: impl Fn(f64, f64) -> f64,
) -> Result<SampledSignal> {
    let out = conv_grid(f.grid(), g.grid(), shift)?;
    let (n_f, n_g) = (f.len(), g.len());
    let mut values = vec![Complex64::new(0.0, 0.0); out.count()];
    for (k, slot) in values.iter_mut().enumerate() {
        let lo = k.saturating_sub(n_g - 1);
        let hi = k.min(n_f - 1);
        let mut acc = Complex64::new(0.0, 0.0);
        for n in lo..=hi {
            let m = k - n;
            let tau = f.grid().point(n);
            let y = g.grid().point(m);
            acc += f.values()[n] * g.values()[m] * cis(phase(tau, y));
        }
        *slot = scale * acc;
    }
    SampledSignal::new(out, values)
}

/// The new canonical convolution `f (x)_A g`.
///
/// All three realizations produce the same lattice function; the chirp paths
/// are algebraically identical to the direct sum termwise, so agreement is
/// limited only by FFT rounding.
pub fn convolve_new(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
    how: Realization,
) -> Result<SampledSignal> {
    let (a, b) = (params.a(), params.b());
    let shift = -b;
    let shifted = SampleGrid::new(g.grid().start() + shift, g.grid().step(), g.grid().count())?;
    guard_inputs(params, f.grid(), &shifted)?;

    let half = a / (2.0 * b);
    let scale = kernel_scale(b) * f.grid().step();
    match how {
        Realization::DirectQuadrature => {
            // kernel in the symmetric two-point form: a(tau + y - b) - (a/b) tau y
            let a_over_b = a / b;
            direct_convolve(f, g, shift, scale, |tau, y| {
                a * (tau + y - b) - a_over_b * tau * y
            })
        }
        Realization::ChirpPathOne => {
            chirp_convolve(f, g, shift, (half, 0.0), (half, a), (-half, 0.0), scale)
        }
        Realization::ChirpPathTwo => {
            chirp_convolve(f, g, shift, (half, -a), (half, 0.0), (-half, a), scale)
        }
    }
}

/// The dual canonical convolution `f (.)_A g` (b-shift and linear phases
/// negated), chirp realization.
pub fn convolve_new_dual(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<SampledSignal> {
    let (a, b) = (params.a(), params.b());
    let shifted = SampleGrid::new(g.grid().start() + b, g.grid().step(), g.grid().count())?;
    guard_inputs(params, f.grid(), &shifted)?;
    let half = a / (2.0 * b);
    let scale = kernel_scale(b) * f.grid().step();
    chirp_convolve(f, g, b, (half, 0.0), (half, -a), (-half, 0.0), scale)
}

/// Dual convolution by direct quadrature of the defining integral.
pub fn convolve_new_dual_quadrature(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<SampledSignal> {
    let (a, b) = (params.a(), params.b());
    let shifted = SampleGrid::new(g.grid().start() + b, g.grid().step(), g.grid().count())?;
    guard_inputs(params, f.grid(), &shifted)?;
    let scale = kernel_scale(b) * f.grid().step();
    let a_over_b = a / b;
    direct_convolve(f, g, b, scale, |tau, y| {
        -a * (tau + y + b) - a_over_b * tau * y
    })
}

/// Deng's canonical convolution: chirp-sandwiched classical convolution with
/// the `sqrt(1/(j 2 pi b))` prefactor, satisfying
/// `L_A(f theta g) = L_A f * L_A g * e^{-j(d/2b)u^2}`.
///
/// At `a = 0` this is the classical convolution scaled by the prefactor.
pub fn convolve_deng(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<SampledSignal> {
    let (a, b) = (params.a(), params.b());
    guard_inputs(params, f.grid(), g.grid())?;
    let half = a / (2.0 * b);
    let scale = kernel_scale(b) * f.grid().step();
    chirp_convolve(f, g, 0.0, (half, 0.0), (half, 0.0), (-half, 0.0), scale)
}

/// Shi's canonical convolution
/// `(f theta_M g)(t) = int f(tau) g(t - tau) e^{-j (a/b) tau (t - tau/2)} dtau`
/// (no prefactor). At `a = 0` this is the classical convolution.
pub fn convolve_shi(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<SampledSignal> {
    let (a, b) = (params.a(), params.b());
    guard_inputs(params, f.grid(), g.grid())?;
    let half = a / (2.0 * b);
    let scale = Complex64::new(f.grid().step(), 0.0);
    chirp_convolve(f, g, 0.0, (0.0, 0.0), (half, 0.0), (-half, 0.0), scale)
}

/// Pei-Ding spectral-product convolution `L_{A^{-1}}(L_A f * L_A g)`.
///
/// Computed entirely through the transform side (never the triple integral):
/// both spectra are evaluated on the grid induced by the classical-convolution
/// output window, multiplied pointwise, and transformed back.
pub fn convolve_spectral(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<SampledSignal> {
    let out = conv_grid(f.grid(), g.grid(), 0.0)?;
    let u_grid = induced_grid(&out, params);
    let ff = lct_forward_on(f, params, &u_grid)?;
    let gg = lct_forward_on(g, params, &u_grid)?;
    let product: Vec<Complex64> = ff
        .values()
        .iter()
        .zip(gg.values())
        .map(|(x, y)| x * y)
        .collect();
    let spectrum = Spectrum::new(u_grid, product, *params)?;
    lct_inverse(&spectrum, &out)
}
