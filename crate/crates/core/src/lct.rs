//! The discrete linear canonical transform.
//!
//! `lct_forward` factors the kernel into chirp-multiply, scaled DFT,
//! chirp-multiply. With grid offsets folded into the chirps the factorization
//! is exact for any uniform input and output grid:
//!
//! ```text
//! u t = u0*t  +  (m du)*t0  +  (m du)(n dt)
//! ```
//!
//! so the cross term becomes the Bluestein kernel `e^{-j alpha m n}` with
//! `alpha = du dt / b`. The quadrature is the plain Riemann sum `dt * sum`,
//! which makes the forward/inverse pair on the induced grid an exact DFT
//! identity. `lct_oracle` is the independent ground truth: a direct
//! trapezoidal summation of the defining integral, sharing no code with the
//! fast path.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::cis;
use crate::error::{LctError, Result};
use crate::fft::scaled_dft;
use crate::grid::SampleGrid;
use crate::params::LctParams;
use crate::signal::{SampledSignal, Spectrum};

/// Principal branch of `sqrt(1 / (j 2 pi b))`:
/// `(1 / sqrt(2 pi |b|)) e^{-j sign(b) pi / 4}`.
///
/// This convention makes `A = (0, 1, -1, 0)` equal to `e^{-j pi/4}` times the
/// unitary Fourier transform.
pub fn kernel_scale(b: f64) -> Complex64 {
    let mag = 1.0 / libm::sqrt(2.0 * PI * libm::fabs(b));
    let phase = -0.25 * PI * if b < 0.0 { -1.0 } else { 1.0 };
    mag * cis(phase)
}

/// Output grid induced by an `N`-point time grid: `du = 2 pi |b| / (N dt)`,
/// centered about zero in the same half-open convention as
/// [`SampleGrid::symmetric`] (`u0 = -floor(N/2) du`).
pub fn induced_grid(time: &SampleGrid, params: &LctParams) -> SampleGrid {
    let n = time.count();
    let du = 2.0 * PI * libm::fabs(params.b()) / (n as f64 * time.step());
    let start = -((n / 2) as f64) * du;
    SampleGrid::new(start, du, n).expect("induced grid is valid by construction")
}

/// Aliasing guard: the input chirp `e^{j (a/2b) t^2}` must not advance more
/// than pi per sample anywhere on the grid.
pub(crate) fn chirp_guard(chirp_rate: f64, grid: &SampleGrid) -> Result<()> {
    let max_phase_step = libm::fabs(chirp_rate) * grid.max_abs() * grid.step();
    if max_phase_step > PI {
        Err(LctError::GridTooCoarse { max_phase_step })
    } else {
        Ok(())
    }
}

/// Chirp - scaled DFT - chirp evaluation of the transform with parameters
/// `(a, b, d)` from samples on `time` onto `out`. Plain Riemann quadrature.
fn transform_values(
    values: &[Complex64],
    time: &SampleGrid,
    a: f64,
    b: f64,
    d: f64,
    out: &SampleGrid,
) -> Vec<Complex64> {
    let half_ab = a / (2.0 * b);
    let u0 = out.start();
    let pre: Vec<Complex64> = values
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let t = time.point(n);
            v * cis(half_ab * t * t - u0 * t / b)
        })
        .collect();

    let alpha = out.step() * time.step() / b;
    let s = scaled_dft(&pre, alpha, out.count());

    let scale = kernel_scale(b) * time.step();
    let half_db = d / (2.0 * b);
    let t0 = time.start();
    s.iter()
        .enumerate()
        .map(|(m, v)| {
            let u = out.point(m);
            scale * cis(half_db * u * u - (m as f64) * out.step() * t0 / b) * v
        })
        .collect()
}

/// Forward LCT onto the induced grid.
pub fn lct_forward(f: &SampledSignal, params: &LctParams) -> Result<Spectrum> {
    lct_forward_on(f, params, &induced_grid(f.grid(), params))
}

/// Forward LCT evaluated on an arbitrary uniform output grid.
pub fn lct_forward_on(
    f: &SampledSignal,
    params: &LctParams,
    u_grid: &SampleGrid,
) -> Result<Spectrum> {
    chirp_guard(params.a() / params.b(), f.grid())?;
    let values = transform_values(
        f.values(),
        f.grid(),
        params.a(),
        params.b(),
        params.d(),
        u_grid,
    );
    Spectrum::new(*u_grid, values, *params)
}

/// Inverse LCT: the forward machine run with `A^{-1} = (d, -b, -c, a)`,
/// evaluated on `target`.
///
/// No chirp guard here: a spectrum produced by `lct_forward` carries the
/// quadratic phase `e^{j (d/2b) u^2}` in its values, which cancels the
/// inverse kernel's chirp exactly, so the raw-signal guard criterion does
/// not apply. On the induced grid the round trip is an exact DFT identity.
pub fn lct_inverse(spectrum: &Spectrum, target: &SampleGrid) -> Result<SampledSignal> {
    let inv = spectrum.params().inverse();
    let values = transform_values(
        spectrum.values(),
        spectrum.grid(),
        inv.a(),
        inv.b(),
        inv.d(),
        target,
    );
    SampledSignal::new(*target, values)
}

/// Ground-truth transform: direct trapezoidal quadrature of the defining
/// integral at each requested `u`, O(N*M), independent of the FFT path.
/// The signal is taken as zero outside its grid.
pub fn lct_oracle(f: &SampledSignal, params: &LctParams, u_grid: &SampleGrid) -> Spectrum {
    let (a, b, d) = (params.a(), params.b(), params.d());
    let half_ab = a / (2.0 * b);
    let half_db = d / (2.0 * b);
    let scale = kernel_scale(b) * f.grid().step();
    let n = f.len();

    let values: Vec<Complex64> = u_grid
        .points()
        .map(|u| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, v) in f.values().iter().enumerate() {
                let w = if k == 0 || k == n - 1 { 0.5 } else { 1.0 };
                let t = f.grid().point(k);
                acc += w * v * cis(half_ab * t * t - u * t / b);
            }
            scale * cis(half_db * u * u) * acc
        })
        .collect();

    Spectrum::from_parts_unchecked(*u_grid, values, *params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gaussian(grid: SampleGrid) -> SampledSignal {
        SampledSignal::from_fn(grid, |t| Complex64::new(libm::exp(-0.5 * t * t), 0.0)).unwrap()
    }

    fn rel_l2(a: &[Complex64], b: &[Complex64]) -> f64 {
        let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
        let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
        libm::sqrt(num / den)
    }

    #[test]
    fn fourier_case_gaussian_closed_form() {
        // L_{(0,1,-1,0)} e^{-t^2/2} = e^{-j pi/4} e^{-u^2/2}
        let f = gaussian(SampleGrid::symmetric(8.0, 512).unwrap());
        let spec = lct_forward(&f, &LctParams::fourier()).unwrap();
        let phase = cis(-PI / 4.0);
        let mut max_err = 0.0f64;
        for (u, v) in spec.grid().points().zip(spec.values()) {
            let want = phase * libm::exp(-0.5 * u * u);
            max_err = max_err.max((v - want).norm());
        }
        assert!(max_err <= 1e-8, "max abs err {max_err:.3e}");
    }

    #[test]
    fn oracle_fourier_case_gaussian_closed_form() {
        let f = gaussian(SampleGrid::symmetric(8.0, 512).unwrap());
        let params = LctParams::fourier();
        let spec = lct_oracle(&f, &params, &induced_grid(f.grid(), &params));
        let phase = cis(-PI / 4.0);
        let mut max_err = 0.0f64;
        for (u, v) in spec.grid().points().zip(spec.values()) {
            let want = phase * libm::exp(-0.5 * u * u);
            max_err = max_err.max((v - want).norm());
        }
        assert!(max_err <= 1e-8, "max abs err {max_err:.3e}");
    }

    /// Analytic transform of the unit Gaussian for arbitrary parameters:
    /// with `alpha = 1 - j a/b`,
    /// `L_A e^{-t^2/2}(u) = K e^{j d u^2/(2b)} sqrt(2 pi / alpha)
    ///  e^{-u^2/(2 b^2 alpha)}` (principal square root; `Re alpha = 1 > 0`).
    /// Derived from the Gaussian integral
    /// `int e^{-alpha t^2/2 - j beta t} dt = sqrt(2 pi/alpha) e^{-beta^2/(2 alpha)}`.
    fn gaussian_spectrum(u: f64, params: &LctParams) -> Complex64 {
        let (a, b, d) = (params.a(), params.b(), params.d());
        let alpha = Complex64::new(1.0, -a / b);
        let two_pi = 2.0 * PI;
        kernel_scale(b)
            * cis(d / (2.0 * b) * u * u)
            * (two_pi / alpha).sqrt()
            * (-Complex64::new(u * u / (2.0 * b * b), 0.0) / alpha).exp()
    }

    #[test]
    fn gaussian_closed_form_for_general_params() {
        // the analytic formula is a fully independent reference: no
        // quadrature, no FFT, just complex algebra
        let f = gaussian(SampleGrid::symmetric(8.0, 512).unwrap());
        for params in [
            LctParams::fourier(),
            LctParams::new(1.0, 1.0, 0.0, 1.0).unwrap(),
            LctParams::new(1.0, 2.0, 1.0, 3.0).unwrap(),
            LctParams::new(1.0, -1.0, 2.0, -1.0).unwrap(),
            LctParams::new(2.0, 1.0, 1.0, 1.0).unwrap(),
            LctParams::rotation(0.5).unwrap(),
        ] {
            let spec = lct_forward(&f, &params).unwrap();
            let mut max_err = 0.0f64;
            let mut peak = 0.0f64;
            for (u, v) in spec.grid().points().zip(spec.values()) {
                let want = gaussian_spectrum(u, &params);
                max_err = max_err.max((v - want).norm());
                peak = peak.max(want.norm());
            }
            assert!(
                max_err / peak <= 1e-8,
                "rel sup {:.3e} for {params:?}",
                max_err / peak
            );
        }
    }

    #[test]
    fn zero_in_zero_out() {
        let z = SampledSignal::zeros(SampleGrid::symmetric(4.0, 64).unwrap());
        let spec = lct_forward(&z, &LctParams::new(1.0, 2.0, 1.0, 3.0).unwrap()).unwrap();
        assert!(spec.max_abs() == 0.0);
    }

    #[test]
    fn oracle_of_zero_is_zero() {
        let z = SampledSignal::zeros(SampleGrid::symmetric(4.0, 64).unwrap());
        let params = LctParams::new(1.0, 2.0, 1.0, 3.0).unwrap();
        let spec = lct_oracle(&z, &params, &induced_grid(z.grid(), &params));
        assert!(spec.max_abs() == 0.0);
    }

    #[test]
    fn inverse_of_zero_spectrum_is_zero() {
        let grid = SampleGrid::symmetric(4.0, 64).unwrap();
        let params = LctParams::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let spec = Spectrum::new(grid, vec![Complex64::new(0.0, 0.0); 64], params).unwrap();
        let back = lct_inverse(&spec, &grid).unwrap();
        assert!(back.max_abs() == 0.0);
    }

    #[test]
    fn forward_agrees_with_oracle() {
        let f = gaussian(SampleGrid::symmetric(8.0, 512).unwrap());
        for params in [
            LctParams::fourier(),
            LctParams::new(1.0, 1.0, 0.0, 1.0).unwrap(),
            LctParams::new(1.0, 2.0, 1.0, 3.0).unwrap(),
            LctParams::new(1.0, -1.0, 2.0, -1.0).unwrap(),
        ] {
            let grid = induced_grid(f.grid(), &params);
            let fast = lct_forward_on(&f, &params, &grid).unwrap();
            let slow = lct_oracle(&f, &params, &grid);
            let peak = slow.max_abs();
            let mut sup = 0.0f64;
            for (x, y) in fast.values().iter().zip(slow.values()) {
                sup = sup.max((x - y).norm());
            }
            assert!(
                sup / peak <= 1e-6,
                "rel sup {:.3e} for {params:?}",
                sup / peak
            );
        }
    }

    #[test]
    fn round_trip_shear_gaussian() {
        let f = gaussian(SampleGrid::symmetric(8.0, 512).unwrap());
        let params = LctParams::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let spec = lct_forward(&f, &params).unwrap();
        let back = lct_inverse(&spec, f.grid()).unwrap();
        let err = rel_l2(back.values(), f.values());
        assert!(err <= 1e-8, "rel l2 {err:.3e}");
    }

    #[test]
    fn round_trip_fourier_sup_norm() {
        let f = gaussian(SampleGrid::symmetric(8.0, 512).unwrap());
        let spec = lct_forward(&f, &LctParams::fourier()).unwrap();
        let back = lct_inverse(&spec, f.grid()).unwrap();
        let mut sup = 0.0f64;
        for (x, y) in back.values().iter().zip(f.values()) {
            sup = sup.max((x - y).norm());
        }
        assert!(sup <= 1e-8, "sup err {sup:.3e}");
    }

    #[test]
    fn linearity() {
        let grid = SampleGrid::symmetric(8.0, 256).unwrap();
        let f = gaussian(grid);
        let g = SampledSignal::from_fn(grid, |t| {
            Complex64::new(
                libm::exp(-0.8 * (t - 0.5) * (t - 0.5)),
                0.2 * libm::exp(-0.3 * t * t) * libm::sin(2.0 * t),
            )
        })
        .unwrap();
        let params = LctParams::new(1.0, 2.0, 1.0, 3.0).unwrap();
        let alpha = Complex64::new(0.7, -0.4);
        let beta = Complex64::new(-1.2, 0.3);

        let combo = f.scaled(alpha).add(&g.scaled(beta)).unwrap();
        let lhs = lct_forward(&combo, &params).unwrap();
        let ff = lct_forward(&f, &params).unwrap();
        let gg = lct_forward(&g, &params).unwrap();

        let peak = lhs.max_abs();
        let mut sup = 0.0f64;
        for ((l, x), y) in lhs.values().iter().zip(ff.values()).zip(gg.values()) {
            sup = sup.max((l - (alpha * x + beta * y)).norm());
        }
        assert!(sup / peak <= 1e-10, "rel {:.3e}", sup / peak);
    }

    #[test]
    fn coarse_grid_rejected() {
        let f = gaussian(SampleGrid::symmetric(8.0, 512).unwrap());
        let params = LctParams::new(1.0, 1e-3, 0.0, 1.0).unwrap();
        match lct_forward(&f, &params) {
            Err(LctError::GridTooCoarse { .. }) => {}
            other => panic!("expected GridTooCoarse, got {other:?}"),
        }
    }
}
