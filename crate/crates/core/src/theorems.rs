//! Executable checks for the convolution theorem, the operator algebra,
//! and Young's inequality, plus the discrete Lp norms and sharp constants
//! they need.
//!
//! Every verifier reports the observed discrepancy against a pinned
//! tolerance; nothing is asserted silently. The discrepancy metric for
//! transform-level identities is the maximum relative error over the points
//! where the reference side exceeds `REL_FLOOR` times its peak, so that
//! vanishing tails cannot blow up the quotient.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::cis;
use crate::conv::{
    convolve_deng, convolve_new, convolve_new_dual, convolve_shi, convolve_spectral, Realization,
};
use crate::error::{LctError, Result};
use crate::grid::SampleGrid;
use crate::lct::{induced_grid, kernel_scale, lct_forward_on, lct_inverse};
use crate::params::LctParams;
use crate::signal::{SampledSignal, Spectrum};

/// Tolerance for identities that pass through the transform (FFT error
/// budget at N <= 4096, double precision).
pub const TOL_TRANSFORM_IDENTITY: f64 = 1e-6;
/// Tolerance for symmetries of one and the same integral (commutativity).
pub const TOL_SAME_INTEGRAL: f64 = 1e-8;
/// Tolerance for identities that are exact linearity up to rounding.
pub const TOL_EXACT_LINEAR: f64 = 1e-10;
/// Points where the reference falls below this fraction of its peak are
/// excluded from relative-error metrics.
pub const REL_FLOOR: f64 = 1e-3;
/// Multiplicative slack `(1 + BOUND_SLACK)` on the L1 and Young bounds.
pub const BOUND_SLACK: f64 = 1e-6;

/// Phase factor of the convolution theorem:
/// `Phi(u) = e^{j(u - (d/2b) u^2 - ab/2)}`. Unit modulus for every `u`.
pub fn phi_factor(u: f64, params: &LctParams) -> Complex64 {
    let (a, b, d) = (params.a(), params.b(), params.d());
    cis(u - d / (2.0 * b) * u * u - 0.5 * a * b)
}

/// Discrete Lp norm `(dt * sum |f_k|^p)^{1/p}`; `max |f_k|` for `p = inf`.
pub fn norm_p(f: &SampledSignal, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(LctError::InvalidExponent { p });
    }
    if p.is_infinite() {
        return Ok(f.max_abs());
    }
    let sum: f64 = f.values().iter().map(|v| libm::pow(v.norm(), p)).sum();
    Ok(libm::pow(f.grid().step() * sum, 1.0 / p))
}

/// Holder conjugate with the limit conventions `1' = inf`, `inf' = 1`.
fn conjugate(p: f64) -> f64 {
    if p.is_infinite() {
        1.0
    } else if p == 1.0 {
        f64::INFINITY
    } else {
        p / (p - 1.0)
    }
}

/// `x^{1/x}` with the limit value 1 as `x -> inf`.
fn self_root(x: f64) -> f64 {
    if x.is_infinite() {
        1.0
    } else {
        libm::exp(libm::log(x) / x)
    }
}

/// Sharp Young constant `A_p = (p^{1/p} / p'^{1/p'})^{1/2}`.
///
/// Equals 1 at `p` in {1, 2, inf} and is < 1 strictly in between.
pub fn young_constant(p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(LctError::InvalidExponent { p });
    }
    let pp = conjugate(p);
    Ok(libm::sqrt(self_root(p) / self_root(pp)))
}

/// Exponent tuple of the generalized Young inequality with the conjugacy
/// constraints `1/p + 1/q = 1 + 1/r` and `1/r + 1/r' = 1` enforced at
/// construction (with `1/inf = 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YoungExponents {
    p: f64,
    q: f64,
    r: f64,
    r_prime: f64,
}

impl YoungExponents {
    pub fn new(p: f64, q: f64, r: f64) -> Result<Self> {
        for e in [p, q, r] {
            if e.is_nan() || e < 1.0 {
                return Err(LctError::InvalidExponent { p: e });
            }
        }
        let inv = |x: f64| if x.is_infinite() { 0.0 } else { 1.0 / x };
        if libm::fabs(inv(p) + inv(q) - 1.0 - inv(r)) > 1e-12 {
            return Err(LctError::InvalidExponent { p: r });
        }
        Ok(Self {
            p,
            q,
            r,
            r_prime: conjugate(r),
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn r_prime(&self) -> f64 {
        self.r_prime
    }
}

/// Constant of the generalized Young bound:
/// `sqrt(1/(2 pi |b|)) A_p A_q A_{r'}`.
pub fn young_bound(x: &YoungExponents, params: &LctParams) -> f64 {
    let root = 1.0 / libm::sqrt(2.0 * core::f64::consts::PI * libm::fabs(params.b()));
    // exponents were validated at construction
    root * young_constant(x.p).unwrap()
        * young_constant(x.q).unwrap()
        * young_constant(x.r_prime).unwrap()
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifierReport {
    pub identity: String,
    pub max_rel_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub grid: SampleGrid,
}

impl VerifierReport {
    fn evaluate(identity: String, max_rel_error: f64, tolerance: f64, grid: SampleGrid) -> Self {
        Self {
            identity,
            max_rel_error,
            tolerance,
            passed: max_rel_error <= tolerance,
            grid,
        }
    }
}

/// Max of `|lhs - rhs| / |rhs|` over the trusted band
/// (`|rhs| > REL_FLOOR * max |rhs|`). Zero when the reference vanishes
/// identically.
pub fn sup_rel_discrepancy(lhs: &[Complex64], rhs: &[Complex64]) -> f64 {
    let peak = rhs.iter().fold(0.0f64, |m, v| m.max(v.norm()));
    if peak == 0.0 {
        return lhs.iter().fold(0.0f64, |m, v| m.max(v.norm()));
    }
    let floor = REL_FLOOR * peak;
    let mut sup = 0.0f64;
    for (l, r) in lhs.iter().zip(rhs) {
        let mag = r.norm();
        if mag > floor {
            sup = sup.max((l - r).norm() / mag);
        }
    }
    sup
}

/// Which convolution the algebraic-property verifiers exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    New,
    Dual,
}

fn convolve_by(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
    op: OperatorKind,
) -> Result<SampledSignal> {
    match op {
        OperatorKind::New => convolve_new(f, g, params, Realization::ChirpPathOne),
        OperatorKind::Dual => convolve_new_dual(f, g, params),
    }
}

/// Check `L_A(f (x)_A g) = Phi * L_A f * L_A g` on the grid induced by the
/// convolution output, with a caller-chosen `Phi` (mutated variants are how
/// the verifier's own power is tested).
pub fn verify_convolution_theorem_with_phi(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
    tol: f64,
    phi: impl Fn(f64, &LctParams) -> Complex64,
) -> Result<VerifierReport> {
    let h = convolve_new(f, g, params, Realization::DirectQuadrature)?;
    let u_grid = induced_grid(h.grid(), params);
    let lhs = lct_forward_on(&h, params, &u_grid)?;
    let ff = lct_forward_on(f, params, &u_grid)?;
    let gg = lct_forward_on(g, params, &u_grid)?;
    let rhs: Vec<Complex64> = u_grid
        .points()
        .zip(ff.values().iter().zip(gg.values()))
        .map(|(u, (x, y))| phi(u, params) * x * y)
        .collect();
    let err = sup_rel_discrepancy(lhs.values(), &rhs);
    Ok(VerifierReport::evaluate(
        String::from("conv-theorem"),
        err,
        tol,
        u_grid,
    ))
}

/// Convolution theorem check with the correct phase factor.
pub fn verify_convolution_theorem(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
    tol: f64,
) -> Result<VerifierReport> {
    verify_convolution_theorem_with_phi(f, g, params, tol, phi_factor)
}

/// `norm_r(f (x)_A g) <= young_bound * norm_p(f) * norm_q(g) * (1 + slack)`.
/// `max_rel_error` is the ratio of the two sides.
pub fn verify_young(
    f: &SampledSignal,
    g: &SampledSignal,
    x: &YoungExponents,
    params: &LctParams,
) -> Result<VerifierReport> {
    let h = convolve_new(f, g, params, Realization::ChirpPathOne)?;
    let lhs = norm_p(&h, x.r())?;
    let rhs = young_bound(x, params) * norm_p(f, x.p())? * norm_p(g, x.q())?;
    let ratio = if rhs == 0.0 {
        if lhs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        lhs / rhs
    };
    Ok(VerifierReport::evaluate(
        format!("young p={} q={} r={}", x.p(), x.q(), x.r()),
        ratio,
        1.0 + BOUND_SLACK,
        *h.grid(),
    ))
}

/// `f op g == g op f` pointwise.
pub fn verify_commutativity(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
    op: OperatorKind,
) -> Result<VerifierReport> {
    let fg = convolve_by(f, g, params, op)?;
    let gf = convolve_by(g, f, params, op)?;
    let err = sup_rel_discrepancy(fg.values(), gf.values());
    Ok(VerifierReport::evaluate(
        String::from(match op {
            OperatorKind::New => "commutativity",
            OperatorKind::Dual => "dual-commutativity",
        }),
        err,
        TOL_SAME_INTEGRAL,
        *fg.grid(),
    ))
}

/// `(f op g) op h == f op (g op h)`; the output grids widen identically on
/// both sides, so the comparison is exact lattice against exact lattice.
pub fn verify_associativity(
    f: &SampledSignal,
    g: &SampledSignal,
    h: &SampledSignal,
    params: &LctParams,
    op: OperatorKind,
) -> Result<VerifierReport> {
    let left = convolve_by(&convolve_by(f, g, params, op)?, h, params, op)?;
    let right = convolve_by(f, &convolve_by(g, h, params, op)?, params, op)?;
    let err = sup_rel_discrepancy(left.values(), right.values());
    Ok(VerifierReport::evaluate(
        String::from(match op {
            OperatorKind::New => "associativity",
            OperatorKind::Dual => "dual-associativity",
        }),
        err,
        TOL_TRANSFORM_IDENTITY,
        *left.grid(),
    ))
}

/// `f op (g + h) == f op g + f op h`; exact linearity up to rounding.
pub fn verify_distributivity(
    f: &SampledSignal,
    g: &SampledSignal,
    h: &SampledSignal,
    params: &LctParams,
    op: OperatorKind,
) -> Result<VerifierReport> {
    let lhs = convolve_by(f, &g.add(h)?, params, op)?;
    let rhs = convolve_by(f, g, params, op)?.add(&convolve_by(f, h, params, op)?)?;
    let err = sup_rel_discrepancy(lhs.values(), rhs.values());
    Ok(VerifierReport::evaluate(
        String::from(match op {
            OperatorKind::New => "distributivity",
            OperatorKind::Dual => "dual-distributivity",
        }),
        err,
        TOL_EXACT_LINEAR,
        *lhs.grid(),
    ))
}

/// Pairwise agreement of the three realizations of the new convolution.
pub fn verify_realization_equivalence(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<VerifierReport> {
    let direct = convolve_new(f, g, params, Realization::DirectQuadrature)?;
    let one = convolve_new(f, g, params, Realization::ChirpPathOne)?;
    let two = convolve_new(f, g, params, Realization::ChirpPathTwo)?;
    let err = sup_rel_discrepancy(one.values(), direct.values())
        .max(sup_rel_discrepancy(two.values(), direct.values()))
        .max(sup_rel_discrepancy(one.values(), two.values()));
    Ok(VerifierReport::evaluate(
        String::from("realizations"),
        err,
        TOL_TRANSFORM_IDENTITY,
        *direct.grid(),
    ))
}

/// Discrete L1 bound `|f (x)_A g|_1 <= sqrt(1/(2 pi |b|)) |f|_1 |g|_1`.
pub fn verify_l1_bound(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<VerifierReport> {
    let h = convolve_new(f, g, params, Realization::ChirpPathOne)?;
    let bound = kernel_scale(params.b()).norm() * norm_p(f, 1.0)? * norm_p(g, 1.0)?;
    let lhs = norm_p(&h, 1.0)?;
    let ratio = if bound == 0.0 {
        if lhs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        lhs / bound
    };
    Ok(VerifierReport::evaluate(
        String::from("l1-bound"),
        ratio,
        1.0 + BOUND_SLACK,
        *h.grid(),
    ))
}

/// Deng identity `L_A(f theta g) = L_A f * L_A g * e^{-j (d/2b) u^2}`.
pub fn verify_deng_identity(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<VerifierReport> {
    let h = convolve_deng(f, g, params)?;
    let u_grid = induced_grid(h.grid(), params);
    let lhs = lct_forward_on(&h, params, &u_grid)?;
    let ff = lct_forward_on(f, params, &u_grid)?;
    let gg = lct_forward_on(g, params, &u_grid)?;
    let half_db = params.d() / (2.0 * params.b());
    let rhs: Vec<Complex64> = u_grid
        .points()
        .zip(ff.values().iter().zip(gg.values()))
        .map(|(u, (x, y))| x * y * cis(-half_db * u * u))
        .collect();
    let err = sup_rel_discrepancy(lhs.values(), &rhs);
    Ok(VerifierReport::evaluate(
        String::from("deng"),
        err,
        TOL_TRANSFORM_IDENTITY,
        u_grid,
    ))
}

/// Constancy of the pointwise ratio between `L_A(f theta_M g)` and the
/// product of the unitary Fourier transform of one factor (at `u/b`) with
/// the LCT of the other.
///
/// Expanding the defining integral pairs the plain Fourier transform with
/// `f` and the LCT with `g`; the ratio is then the constant `sqrt(2 pi)`
/// regardless of `A`. The report carries the coefficient of variation over
/// the trusted band; the observed constant magnitude is returned alongside.
pub fn verify_shi_ratio(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<(VerifierReport, f64)> {
    let b = params.b();
    let h = convolve_shi(f, g, params)?;
    let u_grid = induced_grid(h.grid(), params);
    let lhs = lct_forward_on(&h, params, &u_grid)?;

    // Unitary Fourier transform of f sampled at xi_k = u_k / b. For b < 0
    // the xi axis runs backwards, so evaluate on the reversed grid and flip.
    let m = u_grid.count();
    let du = u_grid.step();
    let fourier = LctParams::fourier();
    let (xi_grid, flip) = if b > 0.0 {
        (SampleGrid::new(u_grid.start() / b, du / b, m)?, false)
    } else {
        (SampleGrid::new(u_grid.end() / b, du / -b, m)?, true)
    };
    let f_spec = lct_forward_on(f, &fourier, &xi_grid)?;
    let quarter = cis(core::f64::consts::FRAC_PI_4);
    let gg = lct_forward_on(g, params, &u_grid)?;

    let denom: Vec<Complex64> = (0..m)
        .map(|k| {
            let idx = if flip { m - 1 - k } else { k };
            quarter * f_spec.values()[idx] * gg.values()[k]
        })
        .collect();

    let peak = denom.iter().fold(0.0f64, |mx, v| mx.max(v.norm()));
    let floor = REL_FLOOR * peak;
    let ratios: Vec<Complex64> = lhs
        .values()
        .iter()
        .zip(&denom)
        .filter(|(_, d)| d.norm() > floor)
        .map(|(l, d)| l / d)
        .collect();
    if ratios.is_empty() {
        return Ok((
            VerifierReport::evaluate(String::from("shi-ratio"), f64::INFINITY, 1e-6, u_grid),
            0.0,
        ));
    }
    let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
    let var = ratios.iter().map(|r| (r - mean).norm_sqr()).sum::<f64>() / ratios.len() as f64;
    let cov = libm::sqrt(var) / mean.norm();
    Ok((
        VerifierReport::evaluate(String::from("shi-ratio"), cov, 1e-6, u_grid),
        mean.norm(),
    ))
}

/// Spectral-product convolution against the rearranged convolution theorem:
/// `convolve_spectral(f, g) == L_{A^{-1}}(L_A(f (x)_A g) / Phi)`.
pub fn verify_spectral_identity(
    f: &SampledSignal,
    g: &SampledSignal,
    params: &LctParams,
) -> Result<VerifierReport> {
    let lhs = convolve_spectral(f, g, params)?;
    let h = convolve_new(f, g, params, Realization::DirectQuadrature)?;
    let u_grid = induced_grid(lhs.grid(), params);
    let spec_h = lct_forward_on(&h, params, &u_grid)?;
    let divided: Vec<Complex64> = u_grid
        .points()
        .zip(spec_h.values())
        .map(|(u, v)| v / phi_factor(u, params))
        .collect();
    let rhs = lct_inverse(&Spectrum::new(u_grid, divided, *params)?, lhs.grid())?;
    let err = sup_rel_discrepancy(lhs.values(), rhs.values());
    Ok(VerifierReport::evaluate(
        String::from("pei-spectral"),
        err,
        TOL_TRANSFORM_IDENTITY,
        u_grid,
    ))
}
