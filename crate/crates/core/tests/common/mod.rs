//! Shared builders for the integration suites: deterministic pseudo-random
//! smooth signals, the canonical matrix test set, and error metrics.

// each test target compiles this module separately and uses a subset
#![allow(dead_code)]

use lctconv_core::{Complex64, LctParams, SampleGrid, SampledSignal};

/// xorshift64* generator; deterministic across platforms.
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        Self {
            state: seed.wrapping_mul(0x9E3779B97F4A7C15).max(1),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

pub fn cis(theta: f64) -> Complex64 {
    Complex64::new(theta.cos(), theta.sin())
}

/// The eight-matrix test set: Fourier, shears, three rotations, one b < 0.
pub fn matrix_set() -> Vec<LctParams> {
    use std::f64::consts::PI;
    vec![
        LctParams::fourier(),
        LctParams::new(1.0, 1.0, 0.0, 1.0).unwrap(),
        LctParams::new(1.0, 2.0, 1.0, 3.0).unwrap(),
        LctParams::rotation(PI / 6.0).unwrap(),
        LctParams::rotation(PI / 4.0).unwrap(),
        LctParams::rotation(PI / 3.0).unwrap(),
        LctParams::new(1.0, -1.0, 2.0, -1.0).unwrap(),
        LctParams::new(2.0, 1.0, 1.0, 1.0).unwrap(),
    ]
}

pub fn gaussian(grid: SampleGrid, center: f64, width: f64) -> SampledSignal {
    SampledSignal::from_fn(grid, |t| {
        let z = (t - center) / width;
        Complex64::new((-0.5 * z * z).exp(), 0.0)
    })
    .unwrap()
}

/// Gaussian envelope with quadratic and linear phase.
pub fn chirped_gaussian(
    grid: SampleGrid,
    center: f64,
    width: f64,
    chirp_rate: f64,
    mod_freq: f64,
) -> SampledSignal {
    SampledSignal::from_fn(grid, |t| {
        let z = (t - center) / width;
        (-0.5 * z * z).exp() * cis(0.5 * chirp_rate * t * t + mod_freq * t)
    })
    .unwrap()
}

/// Rectangle with tanh-smoothed edges; decays fast enough to treat the grid
/// boundary as zero.
pub fn smooth_rect(grid: SampleGrid, left: f64, right: f64, edge: f64) -> SampledSignal {
    SampledSignal::from_fn(grid, |t| {
        let v = 0.5 * (((t - left) / edge).tanh() - ((t - right) / edge).tanh());
        Complex64::new(v, 0.0)
    })
    .unwrap()
}

/// Random smooth decaying signal: a mixture of 2..=4 chirped Gaussian bumps
/// with complex amplitudes. Centers and widths are kept tight enough that the
/// signal is numerically zero at the grid edge.
pub fn random_smooth(rng: &mut XorShift64, grid: SampleGrid) -> SampledSignal {
    let bumps = 2 + (rng.next_u64() % 3) as usize;
    let mut parts = Vec::with_capacity(bumps);
    for _ in 0..bumps {
        let center = rng.range(-2.0, 2.0);
        let width = rng.range(0.5, 1.2);
        let rate = rng.range(-0.5, 0.5);
        let freq = rng.range(-2.0, 2.0);
        let amp = Complex64::new(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
        parts.push((center, width, rate, freq, amp));
    }
    SampledSignal::from_fn(grid, |t| {
        parts
            .iter()
            .map(|&(c, w, r, q, amp)| {
                let z = (t - c) / w;
                amp * (-0.5 * z * z).exp() * cis(0.5 * r * t * t + q * t)
            })
            .sum()
    })
    .unwrap()
}

/// The five signal pairs used by the transform-identity suites.
pub fn signal_pairs(grid: SampleGrid) -> Vec<(SampledSignal, SampledSignal)> {
    vec![
        (gaussian(grid, 0.0, 1.0), gaussian(grid, 0.5, 0.8)),
        (gaussian(grid, -1.0, 1.2), gaussian(grid, 1.0, 0.7)),
        (
            chirped_gaussian(grid, 0.0, 1.0, 0.8, 0.0),
            gaussian(grid, 0.3, 0.9),
        ),
        (
            chirped_gaussian(grid, -0.5, 0.9, -0.6, 1.0),
            chirped_gaussian(grid, 0.2, 0.8, 1.0, -0.5),
        ),
        (
            smooth_rect(grid, -2.0, 1.0, 0.3),
            smooth_rect(grid, -1.0, 2.0, 0.25),
        ),
    ]
}

pub fn rel_l2(a: &SampledSignal, b: &SampledSignal) -> f64 {
    let num: f64 = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum();
    let den: f64 = b.values().iter().map(|y| y.norm_sqr()).sum();
    (num / den).sqrt()
}
