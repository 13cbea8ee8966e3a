//! Deterministic test-signal generators.

use lctconv_core::{Complex64, SampleGrid, SampledSignal};

use crate::CliError;

/// What to generate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorKind {
    /// `e^{-(t-center)^2 / (2 width^2)}`, real-valued, peak 1.
    Gaussian { center: f64, width: f64 },
    /// Unit-magnitude quadratic phase `e^{j rate t^2 / 2}`.
    Chirp { rate: f64 },
    /// Indicator of `[left, right)`.
    Rect { left: f64, right: f64 },
    /// Complex white noise, components uniform in `[-1, 1)`, reproducible
    /// from the seed.
    WhiteNoise { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub grid: SampleGrid,
}

/// xorshift64* stream; fixed algorithm so outputs never depend on platform
/// or library versions.
struct NoiseStream {
    state: u64,
}

impl NoiseStream {
    fn new(seed: u64) -> Self {
        Self {
            state: seed.wrapping_mul(0x9E3779B97F4A7C15).max(1),
        }
    }

    fn next_unit(&mut self) -> f64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        let u = (x.wrapping_mul(0x2545F4914F6CDD1D) >> 11) as f64 / (1u64 << 53) as f64;
        2.0 * u - 1.0
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<SampledSignal, CliError> {
    match spec.kind {
        GeneratorKind::Gaussian { center, width } => {
            if !(width.is_finite() && width > 0.0) {
                return Err(CliError::Usage(format!(
                    "gaussian width must be > 0, got {width}"
                )));
            }
            Ok(SampledSignal::from_fn(spec.grid, |t| {
                let z = (t - center) / width;
                Complex64::new((-0.5 * z * z).exp(), 0.0)
            })?)
        }
        GeneratorKind::Chirp { rate } => Ok(SampledSignal::from_fn(spec.grid, |t| {
            let phase = 0.5 * rate * t * t;
            Complex64::new(phase.cos(), phase.sin())
        })?),
        GeneratorKind::Rect { left, right } => {
            // NaN bounds must fail this check too
            let ordered = matches!(left.partial_cmp(&right), Some(core::cmp::Ordering::Less));
            if !ordered {
                return Err(CliError::Usage(format!(
                    "rect needs left < right, got [{left}, {right})"
                )));
            }
            Ok(SampledSignal::from_fn(spec.grid, |t| {
                Complex64::new(if t >= left && t < right { 1.0 } else { 0.0 }, 0.0)
            })?)
        }
        GeneratorKind::WhiteNoise { seed } => {
            let mut rng = NoiseStream::new(seed);
            let values: Vec<Complex64> = (0..spec.grid.count())
                .map(|_| {
                    let re = rng.next_unit();
                    let im = rng.next_unit();
                    Complex64::new(re, im)
                })
                .collect();
            Ok(SampledSignal::new(spec.grid, values)?)
        }
    }
}
