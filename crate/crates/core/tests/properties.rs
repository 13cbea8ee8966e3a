//! Property-based invariants over randomized parameters, grids, and signals.

mod common;

use common::*;
use lctconv_core::conv::{convolve_new, Realization};
use lctconv_core::lct::{lct_forward, lct_inverse};
use lctconv_core::theorems::{
    norm_p, phi_factor, sup_rel_discrepancy, young_bound, YoungExponents,
};
use lctconv_core::{Complex64, LctParams, SampleGrid};
use proptest::prelude::*;

/// Random unimodular parameters with the chirp rate `|a/b| <= 1` so that the
/// test grids below stay inside the aliasing guard.
fn params_strategy() -> impl Strategy<Value = LctParams> {
    (
        -0.5f64..0.5,
        prop_oneof![(-3.0f64..-0.5), (0.5f64..3.0)],
        -2.0f64..2.0,
    )
        .prop_map(|(a, b, d)| {
            let c = (a * d - 1.0) / b;
            LctParams::new(a, b, c, d).unwrap()
        })
}

fn grid_strategy() -> impl Strategy<Value = SampleGrid> {
    (128usize..=256, 6.0f64..10.0)
        .prop_map(|(count, half)| SampleGrid::symmetric(half, count.next_power_of_two()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn inverse_is_involution_and_unimodular(params in params_strategy()) {
        let inv = params.inverse();
        prop_assert!((inv.det() - 1.0).abs() <= 1e-9);
        prop_assert_eq!(inv.inverse(), params);
    }

    #[test]
    fn non_unimodular_matrices_are_rejected(
        a in 0.2f64..2.0, b in 0.5f64..3.0, c in -2.0f64..2.0, eps in 1e-6f64..1.0,
    ) {
        let d = (1.0 + b * c) / a + eps / a; // det = 1 + eps
        prop_assert!(LctParams::new(a, b, c, d).is_err());
    }

    #[test]
    fn grid_points_reproducible(start in -10.0f64..10.0, step in 1e-3f64..1.0, count in 2usize..512) {
        let grid = SampleGrid::new(start, step, count).unwrap();
        for k in 0..count {
            prop_assert_eq!(grid.point(k), start + k as f64 * step);
        }
    }

    #[test]
    fn phi_has_unit_modulus(params in params_strategy(), u in -50.0f64..50.0) {
        prop_assert!((phi_factor(u, &params).norm() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn norm_homogeneity(seed in 0u64..1000, k in -8i32..8, p in 1.0f64..4.0) {
        let grid = SampleGrid::symmetric(8.0, 128).unwrap();
        let mut rng = XorShift64::new(seed);
        let f = random_smooth(&mut rng, grid);
        // powers of two scale sample magnitudes exactly, so p = 1 and
        // p = inf come out bit-identical; general p goes through pow and
        // keeps only ulp-level agreement
        let alpha = Complex64::new((2.0f64).powi(k), 0.0);
        let scaled = f.scaled(alpha);
        prop_assert_eq!(
            norm_p(&scaled, 1.0).unwrap(),
            alpha.norm() * norm_p(&f, 1.0).unwrap()
        );
        prop_assert_eq!(
            norm_p(&scaled, f64::INFINITY).unwrap(),
            alpha.norm() * norm_p(&f, f64::INFINITY).unwrap()
        );
        let lhs = norm_p(&scaled, p).unwrap();
        let rhs = alpha.norm() * norm_p(&f, p).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-13 * rhs.abs());
    }

    #[test]
    fn young_bound_symmetric(params in params_strategy(), p in 1.0f64..2.0, q in 1.0f64..2.0) {
        let inv_r = 1.0 / p + 1.0 / q - 1.0;
        let r = if inv_r < 1e-9 { f64::INFINITY } else { 1.0 / inv_r };
        let x = YoungExponents::new(p, q, r).unwrap();
        let y = YoungExponents::new(q, p, r).unwrap();
        let bx = young_bound(&x, &params);
        let by = young_bound(&y, &params);
        prop_assert!((bx - by).abs() <= 1e-14 * bx.abs());
    }

    #[test]
    fn round_trip_recovers_smooth_signals(
        params in params_strategy(),
        seed in 0u64..1000,
        grid in grid_strategy(),
    ) {
        let mut rng = XorShift64::new(seed);
        let f = random_smooth(&mut rng, grid);
        let spec = lct_forward(&f, &params).unwrap();
        let back = lct_inverse(&spec, f.grid()).unwrap();
        prop_assert!(rel_l2(&back, &f) <= 1e-6);
    }

    #[test]
    fn forward_transform_is_linear(
        params in params_strategy(),
        seed in 0u64..1000,
        re in -2.0f64..2.0,
        im in -2.0f64..2.0,
    ) {
        let grid = SampleGrid::symmetric(8.0, 128).unwrap();
        let mut rng = XorShift64::new(seed);
        let f = random_smooth(&mut rng, grid);
        let g = random_smooth(&mut rng, grid);
        let alpha = Complex64::new(re, im);
        let beta = Complex64::new(-im, re);
        let combo = f.scaled(alpha).add(&g.scaled(beta)).unwrap();
        let lhs = lct_forward(&combo, &params).unwrap();
        let rhs: Vec<Complex64> = lct_forward(&f, &params)
            .unwrap()
            .values()
            .iter()
            .zip(lct_forward(&g, &params).unwrap().values())
            .map(|(x, y)| alpha * x + beta * y)
            .collect();
        prop_assert!(sup_rel_discrepancy(lhs.values(), &rhs) <= 1e-10);
    }

    #[test]
    fn convolution_commutes(params in params_strategy(), seed in 0u64..1000) {
        let grid = SampleGrid::symmetric(8.0, 128).unwrap();
        let mut rng = XorShift64::new(seed);
        let f = random_smooth(&mut rng, grid);
        let g = random_smooth(&mut rng, grid);
        let fg = convolve_new(&f, &g, &params, Realization::ChirpPathOne).unwrap();
        let gf = convolve_new(&g, &f, &params, Realization::ChirpPathOne).unwrap();
        prop_assert_eq!(fg.grid(), gf.grid());
        prop_assert!(sup_rel_discrepancy(fg.values(), gf.values()) <= 1e-8);
    }

    #[test]
    fn l1_bound_never_violated(params in params_strategy(), seed in 0u64..1000) {
        let grid = SampleGrid::symmetric(8.0, 128).unwrap();
        let mut rng = XorShift64::new(seed);
        let f = random_smooth(&mut rng, grid);
        let g = random_smooth(&mut rng, grid);
        let h = convolve_new(&f, &g, &params, Realization::ChirpPathOne).unwrap();
        let bound = norm_p(&f, 1.0).unwrap() * norm_p(&g, 1.0).unwrap()
            / (2.0 * std::f64::consts::PI * params.b().abs()).sqrt();
        prop_assert!(norm_p(&h, 1.0).unwrap() <= bound * (1.0 + 1e-6));
    }
}

/// The Fourier specialization: the forward transform equals
/// `e^{-j pi/4}` times the unitary Fourier transform, checked on random
/// band-limited signals against a direct unitary DFT-style quadrature.
#[test]
fn fourier_specialization_on_random_signals() {
    let grid = SampleGrid::symmetric(10.0, 512).unwrap();
    let mut rng = XorShift64::new(97);
    for _ in 0..5 {
        let f = random_smooth(&mut rng, grid);
        let spec = lct_forward(&f, &LctParams::fourier()).unwrap();
        let phase = cis(-std::f64::consts::PI / 4.0);
        let dt = grid.step();
        let unitary: Vec<Complex64> = spec
            .grid()
            .points()
            .map(|u| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, v) in f.values().iter().enumerate() {
                    acc += v * cis(-u * grid.point(k));
                }
                phase * acc * dt / (2.0 * std::f64::consts::PI).sqrt()
            })
            .collect();
        let err = sup_rel_discrepancy(spec.values(), &unitary);
        assert!(err <= 1e-10, "err {err:.3e}");
    }
}
