//! FFT backend: iterative radix-2 transform, FFT-based linear convolution,
//! and a Bluestein chirp-z evaluation of the scaled DFT
//! `X_k = sum_n x_n e^{-j alpha k n}` for arbitrary input/output lengths and
//! arbitrary real `alpha`.
//!
//! The scaled DFT is what lets every transform in this crate target an
//! arbitrary uniform output grid instead of only the FFT-induced one.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::cis;

/// In-place radix-2 Cooley-Tukey; `buf.len()` must be a power of two.
/// Forward kernel is `e^{-j 2 pi k n / N}`; the inverse applies the
/// conjugate kernel and the `1/N` scale.
pub fn fft_in_place(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    assert!(n.is_power_of_two(), "fft length must be a power of two");
    if n <= 1 {
        return;
    }

    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let ang = sign * 2.0 * PI / len as f64;
        let twiddles: Vec<Complex64> = (0..half).map(|k| cis(ang * k as f64)).collect();
        let mut base = 0;
        while base < n {
            for k in 0..half {
                let t = twiddles[k] * buf[base + k + half];
                let a = buf[base + k];
                buf[base + k] = a + t;
                buf[base + k + half] = a - t;
            }
            base += len;
        }
        len <<= 1;
    }

    if inverse {
        let scale = 1.0 / n as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
    }
}

/// Full linear (non-circular) convolution, length `a.len() + b.len() - 1`.
/// Zero-pads to the next power of two so no wrap-around can occur.
pub fn linear_convolve(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let out_len = a.len() + b.len() - 1;
    let p = out_len.next_power_of_two();
    let mut fa = vec![Complex64::new(0.0, 0.0); p];
    let mut fb = vec![Complex64::new(0.0, 0.0); p];
    fa[..a.len()].copy_from_slice(a);
    fb[..b.len()].copy_from_slice(b);
    fft_in_place(&mut fa, false);
    fft_in_place(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    fft_in_place(&mut fa, true);
    fa.truncate(out_len);
    fa
}

/// Bluestein evaluation of `X_k = sum_{n=0}^{N-1} x_n e^{-j alpha k n}` for
/// `k = 0..m`.
///
/// Uses `k n = (k^2 + n^2 - (k-n)^2) / 2` to turn the kernel into a linear
/// convolution with the chirp `e^{j alpha l^2 / 2}`.
pub fn scaled_dft(x: &[Complex64], alpha: f64, m: usize) -> Vec<Complex64> {
    let n = x.len();
    if n == 0 || m == 0 {
        return Vec::new();
    }
    let half = 0.5 * alpha;

    let pre: Vec<Complex64> = x
        .iter()
        .enumerate()
        .map(|(k, v)| v * cis(-half * (k * k) as f64))
        .collect();

    // chirp c_l = e^{j alpha l^2 / 2} for l = -(n-1)..=(m-1), stored at l + n - 1
    let chirp: Vec<Complex64> = (0..n + m - 1)
        .map(|idx| {
            let l = idx as i64 - (n as i64 - 1);
            cis(half * (l * l) as f64)
        })
        .collect();

    let conv = linear_convolve(&pre, &chirp);
    (0..m)
        .map(|k| cis(-half * (k * k) as f64) * conv[k + n - 1])
        .collect()
}
