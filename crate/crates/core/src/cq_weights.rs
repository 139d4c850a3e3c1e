//! Convolution-quadrature weights for the Grünwald-Letnikov symbol
//! `(1-ξ)^α` and the fractional BDF2 symbol `(3/2 - 2ξ + ξ²/2)^α`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use crate::{Error, Result};

/// Fractional order `α` with `0 < α < 1`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha < 1.0 {
            Ok(FractionalOrder(alpha))
        } else {
            Err(Error::domain("alpha", alpha, "0 < alpha < 1"))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CqScheme {
    Gl,
    Fbdf2,
}

/// A weight sequence together with its generating symbol.
#[derive(Clone, Debug, PartialEq)]
pub struct CqKernel {
    scheme: CqScheme,
    alpha: FractionalOrder,
    weights: Vec<f64>,
}

impl CqKernel {
    pub fn scheme(&self) -> CqScheme {
        self.scheme
    }

    pub fn alpha(&self) -> FractionalOrder {
        self.alpha
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Generating symbol `δ(ξ)` evaluated at a complex point.
    pub fn symbol(&self, xi: Complex64) -> Complex64 {
        let a = self.alpha.value();
        match self.scheme {
            CqScheme::Gl => (Complex64::new(1.0, 0.0) - xi).powf(a),
            CqScheme::Fbdf2 => (Complex64::new(1.5, 0.0) - xi * 2.0 + xi * xi * 0.5).powf(a),
        }
    }
}

/// Coefficients of `(1 - c ξ)^α` up to `ξ^n`.
fn binomial_series(alpha: f64, c: f64, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    extend_binomial_series(&mut out, alpha, c, n);
    out
}

fn extend_binomial_series(seq: &mut Vec<f64>, alpha: f64, c: f64, n: usize) {
    while seq.len() <= n {
        let j = seq.len() as f64;
        let prev = seq[seq.len() - 1];
        seq.push(prev * c * (j - 1.0 - alpha) / j);
    }
}

/// Grünwald-Letnikov weights `σ_0..σ_n`.
pub fn gl_weights(alpha: FractionalOrder, n: usize) -> CqKernel {
    CqKernel {
        scheme: CqScheme::Gl,
        alpha,
        weights: binomial_series(alpha.value(), 1.0, n),
    }
}

/// Fractional BDF2 weights `w_0..w_n`, using
/// `(3/2 - 2ξ + ξ²/2)^α = (3/2)^α (1-ξ)^α (1-ξ/3)^α`.
pub fn fbdf2_weights(alpha: FractionalOrder, n: usize) -> CqKernel {
    let a = alpha.value();
    let p = binomial_series(a, 1.0, n);
    let q = binomial_series(a, 1.0 / 3.0, n);
    let scale = libm::pow(1.5, a);
    let weights = (0..=n).map(|j| scale * convolve_at(&p, &q, j)).collect();
    CqKernel { scheme: CqScheme::Fbdf2, alpha, weights }
}

#[inline]
fn convolve_at(p: &[f64], q: &[f64], j: usize) -> f64 {
    // q decays geometrically, so sum it from the small end
    let mut s = 0.0;
    for i in (0..=j).rev() {
        s += q[i] * p[j - i];
    }
    s
}

/// Builds the kernel for `scheme`.
pub fn weights(scheme: CqScheme, alpha: FractionalOrder, n: usize) -> CqKernel {
    match scheme {
        CqScheme::Gl => gl_weights(alpha, n),
        CqScheme::Fbdf2 => fbdf2_weights(alpha, n),
    }
}

/// `τ^{-α} Σ_j w_j V^{n-j}` for a history `V^0..V^n`.
pub fn apply_cq(kernel: &CqKernel, tau: f64, history: &[Vec<f64>]) -> Result<Vec<f64>> {
    if !(tau > 0.0) {
        return Err(Error::domain("tau", tau, "tau > 0"));
    }
    let Some(last) = history.last() else {
        return Ok(Vec::new());
    };
    let n = history.len() - 1;
    if kernel.weights.len() < history.len() {
        return Err(Error::DimensionMismatch { expected: history.len(), found: kernel.weights.len() });
    }
    let dim = last.len();
    let mut out = vec![0.0; dim];
    for (j, w) in kernel.weights[..=n].iter().enumerate() {
        let v = &history[n - j];
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += w * x;
        }
    }
    let scale = libm::pow(tau, -kernel.alpha.value());
    out.iter_mut().for_each(|o| *o *= scale);
    Ok(out)
}

#[derive(Clone, Debug)]
struct CacheEntry {
    p: Vec<f64>,
    q: Vec<f64>,
    w: Vec<f64>,
}

/// Append-only cache of weight sequences keyed by scheme and `α`.
///
/// Requests for longer sequences extend the stored prefix in place; stored
/// values are never recomputed, so every prefix is bitwise stable.
#[derive(Clone, Debug, Default)]
pub struct WeightCache {
    entries: BTreeMap<(CqScheme, u64), CacheEntry>,
}

impl WeightCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Weights `0..=n` for `(scheme, α)`.
    pub fn get(&mut self, scheme: CqScheme, alpha: FractionalOrder, n: usize) -> &[f64] {
        let a = alpha.value();
        let e = self.entries.entry((scheme, a.to_bits())).or_insert_with(|| CacheEntry {
            p: vec![1.0],
            q: vec![1.0],
            w: Vec::new(),
        });
        if e.w.len() <= n {
            extend_binomial_series(&mut e.p, a, 1.0, n);
            match scheme {
                CqScheme::Gl => {
                    e.w.clear();
                    e.w.extend_from_slice(&e.p[..=n]);
                }
                CqScheme::Fbdf2 => {
                    extend_binomial_series(&mut e.q, a, 1.0 / 3.0, n);
                    let scale = libm::pow(1.5, a);
                    for j in e.w.len()..=n {
                        e.w.push(scale * convolve_at(&e.p, &e.q, j));
                    }
                }
            }
        }
        &e.w[..=n]
    }

    pub fn kernel(&mut self, scheme: CqScheme, alpha: FractionalOrder, n: usize) -> CqKernel {
        CqKernel { scheme, alpha, weights: self.get(scheme, alpha, n).to_vec() }
    }
}

/// `1 - e^{-z}` without cancellation near zero.
pub fn one_minus_exp_neg(z: Complex64) -> Complex64 {
    -expm1(-z)
}

/// BDF2 symbol at `ξ = e^{-z}`: `3/2 - 2e^{-z} + e^{-2z}/2`.
pub fn bdf2_symbol_exp_neg(z: Complex64) -> Complex64 {
    expm1(-z) * -2.0 + expm1(-2.0 * z) * 0.5
}

fn expm1(z: Complex64) -> Complex64 {
    let (a, b) = (z.re, z.im);
    let s = libm::sin(0.5 * b);
    let re = libm::expm1(a) * libm::cos(b) - 2.0 * s * s;
    let im = libm::exp(a) * libm::sin(b);
    Complex64::new(re, im)
}

/// Outcome of the sampled sector and consistency-order checks.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorReport {
    pub alpha: f64,
    /// max `|arg (1-e^{-z})^α| - απ/2` over sampled `Re z > 0`.
    pub gl_arg_excess: f64,
    /// max `|arg(1-e^{-z})| - θ` over `z` in `Σ_θ` with `Re z <= 0`,
    /// `|Im z| <= π`, `θ = 3π/4`.
    pub gl_left_arg_excess: f64,
    /// max `|arg δ_2(e^{-z})^α| - απ/2` over sampled `Re z > 0`.
    pub bdf2_arg_excess: f64,
    /// fitted exponent of `|z^α - (1-e^{-z})^α|` near zero; expect `α+1`.
    pub gl_order_slope: f64,
    /// fitted exponent for the BDF2 symbol; expect `α+2`.
    pub bdf2_order_slope: f64,
}

/// Samples the sector and consistency properties of both symbols.
///
/// `sample_count` is the number of grid points per axis (at least 1).
pub fn check_sector_lemmas(alpha: FractionalOrder, sample_count: usize) -> SectorReport {
    let a = alpha.value();
    let n = sample_count.max(1);
    let mut gl_ex = f64::NEG_INFINITY;
    let mut bdf_ex = f64::NEG_INFINITY;
    for i in 1..=n {
        let x = 3.0 * i as f64 / n as f64;
        for k in 0..=2 * n {
            let y = PI * (k as f64 / n as f64 - 1.0);
            let z = Complex64::new(x, y);
            gl_ex = gl_ex.max(a * one_minus_exp_neg(z).arg().abs() - a * PI / 2.0);
            bdf_ex = bdf_ex.max(a * bdf2_symbol_exp_neg(z).arg().abs() - a * PI / 2.0);
        }
    }
    let theta = 0.75 * PI;
    let mut left = f64::NEG_INFINITY;
    for i in 0..=n {
        // x in [π/tan θ, 0] = [-π, 0]
        let x = -PI * i as f64 / n as f64;
        for k in 0..=2 * n {
            let y = PI * (k as f64 / n as f64 - 1.0);
            let z = Complex64::new(x, y);
            if z.norm() == 0.0 || z.arg().abs() >= theta {
                continue;
            }
            left = left.max(one_minus_exp_neg(z).arg().abs() - theta);
        }
    }
    SectorReport {
        alpha: a,
        gl_arg_excess: gl_ex,
        gl_left_arg_excess: left,
        bdf2_arg_excess: bdf_ex,
        gl_order_slope: symbol_order_slope(CqScheme::Gl, a, 5),
        bdf2_order_slope: symbol_order_slope(CqScheme::Fbdf2, a, 5),
    }
}

/// Least-squares slope of `log|z^β - δ(e^{-z})^β|` against `log|z|` on
/// `|z| ∈ [1e-4, 1e-2]`, pooled over `directions` rays in the right half-plane.
pub fn symbol_order_slope(scheme: CqScheme, beta: f64, directions: usize) -> f64 {
    let dirs = directions.max(1);
    let radii = 21;
    let (mut sx, mut sy, mut sxx, mut sxy, mut cnt) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for d in 0..dirs {
        let phi = if dirs == 1 { 0.0 } else { -0.4 * PI + 0.8 * PI * d as f64 / (dirs - 1) as f64 };
        for r in 0..radii {
            let lr = libm::log(1e-4) + (libm::log(1e-2) - libm::log(1e-4)) * r as f64 / (radii - 1) as f64;
            let z = Complex64::from_polar(libm::exp(lr), phi);
            let s = match scheme {
                CqScheme::Gl => one_minus_exp_neg(z),
                CqScheme::Fbdf2 => bdf2_symbol_exp_neg(z),
            };
            let diff = (z.powf(beta) - s.powf(beta)).norm();
            let ly = libm::log(diff);
            sx += lr;
            sy += ly;
            sxx += lr * lr;
            sxy += lr * ly;
            cnt += 1.0;
        }
    }
    (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx)
}
