//! Weight sequences against independent constructions: the closed Gamma-ratio
//! form, Miller's power recurrence, and an FFT of the symbol sampled on a
//! circle of radius ρ < 1.

use fracsub_core::cq_weights::{self, check_sector_lemmas, symbol_order_slope, WeightCache};
use fracsub_core::special::{gamma, ln_gamma};
use fracsub_core::{apply_cq, fbdf2_weights, gl_weights, CqScheme, FractionalOrder};
use num_complex::Complex64;
use proptest::prelude::*;
use rustfft::FftPlanner;

fn fo(a: f64) -> FractionalOrder {
    FractionalOrder::new(a).unwrap()
}

/// Coefficients of `P(ξ)^α` for a polynomial `P` with `P(0) != 0`.
fn miller(p: &[f64], alpha: f64, n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n + 1];
    c[0] = p[0].powf(alpha);
    for m in 1..=n {
        let mut s = 0.0;
        for k in 1..p.len().min(m + 1) {
            s += ((alpha + 1.0) * k as f64 - m as f64) * p[k] * c[m - k];
        }
        c[m] = s / (m as f64 * p[0]);
    }
    c
}

/// Taylor coefficients of `f` from `len` samples on `|ξ| = ρ`.
fn fft_coefficients(f: impl Fn(Complex64) -> Complex64, n: usize) -> Vec<f64> {
    let len = 16 * (n + 1);
    let rho = 10f64.powf(-16.0 / len as f64);
    let mut buf: Vec<Complex64> = (0..len)
        .map(|m| f(Complex64::from_polar(rho, 2.0 * std::f64::consts::PI * m as f64 / len as f64)))
        .collect();
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(len).process(&mut buf);
    (0..=n).map(|j| buf[j].re / len as f64 * rho.powi(-(j as i32))).collect()
}

fn gl_closed_form(alpha: f64, j: usize) -> f64 {
    // Γ(j-α)/(Γ(-α)Γ(j+1)); sign from Γ(-α) < 0
    if j == 0 {
        return 1.0;
    }
    -(ln_gamma(j as f64 - alpha) - ln_gamma(j as f64 + 1.0)).exp() / gamma(-alpha).abs()
}

#[test]
fn gl_matches_gamma_ratio() {
    for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let w = gl_weights(fo(a), 4096);
        for j in [0usize, 1, 2, 3, 10, 100, 1000, 4096] {
            let want = gl_closed_form(a, j);
            // the log-Gamma difference carries about ulp(lnΓ(j+1)) relative error
            let tol = (1e-14 + 4e-16 * ln_gamma(j as f64 + 1.0)) * want.abs();
            assert!((w.weights()[j] - want).abs() <= tol, "a={a} j={j}");
        }
    }
}

#[test]
fn gl_first_weights_by_hand() {
    let w = gl_weights(fo(0.3), 3);
    let w = w.weights();
    assert_eq!(w[0], 1.0);
    assert!((w[1] + 0.3).abs() < 1e-16);
    assert!((w[2] - 0.3 * (0.3 - 1.0) / 2.0).abs() < 1e-16);
    assert!((w[3] + 0.3 * (0.3 - 1.0) * (0.3 - 2.0) / 6.0).abs() < 1e-16);
}

#[test]
fn weights_match_miller_recurrence() {
    for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let n = 4096;
        let gl = miller(&[1.0, -1.0], a, n);
        let bdf = miller(&[1.5, -2.0, 0.5], a, n);
        let wg = gl_weights(fo(a), n);
        let wb = fbdf2_weights(fo(a), n);
        for j in 0..=n {
            assert!((wg.weights()[j] - gl[j]).abs() <= 1e-12, "gl a={a} j={j}");
            assert!((wb.weights()[j] - bdf[j]).abs() <= 1e-12, "bdf2 a={a} j={j}");
        }
    }
}

#[test]
fn weights_match_fft_of_symbol() {
    for (a, n) in [(0.3, 64usize), (0.1, 4096), (0.5, 4096), (0.9, 4096)] {
        for scheme in [CqScheme::Gl, CqScheme::Fbdf2] {
            let k = cq_weights::weights(scheme, fo(a), n);
            let want = fft_coefficients(|xi| k.symbol(xi), n);
            let worst = k
                .weights()
                .iter()
                .zip(&want)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            assert!(worst <= 1e-12, "{scheme:?} a={a} n={n}: {worst:e}");
        }
    }
}

#[test]
fn fbdf2_leading_weights() {
    let a = 0.4;
    let w = fbdf2_weights(fo(a), 2);
    let w = w.weights();
    let c0 = 1.5f64.powf(a);
    assert!((w[0] - c0).abs() < 1e-15);
    assert!((w[1] - (-2.0 * a * c0 / 1.5)).abs() < 1e-15);
}

#[test]
fn gl_partial_sums_positive_and_decreasing() {
    let a = 0.5;
    let w = gl_weights(fo(a), 10_000);
    let mut s = 0.0;
    let mut prev = f64::INFINITY;
    for (j, x) in w.weights().iter().enumerate() {
        s += x;
        assert!(s > 0.0 && s <= prev, "j={j}");
        prev = s;
    }
    // Σ_{j<=n} w_j = Γ(n+1-α)/(Γ(1-α)Γ(n+1)) = 5.64182531222042006e-3 at n = 10⁴
    assert!((s - 5.641_825_312_220_420_06e-3).abs() < 1e-14, "{s}");
}

#[test]
fn cache_returns_prefix_consistent_weights() {
    let mut cache = WeightCache::new();
    let short = cache.get(CqScheme::Fbdf2, fo(0.6), 10).to_vec();
    let long = cache.get(CqScheme::Fbdf2, fo(0.6), 100).to_vec();
    assert!(long.len() >= 101);
    assert_eq!(&long[..11], &short[..11]);
    assert_eq!(long[..101], fbdf2_weights(fo(0.6), 100).weights()[..101]);
}

#[test]
fn sector_properties_hold() {
    for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let r = check_sector_lemmas(fo(a), 120);
        assert!(r.gl_arg_excess <= 1e-12, "{r:?}");
        assert!(r.bdf2_arg_excess <= 1e-12, "{r:?}");
        assert!(r.gl_left_arg_excess <= 1e-12, "{r:?}");
        assert!((r.gl_order_slope - (a + 1.0)).abs() < 0.05, "{r:?}");
        assert!((r.bdf2_order_slope - (a + 2.0)).abs() < 0.05, "{r:?}");
    }
    assert!((symbol_order_slope(CqScheme::Gl, 1.0, 3) - 2.0).abs() < 0.05);
}

/// `τ^{-α} Σ w_j u(t_{n-j})` for `u(t) = t` on `[0, 1]` against `t^{1-α}/Γ(2-α)`.
fn derivative_of_identity_error(scheme: CqScheme, a: f64, n: usize) -> f64 {
    let tau = 1.0 / n as f64;
    let k = cq_weights::weights(scheme, fo(a), n);
    let hist: Vec<Vec<f64>> = (0..=n).map(|j| vec![j as f64 * tau]).collect();
    let got = apply_cq(&k, tau, &hist).unwrap()[0];
    (got - 1.0 / gamma(2.0 - a)).abs()
}

#[test]
fn cq_of_linear_function_converges_at_nominal_order() {
    for a in [0.2, 0.5, 0.8] {
        for (scheme, order) in [(CqScheme::Gl, 1.0), (CqScheme::Fbdf2, 2.0)] {
            let e1 = derivative_of_identity_error(scheme, a, 400);
            let e2 = derivative_of_identity_error(scheme, a, 800);
            let r = (e1 / e2).log2();
            assert!((r - order).abs() < 0.1, "{scheme:?} a={a}: rate {r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn apply_cq_is_linear(
        a in 0.05f64..0.95,
        tau in 1e-3f64..1.0,
        xs in prop::collection::vec(-10.0f64..10.0, 1..40),
        c in -5.0f64..5.0,
        bdf in any::<bool>(),
    ) {
        let scheme = if bdf { CqScheme::Fbdf2 } else { CqScheme::Gl };
        let k = cq_weights::weights(scheme, fo(a), xs.len());
        let u: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x, 1.0]).collect();
        let v: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x * x, -x]).collect();
        let w: Vec<Vec<f64>> = u.iter().zip(&v).map(|(p, q)| vec![p[0] + c * q[0], p[1] + c * q[1]]).collect();
        let au = apply_cq(&k, tau, &u).unwrap();
        let av = apply_cq(&k, tau, &v).unwrap();
        let aw = apply_cq(&k, tau, &w).unwrap();
        for i in 0..2 {
            let want = au[i] + c * av[i];
            prop_assert!((aw[i] - want).abs() <= 1e-9 * (1.0 + want.abs() + au[i].abs() + (c * av[i]).abs()));
        }
    }

    #[test]
    fn symbol_matches_truncated_series(a in 0.05f64..0.95, r in 0.0f64..0.5, th in -3.14f64..3.14) {
        let xi = Complex64::from_polar(r, th);
        for scheme in [CqScheme::Gl, CqScheme::Fbdf2] {
            let k = cq_weights::weights(scheme, fo(a), 80);
            let mut p = Complex64::new(1.0, 0.0);
            let mut s = Complex64::new(0.0, 0.0);
            for w in k.weights() {
                s += p * *w;
                p *= xi;
            }
            prop_assert!((s - k.symbol(xi)).norm() < 1e-13);
        }
    }
}
