//! Two-parameter Mittag-Leffler function `E_{α,β}(x) = Σ x^k / Γ(αk+β)` for
//! real `x`, with `0 < α <= 1` and `0 < β <= 4`.
//!
//! Three regimes are used:
//!
//! * `|x| <= 1` or `x > 0`: the power series in `f64`;
//! * `x < -1` with `|x|^{1/α} <= 36`: the power series with every term and
//!   the running sum carried in double-double precision, which absorbs the
//!   cancellation between terms of size up to `e^{36}`;
//! * beyond that: the algebraic asymptotic expansion
//!   `-Σ_{k>=1} x^{-k} / Γ(β-αk)`, truncated before the terms start to grow.
//!
//! The absolute error target is `1e-12`.

use crate::dd::Dd;
use crate::special::{gamma, ln_gamma, ln_gamma_dd, rgamma, sinpi};
use crate::{Error, Result};

/// Largest `|x|^{1/α}` handled by the double-double series.
pub const SERIES_LIMIT: f64 = 36.0;

const TERM_FLOOR: f64 = 1e-17;
const ASYMPTOTIC_TARGET: f64 = 1e-13;
const MAX_TERMS: usize = 2_000_000;

/// Validated arguments of `E_{α,β}(x)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MlQuery {
    alpha: f64,
    beta: f64,
    x: f64,
}

impl MlQuery {
    pub fn new(alpha: f64, beta: f64, x: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain("alpha", alpha, "0 < alpha <= 1"));
        }
        if !(beta > 0.0 && beta <= 4.0) {
            return Err(Error::domain("beta", beta, "0 < beta <= 4"));
        }
        if !x.is_finite() {
            return Err(Error::domain("x", x, "finite"));
        }
        Ok(MlQuery { alpha, beta, x })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn x(&self) -> f64 {
        self.x
    }
}

/// Which evaluation strategy [`ml_eval`] picks for a query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Series,
    ExtendedSeries,
    Asymptotic,
}

pub fn regime(q: &MlQuery) -> Regime {
    let x = q.x;
    if x >= -1.0 {
        Regime::Series
    } else if libm::pow(-x, 1.0 / q.alpha) <= SERIES_LIMIT {
        Regime::ExtendedSeries
    } else {
        Regime::Asymptotic
    }
}

/// `E_{α,β}(x)`.
pub fn ml_eval(q: MlQuery) -> Result<f64> {
    if q.x == 0.0 {
        return Ok(rgamma(q.beta));
    }
    match regime(&q) {
        Regime::Series => series_f64(q.alpha, q.beta, q.x),
        Regime::ExtendedSeries => series_dd(q.alpha, q.beta, q.x),
        Regime::Asymptotic => asymptotic(q.alpha, q.beta, q.x),
    }
}

/// Convenience wrapper validating and evaluating in one call.
pub fn ml(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    ml_eval(MlQuery::new(alpha, beta, x)?)
}

/// Power series in `f64`, intended for `|x| <= 1` or positive `x`.
pub fn series_f64(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    let ax = x.abs();
    let lx = libm::log(ax);
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut xk: f64 = 1.0;
    let mut prev = f64::INFINITY;
    let mut past_peak = false;
    let mut k = 0usize;
    loop {
        let arg = alpha * k as f64 + beta;
        let term = if arg < 171.0 && xk.is_finite() {
            xk * rgamma(arg)
        } else {
            let t = libm::exp(k as f64 * lx - ln_gamma(arg));
            if x < 0.0 && k % 2 == 1 {
                -t
            } else {
                t
            }
        };
        // Kahan summation
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        let mag = term.abs();
        if k > 0 && mag < prev {
            past_peak = true;
        }
        prev = mag;
        if past_peak && mag <= TERM_FLOOR * sum.abs().max(1.0) {
            return Ok(sum);
        }
        k += 1;
        if k > MAX_TERMS || !sum.is_finite() {
            return Err(Error::AccuracyNotAchieved {
                routine: "mittag_leffler",
                detail: "power series did not converge",
            });
        }
        xk *= x;
    }
}

/// Power series with double-double terms and accumulation.
pub fn series_dd(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    let ln_r = Dd::from_f64(x.abs()).ln();
    let alternate = x < 0.0;
    let mut sum = Dd::ZERO;
    let mut k = 0usize;
    let mut prev = f64::INFINITY;
    let mut past_peak = false;
    loop {
        let arg = Dd::mul_f64_f64(alpha, k as f64).add_f64(beta);
        let lt = ln_r.mul_f64(k as f64) - ln_gamma_dd(arg);
        let mut term = lt.exp();
        if alternate && k % 2 == 1 {
            term = -term;
        }
        sum = sum + term;
        if lt.hi < prev && k > 0 {
            past_peak = true;
        }
        prev = lt.hi;
        if past_peak && lt.hi < -42.0 {
            break;
        }
        k += 1;
        if k > MAX_TERMS || !sum.is_finite() {
            return Err(Error::AccuracyNotAchieved {
                routine: "mittag_leffler",
                detail: "extended-precision series did not converge",
            });
        }
    }
    Ok(sum.to_f64())
}

/// Algebraic asymptotic expansion for large negative `x`.
///
/// Fails with [`Error::AccuracyNotAchieved`] when the truncation estimate
/// exceeds `1e-13`.
pub fn asymptotic(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if x >= 0.0 {
        return Err(Error::domain("x", x, "x < 0 for the asymptotic expansion"));
    }
    let ax = -x;
    let lx = libm::log(ax);
    let mut sum = 0.0;
    // envelope |x|^{-k} Γ(1-z)/π of the terms past the last pole-free one;
    // sin(πz) makes the terms themselves oscillate, so truncation is decided
    // on the envelope
    let mut prev_env = f64::INFINITY;
    let mut smallest = f64::INFINITY;
    let mut k = 1usize;
    loop {
        let z = beta - alpha * k as f64;
        let term;
        if z > 0.0 {
            let r = rgamma(z);
            term = libm::exp(-(k as f64) * lx) * r;
        } else {
            let lg = if 1.0 - z < 171.0 { libm::log(gamma(1.0 - z)) } else { ln_gamma(1.0 - z) };
            let env = libm::exp(lg - k as f64 * lx) / core::f64::consts::PI;
            if env > prev_env {
                break;
            }
            prev_env = env;
            smallest = env;
            // 1/Γ(z) = Γ(1-z) sin(πz)/π
            term = env * sinpi(z);
            if env <= TERM_FLOOR {
                break;
            }
        }
        // -x^{-k}/Γ(β-αk) with x^{-k} = (-1)^k |x|^{-k}
        sum += if k % 2 == 1 { term } else { -term };
        k += 1;
        if k > 1_000_000 {
            break;
        }
    }
    // exponentially small part not represented by the algebraic series
    let s = libm::pow(ax, 1.0 / alpha);
    let exp_part = libm::pow(s, 1.0 - beta) * libm::exp(-s) / alpha;
    let bound = if smallest.is_finite() { smallest } else { 0.0 } + exp_part;
    if bound > ASYMPTOTIC_TARGET || !sum.is_finite() {
        return Err(Error::AccuracyNotAchieved {
            routine: "mittag_leffler",
            detail: "asymptotic truncation error above target",
        });
    }
    Ok(sum)
}

/// `∫_0^t (t-s)^{α-1} E_{α,α}(-λ(t-s)^α) s^μ ds = Γ(μ+1) t^{α+μ} E_{α,α+μ+1}(-λt^α)`.
pub fn ml_conv_weight(alpha: f64, lambda: f64, t: f64, mu: f64) -> Result<f64> {
    if !(mu > -1.0) {
        return Err(Error::domain("mu", mu, "mu > -1"));
    }
    Ok(gamma(mu + 1.0) * ml_conv_weight_normalized(alpha, lambda, t, mu)?)
}

/// `t^{α+μ} E_{α,α+μ+1}(-λt^α)`: the response to the source `t^μ/Γ(μ+1)`.
/// Finite for `μ >= -1`, where `μ = -1` is the impulse response.
pub fn ml_conv_weight_normalized(alpha: f64, lambda: f64, t: f64, mu: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::domain("t", t, "t > 0"));
    }
    if !(lambda >= 0.0) {
        return Err(Error::domain("lambda", lambda, "lambda >= 0"));
    }
    if !(mu >= -1.0) {
        return Err(Error::domain("mu", mu, "mu >= -1"));
    }
    let ta = libm::pow(t, alpha);
    let e = ml(alpha, alpha + mu + 1.0, -lambda * ta)?;
    Ok(libm::pow(t, alpha + mu) * e)
}
