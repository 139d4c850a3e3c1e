//! Gamma-type special functions.

use crate::dd::Dd;
use core::f64::consts::PI;

/// `Γ(x)`.
#[inline]
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `ln|Γ(x)|`.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `sin(πx)`, exact zero at integers.
pub fn sinpi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = x - 2.0 * libm::round(0.5 * x);
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    if r.abs() <= 0.25 {
        libm::sin(PI * r)
    } else {
        libm::copysign(libm::cos(PI * (0.5 - r.abs())), r)
    }
}

/// `1/Γ(x)`, entire: zero at the non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if x > 0.0 {
        if x < 171.0 {
            1.0 / gamma(x)
        } else {
            libm::exp(-ln_gamma(x))
        }
    } else if x == libm::floor(x) {
        0.0
    } else {
        // reflection: 1/Γ(x) = Γ(1-x) sin(πx) / π
        let s = sinpi(x) / PI;
        let y = 1.0 - x;
        if y < 171.0 {
            gamma(y) * s
        } else {
            libm::exp(ln_gamma(y)) * s
        }
    }
}

/// `Γ(a)/Γ(b)` with the convention that a pole of the denominator gives zero.
///
/// A pole in the numerator is reported as infinity.
pub fn gamma_ratio(a: f64, b: f64) -> f64 {
    let num_pole = a <= 0.0 && a == libm::floor(a);
    if num_pole {
        return f64::INFINITY;
    }
    let rb = rgamma(b);
    if rb == 0.0 {
        return 0.0;
    }
    if a < 171.0 && b < 171.0 {
        gamma(a) * rb
    } else {
        let (la, sa) = libm::lgamma_r(a);
        let (lb, sb) = libm::lgamma_r(b);
        (sa * sb) as f64 * libm::exp(la - lb)
    }
}

const HALF_LN_2PI: Dd = Dd { hi: 0.9189385332046728, lo: -3.8782941580672414e-17 };

// B_{2k} / (2k (2k-1)), k = 1..15
const STIRLING: [Dd; 15] = [
    Dd { hi: 0.08333333333333333, lo: 4.625929269271485e-18 },
    Dd { hi: -0.002777777777777778, lo: 1.0601087908747154e-19 },
    Dd { hi: 0.0007936507936507937, lo: 6.883823317368282e-22 },
    Dd { hi: -0.0005952380952380953, lo: 5.36938218754726e-20 },
    Dd { hi: 0.0008417508417508417, lo: 3.6870174889237694e-20 },
    Dd { hi: -0.0019175269175269176, lo: 1.0675702776872475e-19 },
    Dd { hi: 0.00641025641025641, lo: 2.2240044563805217e-19 },
    Dd { hi: -0.029550653594771242, lo: 4.861760957508855e-19 },
    Dd { hi: 0.17964437236883057, lo: -6.401600482710946e-19 },
    Dd { hi: -1.3924322169059011, lo: 1.5837056989230303e-17 },
    Dd { hi: 13.402864044168393, lo: -6.154114101993966e-16 },
    Dd { hi: -156.84828462600203, lo: 9.391823141715389e-15 },
    Dd { hi: 2193.1033333333335, lo: -1.3339255626002948e-13 },
    Dd { hi: -36108.77125372499, lo: 5.897583353514365e-13 },
    Dd { hi: 691472.268851313, lo: 2.5585296305158e-11 },
];

/// `ln Γ(z)` in double-double precision for `z > 0`.
pub fn ln_gamma_dd(z: Dd) -> Dd {
    debug_assert!(z.hi > 0.0);
    let mut w = z;
    let mut prod = Dd::ONE;
    let mut shifted = false;
    while w.hi < 25.0 {
        prod = prod * w;
        w = w.add_f64(1.0);
        shifted = true;
    }
    let inv = w.recip();
    let inv2 = inv.sqr();
    let mut series = STIRLING[14];
    for c in STIRLING[..14].iter().rev() {
        series = series * inv2 + *c;
    }
    series = series * inv;
    let lw = w.ln();
    let mut out = (w.add_f64(-0.5)) * lw - w + HALF_LN_2PI + series;
    if shifted {
        out = out - prod.ln();
    }
    out
}
