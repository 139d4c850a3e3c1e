//! Separable power-type sources `f(x,t) = Σ c_i t^{μ_i} g_i(x)` and initial
//! data.
//!
//! Each time factor is stored in the Riemann-Liouville normalization
//! `a·t^μ/Γ(μ+1)` (see [`TimePower`]). In that form the iterated
//! antiderivatives are `a·t^{μ+k}/Γ(μ+k+1)`, which stay finite when a
//! coefficient ratio such as `Γ(ν+1)/Γ(ν+1-α)` meets a pole.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::special::{gamma, rgamma};
use crate::{Error, Result};

/// Time factor `a·t^μ/Γ(μ+1)`.
///
/// `μ = -1` is allowed: the factor then vanishes for `t > 0` but its
/// antiderivatives do not, which represents the limit of a vanishing
/// coefficient times a pole.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimePower {
    pub amplitude: f64,
    pub exponent: f64,
}

impl TimePower {
    /// `c·t^μ`, requiring `μ > -1`.
    pub fn from_power(c: f64, mu: f64) -> Result<Self> {
        if !(mu > -1.0) || !mu.is_finite() {
            return Err(Error::domain("mu", mu, "mu > -1"));
        }
        if !c.is_finite() {
            return Err(Error::domain("c", c, "finite"));
        }
        Ok(TimePower { amplitude: c * gamma(mu + 1.0), exponent: mu })
    }

    /// `a·t^μ/Γ(μ+1)`, requiring `μ >= -1`.
    pub fn normalized(amplitude: f64, exponent: f64) -> Result<Self> {
        if !(exponent >= -1.0) || !exponent.is_finite() {
            return Err(Error::domain("mu", exponent, "mu >= -1"));
        }
        if !amplitude.is_finite() {
            return Err(Error::domain("amplitude", amplitude, "finite"));
        }
        Ok(TimePower { amplitude, exponent })
    }

    /// The coefficient `c` of `c·t^μ`; zero when `μ = -1`.
    pub fn coefficient(&self) -> f64 {
        self.amplitude * rgamma(self.exponent + 1.0)
    }

    /// `order`-fold antiderivative from zero at time `t`; `order = 0` is the
    /// factor itself. Zero for `t <= 0` when `order >= 1`.
    pub fn integral(&self, order: u32, t: f64) -> f64 {
        let p = self.exponent + order as f64;
        if t <= 0.0 {
            return if order == 0 && t == 0.0 { self.value_at_zero() } else { 0.0 };
        }
        self.amplitude * libm::pow(t, p) * rgamma(p + 1.0)
    }

    fn value_at_zero(&self) -> f64 {
        let mu = self.exponent;
        if mu > 0.0 || self.amplitude == 0.0 {
            0.0
        } else if mu == 0.0 {
            self.amplitude
        } else if mu == -1.0 {
            0.0
        } else {
            libm::copysign(f64::INFINITY, self.amplitude)
        }
    }

    /// `f(t)`.
    pub fn value(&self, t: f64) -> f64 {
        self.integral(0, t)
    }

    /// BDF2 difference `τ^{-1}(3/2 G(t_n) - 2 G(t_{n-1}) + 1/2 G(t_{n-2}))` of
    /// the `order`-fold antiderivative `G`, with `G = 0` for `t <= 0`.
    ///
    /// For `n >= 3` the bracket is formed from `expm1`/`log1p` so that it does
    /// not lose digits when `n` is large.
    pub fn bdf2_difference(&self, order: u32, n: usize, tau: f64) -> f64 {
        debug_assert!(order >= 1);
        let p = self.exponent + order as f64;
        if n == 0 || self.amplitude == 0.0 {
            return 0.0;
        }
        if n <= 2 {
            let g = |m: usize| self.integral(order, m as f64 * tau);
            return (1.5 * g(n) - 2.0 * g(n - 1) + 0.5 * g(n.saturating_sub(2))) / tau;
        }
        let nf = n as f64;
        let e1 = libm::expm1(p * libm::log1p(-1.0 / nf));
        let e2 = libm::expm1(p * libm::log1p(-2.0 / nf));
        let bracket = -2.0 * e1 + 0.5 * e2;
        self.amplitude * libm::pow(tau, p - 1.0) * libm::pow(nf, p) * bracket * rgamma(p + 1.0)
    }
}

/// Spatial shape of a source term or of the initial data.
#[derive(Clone, Debug, PartialEq)]
pub enum Profile {
    Zero,
    Constant(f64),
    /// `x^p` (1D only).
    Power(f64),
    /// Indicator of the closed interval `[a, b]` (1D).
    Indicator { a: f64, b: f64 },
    /// Indicator of the closed box `[x0, x1] × [y0, y1]` (2D).
    Indicator2d { x0: f64, x1: f64, y0: f64, y1: f64 },
    /// `sin(nπx)` in 1D, `sin(nπx) sin(mπy)` in 2D.
    Sine { n: u32, m: u32 },
}

impl Profile {
    /// Parses the textual registry used in configuration files:
    /// `zero`, `const:C`, `pow:P`, `indicator:A,B`,
    /// `indicator2d:A,B` (square) or `indicator2d:X0,X1,Y0,Y1`, `sin:N` or
    /// `sin:N,M`.
    pub fn parse(s: &str) -> Result<Profile> {
        let s = s.trim();
        let err = |reason: &'static str| Error::Parse { input: s.to_string(), reason };
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a)),
            None => (s, None),
        };
        let nums = |a: Option<&str>| -> Result<Vec<f64>> {
            let a = a.ok_or_else(|| err("missing arguments"))?;
            a.split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| err("invalid number")))
                .collect()
        };
        let p = match name {
            "zero" => {
                if args.is_some() {
                    return Err(err("`zero` takes no arguments"));
                }
                Profile::Zero
            }
            "const" | "constant" => match args {
                None => Profile::Constant(1.0),
                Some(_) => match nums(args)?.as_slice() {
                    [c] => Profile::Constant(*c),
                    _ => return Err(err("expected one value")),
                },
            },
            "pow" => match nums(args)?.as_slice() {
                [p] => Profile::Power(*p),
                _ => return Err(err("expected one exponent")),
            },
            "indicator" => match nums(args)?.as_slice() {
                [a, b] => Profile::Indicator { a: *a, b: *b },
                _ => return Err(err("expected two endpoints")),
            },
            "indicator2d" => match nums(args)?.as_slice() {
                [a, b] => Profile::Indicator2d { x0: *a, x1: *b, y0: *a, y1: *b },
                [x0, x1, y0, y1] => Profile::Indicator2d { x0: *x0, x1: *x1, y0: *y0, y1: *y1 },
                _ => return Err(err("expected two or four values")),
            },
            "sin" => {
                let v = nums(args)?;
                let as_u32 = |x: f64| -> Result<u32> {
                    if x >= 1.0 && x == libm::floor(x) && x < 1e6 {
                        Ok(x as u32)
                    } else {
                        Err(err("sine index must be a positive integer"))
                    }
                };
                match v.as_slice() {
                    [n] => Profile::Sine { n: as_u32(*n)?, m: 0 },
                    [n, m] => Profile::Sine { n: as_u32(*n)?, m: as_u32(*m)? },
                    _ => return Err(err("expected one or two indices")),
                }
            }
            _ => return Err(err("unknown profile")),
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let bad = |name, v| Err(Error::domain(name, v, "a valid profile parameter"));
        match *self {
            Profile::Constant(c) if !c.is_finite() => bad("const", c),
            Profile::Power(p) if !(p > -1.0 && p.is_finite()) => bad("pow", p),
            Profile::Indicator { a, b } if !(a <= b) => bad("indicator", a),
            Profile::Indicator2d { x0, x1, y0, y1 } if !(x0 <= x1 && y0 <= y1) => bad("indicator2d", x0),
            _ => Ok(()),
        }
    }

    /// Canonical text form, accepted by [`Profile::parse`].
    pub fn to_config_string(&self) -> String {
        use alloc::format;
        match self {
            Profile::Zero => "zero".into(),
            Profile::Constant(c) => format!("const:{c}"),
            Profile::Power(p) => format!("pow:{p}"),
            Profile::Indicator { a, b } => format!("indicator:{a},{b}"),
            Profile::Indicator2d { x0, x1, y0, y1 } => format!("indicator2d:{x0},{x1},{y0},{y1}"),
            Profile::Sine { n, m: 0 } => format!("sin:{n}"),
            Profile::Sine { n, m } => format!("sin:{n},{m}"),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Profile::Zero) || matches!(self, Profile::Constant(c) if *c == 0.0)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Profile::Zero => "zero",
            Profile::Constant(_) => "const",
            Profile::Power(_) => "pow",
            Profile::Indicator { .. } => "indicator",
            Profile::Indicator2d { .. } => "indicator2d",
            Profile::Sine { .. } => "sin",
        }
    }

    /// Point value; `y` is ignored for 1D profiles. Closed indicators take
    /// the value 1 on their boundary.
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        let v = match *self {
            Profile::Zero => 0.0,
            Profile::Constant(c) => c,
            Profile::Power(p) => {
                if x > 0.0 {
                    libm::pow(x, p)
                } else if p >= 0.0 && x == 0.0 {
                    libm::pow(0.0, p)
                } else {
                    f64::NAN
                }
            }
            Profile::Indicator { a, b } => (a <= x && x <= b) as u8 as f64,
            Profile::Indicator2d { x0, x1, y0, y1 } => {
                (x0 <= x && x <= x1 && y0 <= y && y <= y1) as u8 as f64
            }
            Profile::Sine { n, m } => {
                let sx = crate::special::sinpi(n as f64 * x);
                if m == 0 {
                    sx
                } else {
                    sx * crate::special::sinpi(m as f64 * y)
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::ProfileEvaluation { profile: self.name(), x, y })
        }
    }
}

/// One separable term `time(t)·profile(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SourceTerm {
    pub time: TimePower,
    pub profile: Profile,
}

/// Finite sum of separable terms.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SourceSpec {
    terms: Vec<SourceTerm>,
}

impl SourceSpec {
    pub fn new(terms: Vec<SourceTerm>) -> Self {
        SourceSpec { terms }
    }

    pub fn zero() -> Self {
        SourceSpec::default()
    }

    /// Adds `c·t^μ·g(x)`; rejects `μ <= -1`.
    pub fn with_power_term(mut self, c: f64, mu: f64, profile: Profile) -> Result<Self> {
        self.terms.push(SourceTerm { time: TimePower::from_power(c, mu)?, profile });
        Ok(self)
    }

    /// `(1 + t^μ)·g(x)`.
    pub fn one_plus_power(mu: f64, profile: Profile) -> Result<Self> {
        SourceSpec::zero()
            .with_power_term(1.0, 0.0, profile.clone())?
            .with_power_term(1.0, mu, profile)
    }

    pub fn push(&mut self, term: SourceTerm) {
        self.terms.push(term);
    }

    pub fn terms(&self) -> &[SourceTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.time.amplitude == 0.0 || t.profile.is_zero())
    }

    /// Termwise time factors of `f(t)`.
    pub fn eval_f(&self, t: f64) -> Vec<f64> {
        self.terms.iter().map(|s| s.time.value(t)).collect()
    }

    /// Termwise time factors of `F(t) = ∫_0^t f`.
    #[allow(non_snake_case)]
    pub fn eval_F(&self, t: f64) -> Vec<f64> {
        self.terms.iter().map(|s| s.time.integral(1, t)).collect()
    }

    /// Termwise time factors of `F̃(t) = ∫_0^t F`; zero for `t <= 0`.
    #[allow(non_snake_case)]
    pub fn eval_Ftilde(&self, t: f64) -> Vec<f64> {
        self.terms.iter().map(|s| s.time.integral(2, t)).collect()
    }
}

/// Initial data `u(·,0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InitialData {
    pub profile: Profile,
}

impl InitialData {
    pub fn zero() -> Self {
        InitialData { profile: Profile::Zero }
    }

    pub fn new(profile: Profile) -> Self {
        InitialData { profile }
    }

    pub fn is_zero(&self) -> bool {
        self.profile.is_zero()
    }
}

/// The initial data acts like the source `t^{-α}/Γ(1-α)·u⁰`; this returns
/// that time factor.
pub fn initial_data_power(alpha: f64) -> TimePower {
    TimePower { amplitude: 1.0, exponent: -alpha }
}

/// `t^{order-α}/Γ(order+1-α)·u⁰`, the initial-data contribution to the
/// right-hand side before any difference operator is applied.
pub fn correction_terms(alpha: crate::FractionalOrder, u0: &[f64], t: f64, order: u32) -> Vec<f64> {
    let s = initial_data_power(alpha.value()).integral(order, t);
    u0.iter().map(|v| s * v).collect()
}
