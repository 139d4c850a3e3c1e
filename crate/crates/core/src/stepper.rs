//! Time stepping for `∂_t^α u + L u = f`, `u(0) = u⁰`, where `L` is a
//! scalar rate `κ`, a diagonal (modal) operator or the nodal `-Δ_h`.
//!
//! Four schemes are provided:
//!
//! * GLBE: Grünwald-Letnikov convolution quadrature applied to
//!   `U(t) = ∫_0^t u`, driven by the exact source antiderivative `F` and the
//!   initial-data term `t^{1-α}/Γ(2-α)·u⁰`; `u^n = (U^n - U^{n-1})/τ`.
//! * FBDF22: fractional BDF2 quadrature applied to `U`, driven by BDF2
//!   differences of `F̃ = ∫ F` and of `t^{2-α}/Γ(3-α)·u⁰`;
//!   `u^n = (3/2 U^n - 2U^{n-1} + 1/2 U^{n-2})/τ` with `U^{-1} = 0`.
//! * Corrected BE and uncorrected SBD: the quadrature applied directly to
//!   `u - u⁰` with point values `f(t_n)`.
//!
//! All right-hand-side time factors are tabulated once per run, so a
//! separable source costs one scalar per term and step.

use alloc::vec;
use alloc::vec::Vec;

use crate::cq_weights::{gl_weights, fbdf2_weights, CqScheme, FractionalOrder};
use crate::source::{initial_data_power, TimePower};
use crate::spatial::{ShiftedSolver, SpatialOperator};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TimeScheme {
    Glbe,
    Fbdf22,
    CorrectedBe,
    UncorrectedSbd,
}

impl TimeScheme {
    pub const ALL: [TimeScheme; 4] =
        [TimeScheme::Glbe, TimeScheme::Fbdf22, TimeScheme::CorrectedBe, TimeScheme::UncorrectedSbd];

    pub fn kernel(self) -> CqScheme {
        match self {
            TimeScheme::Glbe | TimeScheme::CorrectedBe => CqScheme::Gl,
            TimeScheme::Fbdf22 | TimeScheme::UncorrectedSbd => CqScheme::Fbdf2,
        }
    }

    /// Schemes that step the time-integrated unknown `U`.
    pub fn integrated(self) -> bool {
        matches!(self, TimeScheme::Glbe | TimeScheme::Fbdf22)
    }

    pub fn name(self) -> &'static str {
        match self {
            TimeScheme::Glbe => "glbe",
            TimeScheme::Fbdf22 => "fbdf22",
            TimeScheme::CorrectedBe => "cbe",
            TimeScheme::UncorrectedSbd => "usbd",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "glbe" => Some(TimeScheme::Glbe),
            "fbdf22" => Some(TimeScheme::Fbdf22),
            "cbe" | "corrected-be" | "correctedbe" => Some(TimeScheme::CorrectedBe),
            "usbd" | "uncorrected-sbd" | "uncorrectedsbd" => Some(TimeScheme::UncorrectedSbd),
            _ => None,
        }
    }

    /// Expected order of convergence for sources in the admissible class.
    pub fn nominal_order(self) -> f64 {
        match self {
            TimeScheme::Glbe | TimeScheme::CorrectedBe => 1.0,
            TimeScheme::Fbdf22 | TimeScheme::UncorrectedSbd => 2.0,
        }
    }
}

/// Uniform grid `t_n = n·T/N`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeGrid {
    t_final: f64,
    n: usize,
}

impl TimeGrid {
    pub fn new(t_final: f64, n: usize) -> Result<Self> {
        if !(t_final > 0.0 && t_final.is_finite()) {
            return Err(Error::domain("T", t_final, "T > 0"));
        }
        if n == 0 {
            return Err(Error::domain("N", 0.0, "N >= 1"));
        }
        Ok(TimeGrid { t_final, n })
    }

    pub fn steps(&self) -> usize {
        self.n
    }

    pub fn t_final(&self) -> f64 {
        self.t_final
    }

    pub fn tau(&self) -> f64 {
        self.t_final / self.n as f64
    }

    pub fn t(&self, k: usize) -> f64 {
        k as f64 * self.t_final / self.n as f64
    }
}

/// Scheme, order and grid of one run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepperConfig {
    pub scheme: TimeScheme,
    pub alpha: FractionalOrder,
    pub grid: TimeGrid,
}

impl StepperConfig {
    pub fn new(scheme: TimeScheme, alpha: FractionalOrder, grid: TimeGrid) -> Self {
        StepperConfig { scheme, alpha, grid }
    }
}

/// Everything about a run that does not depend on the spatial operator:
/// quadrature weights and the per-step time factors of every source term.
#[derive(Clone, Debug)]
pub struct StepTables {
    cfg: StepperConfig,
    weights: Vec<f64>,
    /// `Σ_{j<n} w_j`, used by the direct schemes.
    partial: Vec<f64>,
    /// `factors[i][n-1]` multiplies the spatial vector of term `i` at step
    /// `n`; for the integrated schemes the last row belongs to `u⁰`.
    factors: Vec<Vec<f64>>,
    n_terms: usize,
    tau_alpha: f64,
}

impl StepTables {
    pub fn new(cfg: StepperConfig, terms: &[TimePower]) -> Result<Self> {
        let n = cfg.grid.steps();
        let tau = cfg.grid.tau();
        let a = cfg.alpha.value();
        let weights = match cfg.scheme.kernel() {
            CqScheme::Gl => gl_weights(cfg.alpha, n),
            CqScheme::Fbdf2 => fbdf2_weights(cfg.alpha, n),
        }
        .weights()
        .to_vec();
        let mut partial = Vec::with_capacity(n + 1);
        let mut s = 0.0;
        for w in &weights {
            partial.push(s);
            s += w;
        }
        let row = |p: &TimePower| -> Vec<f64> {
            (1..=n)
                .map(|k| match cfg.scheme {
                    TimeScheme::Glbe => p.integral(1, cfg.grid.t(k)),
                    TimeScheme::Fbdf22 => p.bdf2_difference(2, k, tau),
                    TimeScheme::CorrectedBe | TimeScheme::UncorrectedSbd => p.value(cfg.grid.t(k)),
                })
                .collect()
        };
        let mut factors: Vec<Vec<f64>> = terms.iter().map(row).collect();
        if cfg.scheme.integrated() {
            factors.push(row(&initial_data_power(a)));
        }
        for r in &factors {
            if let Some(k) = r.iter().position(|v| !v.is_finite()) {
                return Err(Error::domain("source value", r[k], "finite at every t_n > 0"));
            }
        }
        Ok(StepTables { cfg, weights, partial, factors, n_terms: terms.len(), tau_alpha: libm::pow(tau, -a) })
    }

    pub fn config(&self) -> &StepperConfig {
        &self.cfg
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Time factor of source term `i` at step `n >= 1`.
    pub fn factor(&self, i: usize, n: usize) -> f64 {
        self.factors[i][n - 1]
    }

    /// Leading coefficient `τ^{-α} w_0` of the implicit system.
    pub fn shift(&self) -> f64 {
        self.tau_alpha * self.weights[0]
    }

    /// Runs one scalar mode `∂^α u + κu = Σ_i g_i f_i(t)`, `u(0) = u0`, and
    /// returns `u^N`.
    pub fn run_mode(&self, kappa: f64, g: &[f64], u0: f64) -> Result<f64> {
        let mut out = [0.0];
        self.run_mode_into(kappa, g, u0, None, &mut out)?;
        Ok(out[0])
    }

    /// Scalar run returning `u^1..u^N`.
    pub fn run_mode_history(&self, kappa: f64, g: &[f64], u0: f64) -> Result<Vec<f64>> {
        let mut out = [0.0];
        let mut hist = Vec::with_capacity(self.cfg.grid.steps());
        self.run_mode_into(kappa, g, u0, Some(&mut hist), &mut out)?;
        Ok(hist.into_iter().map(|v| v[0]).collect())
    }

    fn run_mode_into(
        &self,
        kappa: f64,
        g: &[f64],
        u0: f64,
        hist: Option<&mut Vec<Vec<f64>>>,
        out: &mut [f64; 1],
    ) -> Result<()> {
        let sys = ScalarSystem::new(self.shift() + kappa)?;
        let gs: Vec<[f64; 1]> = g.iter().map(|v| [*v]).collect();
        let gref: Vec<&[f64]> = gs.iter().map(|v| &v[..]).collect();
        run_system(self, &sys, &gref, &[u0], hist, out)
    }
}

/// An implicit linear system `(shift + L) x = b`.
pub trait ImplicitSystem {
    fn dim(&self) -> usize;
    /// Overwrites `b` with `(shift + L)⁻¹ b`.
    fn solve_shifted(&self, b: &mut [f64]) -> Result<()>;
}

/// `(shift + κ)` as a one-dimensional system.
struct ScalarSystem {
    d: f64,
}

impl ScalarSystem {
    fn new(d: f64) -> Result<Self> {
        if d == 0.0 || !d.is_finite() {
            return Err(Error::AccuracyNotAchieved { routine: "stepper", detail: "singular scalar step" });
        }
        Ok(ScalarSystem { d })
    }
}

impl ImplicitSystem for ScalarSystem {
    fn dim(&self) -> usize {
        1
    }
    fn solve_shifted(&self, b: &mut [f64]) -> Result<()> {
        b[0] /= self.d;
        Ok(())
    }
}

/// Diagonal system `L = diag(κ)`.
pub struct DiagonalSystem {
    inv: Vec<f64>,
}

impl DiagonalSystem {
    pub fn new(shift: f64, kappa: &[f64]) -> Result<Self> {
        let inv = kappa
            .iter()
            .map(|k| {
                let d = shift + k;
                if d == 0.0 {
                    Err(Error::AccuracyNotAchieved { routine: "stepper", detail: "singular diagonal step" })
                } else {
                    Ok(1.0 / d)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DiagonalSystem { inv })
    }
}

impl ImplicitSystem for DiagonalSystem {
    fn dim(&self) -> usize {
        self.inv.len()
    }
    fn solve_shifted(&self, b: &mut [f64]) -> Result<()> {
        for (x, d) in b.iter_mut().zip(&self.inv) {
            *x *= d;
        }
        Ok(())
    }
}

/// Nodal system `L = -Δ_h` solved with a prepared shifted solver.
pub struct NodalSystem<'a> {
    solver: ShiftedSolver<'a>,
    dim: usize,
}

impl<'a> NodalSystem<'a> {
    pub fn new(op: &'a SpatialOperator, shift: f64, method: crate::spatial::SolveMethod) -> Result<Self> {
        Ok(NodalSystem { solver: op.shifted_factor(shift, method)?, dim: op.dof() })
    }
}

impl ImplicitSystem for NodalSystem<'_> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn solve_shifted(&self, b: &mut [f64]) -> Result<()> {
        let x = self.solver.solve(b)?;
        b.copy_from_slice(&x);
        Ok(())
    }
}

/// Runs a scheme on a general implicit system and writes `u^N` into `out`.
///
/// `g[i]` is the spatial vector of source term `i` (same order as the
/// powers passed to [`StepTables::new`]); `sys` must already include the
/// shift returned by [`StepTables::shift`]. When `hist` is given, `u^1..u^N`
/// are appended to it.
pub fn run_system<S: ImplicitSystem + ?Sized>(
    tables: &StepTables,
    sys: &S,
    g: &[&[f64]],
    u0: &[f64],
    mut hist: Option<&mut Vec<Vec<f64>>>,
    out: &mut [f64],
) -> Result<()> {
    let dim = sys.dim();
    let n_steps = tables.cfg.grid.steps();
    if g.len() != tables.n_terms {
        return Err(Error::DimensionMismatch { expected: tables.n_terms, found: g.len() });
    }
    for v in g.iter().copied().chain([u0, &*out]) {
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
    }
    let tau = tables.cfg.grid.tau();
    let ta = tables.tau_alpha;
    let w = &tables.weights;
    let integrated = tables.cfg.scheme.integrated();
    let u0_zero = u0.iter().all(|v| *v == 0.0);
    // x holds X^0..X^N: U-values for the integrated schemes, u-values
    // otherwise
    let mut x = vec![0.0; (n_steps + 1) * dim];
    if !integrated {
        x[..dim].copy_from_slice(u0);
    }
    let mut rhs = vec![0.0; dim];
    for n in 1..=n_steps {
        rhs.iter_mut().for_each(|r| *r = 0.0);
        for (i, gi) in g.iter().enumerate() {
            let f = tables.factor(i, n);
            if f != 0.0 {
                for (r, v) in rhs.iter_mut().zip(gi.iter()) {
                    *r += f * v;
                }
            }
        }
        if integrated {
            if !u0_zero {
                let f = tables.factor(tables.n_terms, n);
                for (r, v) in rhs.iter_mut().zip(u0) {
                    *r += f * v;
                }
            }
        } else if !u0_zero {
            let c = ta * tables.partial[n];
            for (r, v) in rhs.iter_mut().zip(u0) {
                *r += c * v;
            }
        }
        // history: integrated schemes have X^0 = 0 so j runs to n-1; the
        // direct form folds the X^0 = u⁰ term into the partial sum above
        let (done, cur) = x.split_at_mut(n * dim);
        let conv = &mut cur[..dim];
        conv.iter_mut().for_each(|c| *c = 0.0);
        if dim == 1 {
            let mut s = 0.0;
            for j in 1..n {
                s += w[j] * done[n - j];
            }
            conv[0] = s;
        } else {
            for j in 1..n {
                let wj = w[j];
                let xs = &done[(n - j) * dim..(n - j + 1) * dim];
                for (c, v) in conv.iter_mut().zip(xs) {
                    *c += wj * v;
                }
            }
        }
        for (r, c) in rhs.iter_mut().zip(conv.iter()) {
            *r -= ta * c;
        }
        sys.solve_shifted(&mut rhs)?;
        conv.copy_from_slice(&rhs);
        if let Some(h) = hist.as_deref_mut() {
            let mut u = vec![0.0; dim];
            recover_u(tables.cfg.scheme, &x, n, dim, tau, &mut u);
            h.push(u);
        }
    }
    recover_u(tables.cfg.scheme, &x, n_steps, dim, tau, out);
    if out.iter().any(|v| !v.is_finite()) {
        return Err(Error::AccuracyNotAchieved { routine: "stepper", detail: "non-finite solution" });
    }
    Ok(())
}

fn recover_u(scheme: TimeScheme, x: &[f64], n: usize, dim: usize, tau: f64, out: &mut [f64]) {
    let at = |k: isize, i: usize| -> f64 {
        if k < 0 {
            0.0
        } else {
            x[k as usize * dim + i]
        }
    };
    let n = n as isize;
    for (i, o) in out.iter_mut().enumerate() {
        *o = match scheme {
            TimeScheme::Glbe => (at(n, i) - at(n - 1, i)) / tau,
            TimeScheme::Fbdf22 => (1.5 * at(n, i) - 2.0 * at(n - 1, i) + 0.5 * at(n - 2, i)) / tau,
            TimeScheme::CorrectedBe | TimeScheme::UncorrectedSbd => at(n, i),
        };
    }
}

/// A semidiscrete problem in a fixed vector basis: source terms with their
/// spatial vectors plus the initial vector.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteProblem {
    pub powers: Vec<TimePower>,
    pub vectors: Vec<Vec<f64>>,
    pub u0: Vec<f64>,
}

impl DiscreteProblem {
    pub fn dim(&self) -> usize {
        self.u0.len()
    }
}

/// Runs every mode of a modal problem; `kappa[k]` is the eigenvalue of
/// mode `k`. Returns the modal coefficients of `u^N`.
pub fn run_modal(cfg: StepperConfig, kappa: &[f64], modal: &DiscreteProblem) -> Result<Vec<f64>> {
    let tables = StepTables::new(cfg, &modal.powers)?;
    let mut out = Vec::with_capacity(kappa.len());
    let mut g = vec![0.0; modal.powers.len()];
    for (k, &lam) in kappa.iter().enumerate() {
        for (gi, v) in g.iter_mut().zip(&modal.vectors) {
            *gi = v[k];
        }
        out.push(tables.run_mode(lam, &g, modal.u0[k])?);
    }
    Ok(out)
}

/// Runs a nodal problem with one shifted solve per step.
pub fn run_nodal(
    cfg: StepperConfig,
    op: &SpatialOperator,
    nodal: &DiscreteProblem,
    method: crate::spatial::SolveMethod,
) -> Result<Vec<f64>> {
    let tables = StepTables::new(cfg, &nodal.powers)?;
    let sys = NodalSystem::new(op, tables.shift(), method)?;
    let g: Vec<&[f64]> = nodal.vectors.iter().map(|v| &v[..]).collect();
    let mut out = vec![0.0; op.dof()];
    run_system(&tables, &sys, &g, &nodal.u0, None, &mut out)?;
    Ok(out)
}

/// Scalar fractional ODE `∂^α u = λu + f` solved with `κ = -λ`.
pub fn run_scalar(cfg: StepperConfig, lambda: f64, source: &[TimePower], u0: f64) -> Result<f64> {
    let tables = StepTables::new(cfg, source)?;
    let g = vec![1.0; source.len()];
    tables.run_mode(-lambda, &g, u0)
}
