//! Fast invariant checks run by the `check` subcommand. Each check builds its
//! expectation independently of the code path under test.

use fracsub_core::cq_weights::{check_sector_lemmas, symbol_order_slope};
use fracsub_core::mittag_leffler::{ml, ml_conv_weight};
use fracsub_core::oracle::{modal_problem, nodal_problem, regularity_slope};
use fracsub_core::spatial::Projection;
use fracsub_core::special::gamma;
use fracsub_core::stepper::{run_modal, run_nodal, StepperConfig};
use fracsub_core::{
    fbdf2_weights, gl_weights, CqScheme, FractionalOrder, InitialData, MassTreatment, MeshSpec, Profile, SolveMethod,
    SourceSpec, SpatialOperator, TimeGrid, TimeScheme,
};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

type Outcome = std::result::Result<(bool, String), fracsub_core::Error>;

fn bounded(worst: f64, tol: f64) -> (bool, String) {
    (worst <= tol, format!("worst {worst:.2e} (tol {tol:.0e})"))
}

/// Coefficients of `P(ξ)^α` by the power recurrence.
fn power_series(p: &[f64], alpha: f64, n: usize) -> Vec<f64> {
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

fn weights_vs_recurrence() -> Outcome {
    let n = 2048;
    let mut worst: f64 = 0.0;
    for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let fa = FractionalOrder::new(a)?;
        for (k, p) in [(gl_weights(fa, n), &[1.0, -1.0][..]), (fbdf2_weights(fa, n), &[1.5, -2.0, 0.5][..])] {
            let want = power_series(p, a, n);
            for (x, y) in k.weights().iter().zip(&want) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    Ok(bounded(worst, 1e-12))
}

fn eigen_residuals() -> Outcome {
    let mut worst: f64 = 0.0;
    for (mesh, mass) in [
        (MeshSpec::one_d(64)?, MassTreatment::Lumped),
        (MeshSpec::one_d(64)?, MassTreatment::Galerkin),
        (MeshSpec::two_d(12)?, MassTreatment::Lumped),
    ] {
        let op = SpatialOperator::build(mesh, mass);
        let lam = op.eigenvalues()?;
        for (k, l) in lam.iter().enumerate() {
            worst = worst.max(op.eigen_residual(k)? / l);
        }
    }
    Ok(bounded(worst, 1e-12))
}

fn modal_nodal_equivalence() -> Outcome {
    let mut worst: f64 = 0.0;
    let src = SourceSpec::one_plus_power(-0.5, Profile::Power(-0.25))?;
    let u0 = InitialData::new(Profile::Indicator { a: 0.25, b: 0.75 });
    for mass in [MassTreatment::Lumped, MassTreatment::Galerkin] {
        let op = SpatialOperator::build(MeshSpec::one_d(16)?, mass);
        let modal = modal_problem(&op, &src, &u0, Projection::L2)?;
        let nodal = nodal_problem(&op, &src, &u0, Projection::L2)?;
        for s in TimeScheme::ALL {
            let cfg = StepperConfig::new(s, FractionalOrder::new(0.4)?, TimeGrid::new(1.0, 32)?);
            let a = op.to_nodal(&run_modal(cfg, &op.eigenvalues()?, &modal)?)?;
            let b = run_nodal(cfg, &op, &nodal, SolveMethod::Banded)?;
            let scale = a.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            for (x, y) in a.iter().zip(&b) {
                worst = worst.max((x - y).abs() / scale);
            }
        }
    }
    Ok(bounded(worst, 1e-11))
}

fn ml_special_cases() -> Outcome {
    let mut worst: f64 = 0.0;
    for x in [-20.0, -3.5, -0.7, 0.0, 0.4, 2.0] {
        let e = f64::exp(x);
        worst = worst.max((ml(1.0, 1.0, x)? - e).abs() / e.max(1e-300).max(1.0));
        let want = if x == 0.0 { 1.0 } else { (e - 1.0) / x };
        worst = worst.max((ml(1.0, 2.0, x)? - want).abs());
    }
    for b in [0.3, 1.0, 1.7] {
        worst = worst.max((ml(0.6, b, 0.0)? - 1.0 / gamma(b)).abs());
    }
    // E_{1/2,1}(-x) = exp(x²) erfc(x)
    worst = worst.max((ml(0.5, 1.0, -1.0)? - 0.427_583_576_155_807_0).abs());
    worst = worst.max((ml(0.5, 1.0, -8.0)? - 0.069_985_166_200_880_93).abs());
    Ok(bounded(worst, 1e-12))
}

fn ml_convolution() -> Outcome {
    // λ = 0 reduces to a Riemann-Liouville integral of t^μ; small λ is a
    // one-term perturbation of it
    let mut worst: f64 = 0.0;
    for (a, t, mu) in [(0.3, 0.7, -0.5), (0.9, 2.0, 0.0), (0.5, 1.0, 1.5)] {
        let want = gamma(mu + 1.0) / gamma(mu + 1.0 + a) * f64::powf(t, mu + a);
        worst = worst.max((ml_conv_weight(a, 0.0, t, mu)? / want - 1.0).abs());
        let lam = 1e-7;
        let first = gamma(mu + 1.0) / gamma(mu + 1.0 + 2.0 * a) * f64::powf(t, mu + 2.0 * a);
        worst = worst.max(((ml_conv_weight(a, lam, t, mu)? - want + lam * first) / want).abs());
    }
    Ok(bounded(worst, 1e-9))
}

fn sector_slopes() -> Outcome {
    let mut worst: f64 = 0.0;
    for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let r = check_sector_lemmas(FractionalOrder::new(a)?, 60);
        worst = worst.max((r.gl_order_slope - (a + 1.0)).abs());
        worst = worst.max((r.bdf2_order_slope - (a + 2.0)).abs());
        if r.gl_arg_excess > 1e-12 || r.bdf2_arg_excess > 1e-12 || r.gl_left_arg_excess > 1e-12 {
            return Ok((false, format!("sector excess at alpha={a}: {r:?}")));
        }
    }
    worst = worst.max((symbol_order_slope(CqScheme::Gl, 1.0, 3) - 2.0).abs());
    Ok(bounded(worst, 0.05))
}

fn regularity() -> Outcome {
    let op = SpatialOperator::build(MeshSpec::one_d(16)?, MassTreatment::Lumped);
    let mut worst: f64 = 0.0;
    for (a, mu) in [(0.8, -0.9), (0.9, -0.95), (0.95, -0.99)] {
        let src = SourceSpec::zero().with_power_term(1.0, mu, Profile::Power(-0.25))?;
        worst = worst.max((regularity_slope(a, &op, &src)? - (a + mu)).abs());
    }
    Ok(bounded(worst, 0.05))
}

fn zero_data() -> Outcome {
    let op = SpatialOperator::build(MeshSpec::two_d(6)?, MassTreatment::Galerkin);
    let zero = nodal_problem(&op, &SourceSpec::zero(), &InitialData::zero(), Projection::L2)?;
    for s in TimeScheme::ALL {
        let cfg = StepperConfig::new(s, FractionalOrder::new(0.5)?, TimeGrid::new(1.0, 8)?);
        if run_nodal(cfg, &op, &zero, SolveMethod::Banded)?.iter().any(|v| *v != 0.0) {
            return Ok((false, format!("{} produced a nonzero value", s.name())));
        }
    }
    Ok((true, "all schemes exactly zero".into()))
}

pub fn run_all() -> Vec<CheckOutcome> {
    let checks: [(&'static str, fn() -> Outcome); 8] = [
        ("cq weights vs power recurrence", weights_vs_recurrence),
        ("eigen-residuals", eigen_residuals),
        ("modal vs nodal stepping", modal_nodal_equivalence),
        ("mittag-leffler special cases", ml_special_cases),
        ("mittag-leffler convolution limits", ml_convolution),
        ("symbol sector and order slopes", sector_slopes),
        ("small-time regularity slopes", regularity),
        ("zero data gives zero", zero_data),
    ];
    checks
        .iter()
        .map(|(name, f)| match f() {
            Ok((pass, detail)) => CheckOutcome { name, pass, detail },
            Err(e) => CheckOutcome { name, pass: false, detail: e.to_string() },
        })
        .collect()
}
