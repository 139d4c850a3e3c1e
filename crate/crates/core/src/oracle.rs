//! Reference solutions: the closed-form solution of the scalar test problem
//! and the exact semidiscrete solution in the sine eigenbasis.

use alloc::vec::Vec;

use crate::mittag_leffler::{ml, ml_conv_weight_normalized};
use crate::source::{InitialData, SourceSpec, TimePower};
use crate::spatial::{Projection, SpatialOperator};
use crate::stepper::DiscreteProblem;
use crate::{Error, Result};

/// `t^ν`.
pub fn fode_exact(nu: f64, t: f64) -> Result<f64> {
    if t < 0.0 || (t == 0.0 && nu < 0.0) {
        return Err(Error::domain("t", t, "t > 0 (t >= 0 when nu >= 0)"));
    }
    Ok(libm::pow(t, nu))
}

/// Source of the scalar test problem with solution `t^ν`:
/// `∂^α u = λu + f`, `f = Γ(ν+1)/Γ(ν+1-α)·t^{ν-α} - λt^ν`, `u(0) = 0`.
///
/// Both terms are returned in normalized form, so `ν = α - 1` (where the
/// first coefficient has a pole in the denominator) is representable.
/// Requires `ν >= α - 1` and `ν > -1`.
pub fn fode_source(alpha: f64, nu: f64, lambda: f64) -> Result<[TimePower; 2]> {
    if !(nu >= alpha - 1.0) || !(nu > -1.0) {
        return Err(Error::domain("nu", nu, "nu >= alpha - 1 and nu > -1"));
    }
    let g = crate::special::gamma(nu + 1.0);
    Ok([TimePower::normalized(g, nu - alpha)?, TimePower::normalized(-lambda * g, nu)?])
}

/// Exact modal solution of `∂^α u + λ_k u = Σ_i f_i(t) g_{i,k}`,
/// `u(0) = u0_k`, at time `t`.
pub fn semidiscrete_exact_modal(
    alpha: f64,
    eigenvalues: &[f64],
    modal: &DiscreteProblem,
    t: f64,
) -> Result<Vec<f64>> {
    if !(t > 0.0) {
        return Err(Error::domain("t", t, "t > 0"));
    }
    let n = eigenvalues.len();
    if modal.u0.len() != n || modal.vectors.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: modal.u0.len() });
    }
    let ta = libm::pow(t, alpha);
    let u0_zero = modal.u0.iter().all(|v| *v == 0.0);
    let mut out = Vec::with_capacity(n);
    for (k, &lam) in eigenvalues.iter().enumerate() {
        let mut v = 0.0;
        if !u0_zero && modal.u0[k] != 0.0 {
            v += ml(alpha, 1.0, -lam * ta)? * modal.u0[k];
        }
        for (p, g) in modal.powers.iter().zip(&modal.vectors) {
            if g[k] != 0.0 && p.amplitude != 0.0 {
                v += p.amplitude * ml_conv_weight_normalized(alpha, lam, t, p.exponent)? * g[k];
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Projects a source and initial data onto the eigenbasis of `op`.
pub fn modal_problem(
    op: &SpatialOperator,
    src: &SourceSpec,
    u0: &InitialData,
    projection: Projection,
) -> Result<DiscreteProblem> {
    let powers = src.terms().iter().map(|t| t.time).collect();
    let vectors = src
        .terms()
        .iter()
        .map(|t| op.project_source(&t.profile, projection))
        .collect::<Result<Vec<_>>>()?;
    let u0v = op.project_source(&u0.profile, projection)?;
    Ok(DiscreteProblem { powers, vectors, u0: u0v })
}

/// Nodal form of the same problem.
pub fn nodal_problem(
    op: &SpatialOperator,
    src: &SourceSpec,
    u0: &InitialData,
    projection: Projection,
) -> Result<DiscreteProblem> {
    let powers = src.terms().iter().map(|t| t.time).collect();
    let vectors = src
        .terms()
        .iter()
        .map(|t| op.project(&t.profile, projection))
        .collect::<Result<Vec<_>>>()?;
    let u0v = op.project(&u0.profile, projection)?;
    Ok(DiscreteProblem { powers, vectors, u0: u0v })
}

/// Exact semidiscrete solution at time `t` as a nodal vector.
pub fn semidiscrete_exact(
    op: &SpatialOperator,
    src: &SourceSpec,
    u0: &InitialData,
    alpha: f64,
    t: f64,
    projection: Projection,
) -> Result<Vec<f64>> {
    let modal = modal_problem(op, src, u0, projection)?;
    let c = semidiscrete_exact_modal(alpha, &op.eigenvalues()?, &modal, t)?;
    op.to_nodal(&c)
}

/// Least-squares slope of `log ‖u_h(t)‖` against `log t` over nine
/// log-spaced times in `[1e-6, 1e-2]`, for zero initial data.
pub fn regularity_slope(alpha: f64, op: &SpatialOperator, src: &SourceSpec) -> Result<f64> {
    let modal = modal_problem(op, src, &InitialData::zero(), Projection::Interpolation)?;
    let lam = op.eigenvalues()?;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    let pts = 9;
    for i in 0..pts {
        let lt = libm::log(1e-6) + (libm::log(1e-2) - libm::log(1e-6)) * i as f64 / (pts - 1) as f64;
        let c = semidiscrete_exact_modal(alpha, &lam, &modal, libm::exp(lt))?;
        // Parseval: the modal basis is orthonormal
        let nrm = libm::sqrt(c.iter().map(|v| v * v).sum::<f64>());
        let ly = libm::log(nrm);
        sx += lt;
        sy += ly;
        sxx += lt * lt;
        sxy += lt * ly;
    }
    let n = pts as f64;
    Ok((n * sxy - sx * sy) / (n * sxx - sx * sx))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_values() {
        assert_eq!(fode_exact(-0.5, 1.0).unwrap(), 1.0);
        assert!((fode_exact(-0.5, 0.25).unwrap() - 2.0).abs() < 1e-15);
        assert!((fode_exact(-0.9, 4.0).unwrap() - 0.287_174_6).abs() < 1e-7);
        assert!(fode_exact(-0.5, 0.0).is_err());
    }

    #[test]
    fn fode_source_limits() {
        assert!(fode_source(0.5, -0.5, -1.0).is_ok());
        assert!(fode_source(0.5, -0.6, -1.0).is_err());
        let [a, b] = fode_source(0.5, -0.25, -1.0).unwrap();
        let f1 = a.integral(1, 1.0) + b.integral(1, 1.0);
        assert!((f1 - 2.685_289_813_467_9).abs() < 1e-12);
    }
}
