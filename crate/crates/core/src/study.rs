//! Convergence studies: time refinement against exact references and
//! successive mesh refinement of the semidiscrete solution.

use alloc::vec::Vec;

use crate::convergence::{Axis, ConvergenceReport};
use crate::cq_weights::FractionalOrder;
use crate::oracle::{fode_exact, fode_source, modal_problem, semidiscrete_exact_modal};
use crate::source::{InitialData, SourceSpec};
use crate::spatial::{Dimension, MassTreatment, MeshSpec, Projection, SpatialOperator};
use crate::stepper::{run_modal, run_scalar, StepperConfig, TimeGrid, TimeScheme};
use crate::{Error, Result};

/// How solutions on two nested meshes are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compare {
    /// Interpolate the coarse solution onto the fine mesh and take the exact
    /// `L²` norm of the piecewise-linear difference.
    Prolong,
    /// Sample the fine solution at the coarse nodes and use the coarse
    /// operator's discrete norm.
    Restrict,
}

impl Compare {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "prolong" => Some(Compare::Prolong),
            "restrict" => Some(Compare::Restrict),
            _ => None,
        }
    }
}

/// `‖u_coarse - u_fine‖` under the chosen comparison.
pub fn mesh_difference(
    coarse: &SpatialOperator,
    uc: &[f64],
    fine: &SpatialOperator,
    uf: &[f64],
    compare: Compare,
) -> Result<f64> {
    match compare {
        Compare::Restrict => {
            let r = coarse.mesh().restrict_from(fine.mesh(), uf)?;
            let d: Vec<f64> = r.iter().zip(uc).map(|(a, b)| a - b).collect();
            coarse.norm(&d)
        }
        Compare::Prolong => {
            let p = coarse.mesh().prolong_to(fine.mesh(), uc)?;
            let d: Vec<f64> = uf.iter().zip(&p).map(|(a, b)| a - b).collect();
            SpatialOperator::build(*fine.mesh(), MassTreatment::Galerkin).norm(&d)
        }
    }
}

/// Semidiscrete refinement study at a fixed time.
#[derive(Clone, Debug)]
pub struct SpatialStudy {
    pub dim: Dimension,
    pub mass: MassTreatment,
    pub alpha: f64,
    pub t: f64,
    pub source: SourceSpec,
    pub u0: InitialData,
    pub projection: Projection,
    /// Subdivision counts `M`, each the double of the previous.
    pub subdivisions: Vec<usize>,
    pub compare: Compare,
}

/// Differences `‖ū_{2h} - ū_h‖` for every consecutive pair of meshes.
///
/// Row `i` is labelled with the finer `M` of the pair, so a chain
/// `8, 16, ..., 256` yields rows `16, ..., 256`.
pub fn spatial_study(s: &SpatialStudy) -> Result<ConvergenceReport> {
    let ms = &s.subdivisions;
    if ms.len() < 2 {
        return Err(Error::domain("mesh chain length", ms.len() as f64, "at least two meshes"));
    }
    for w in ms.windows(2) {
        if w[1] != 2 * w[0] {
            return Err(Error::NonNestedMeshes { coarse: w[0], fine: w[1] });
        }
    }
    let mut sols = Vec::with_capacity(ms.len());
    for &m in ms {
        let op = SpatialOperator::build(MeshSpec::new(s.dim, m)?, s.mass);
        let modal = modal_problem(&op, &s.source, &s.u0, s.projection)?;
        let c = semidiscrete_exact_modal(s.alpha, &op.eigenvalues()?, &modal, s.t)?;
        let u = op.to_nodal(&c)?;
        sols.push((op, u));
    }
    let mut params = Vec::new();
    let mut errs = Vec::new();
    for w in sols.windows(2) {
        let ((c, uc), (f, uf)) = (&w[0], &w[1]);
        errs.push(mesh_difference(c, uc, f, uf, s.compare)?);
        params.push(f.mesh().subdivisions() as f64);
    }
    Ok(ConvergenceReport::from_errors(Axis::Space, &params, &errs))
}

fn check_chain(ns: &[usize]) -> Result<()> {
    if ns.is_empty() || ns.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("N list", ns.len() as f64, "a non-empty, strictly increasing list"));
    }
    Ok(())
}

/// Collects errors until the first failure; a failed chain is kept but
/// flagged invalid.
fn collect(ns: &[usize], mut err: impl FnMut(usize) -> Result<f64>) -> ConvergenceReport {
    let mut params = Vec::new();
    let mut errs = Vec::new();
    let mut valid = true;
    for &n in ns {
        match err(n) {
            Ok(e) => {
                params.push(n as f64);
                errs.push(e);
            }
            Err(_) => {
                valid = false;
                break;
            }
        }
    }
    let mut r = ConvergenceReport::from_errors(Axis::Time, &params, &errs);
    r.valid = valid;
    r
}

/// `|u_N - T^ν|` for the scalar test problem over a chain of step counts.
pub fn fode_study(scheme: TimeScheme, alpha: f64, nu: f64, lambda: f64, t: f64, ns: &[usize]) -> Result<ConvergenceReport> {
    check_chain(ns)?;
    let order = FractionalOrder::new(alpha)?;
    let src = fode_source(alpha, nu, lambda)?;
    let exact = fode_exact(nu, t)?;
    TimeGrid::new(t, ns[0])?;
    Ok(collect(ns, |n| {
        let cfg = StepperConfig::new(scheme, order, TimeGrid::new(t, n)?);
        Ok(libm::fabs(run_scalar(cfg, lambda, &src, 0.0)? - exact))
    }))
}

/// Fully discrete PDE run on one mesh.
#[derive(Clone, Debug)]
pub struct PdeStudy {
    pub mesh: MeshSpec,
    pub mass: MassTreatment,
    pub scheme: TimeScheme,
    pub alpha: f64,
    pub t: f64,
    pub source: SourceSpec,
    pub u0: InitialData,
    pub projection: Projection,
}

/// `‖ũ_h^N - u_h(T)‖` against the exact semidiscrete solution, stepping mode
/// by mode. The modal basis is orthonormal in the operator's inner product,
/// so the error norm is the Euclidean norm of the coefficient difference.
pub fn pde_study(s: &PdeStudy, ns: &[usize]) -> Result<ConvergenceReport> {
    check_chain(ns)?;
    let order = FractionalOrder::new(s.alpha)?;
    TimeGrid::new(s.t, ns[0])?;
    let op = SpatialOperator::build(s.mesh, s.mass);
    let lam = op.eigenvalues()?;
    let modal = modal_problem(&op, &s.source, &s.u0, s.projection)?;
    let exact = semidiscrete_exact_modal(s.alpha, &lam, &modal, s.t)?;
    Ok(collect(ns, |n| {
        let cfg = StepperConfig::new(s.scheme, order, TimeGrid::new(s.t, n)?);
        let c = run_modal(cfg, &lam, &modal)?;
        Ok(libm::sqrt(c.iter().zip(&exact).map(|(a, b)| (a - b) * (a - b)).sum::<f64>()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::Profile;

    #[test]
    fn zero_data_gives_zero_differences() {
        let s = SpatialStudy {
            dim: Dimension::One,
            mass: MassTreatment::Lumped,
            alpha: 0.5,
            t: 1.0,
            source: SourceSpec::zero(),
            u0: InitialData::zero(),
            projection: Projection::L2,
            subdivisions: alloc::vec![4, 8, 16],
            compare: Compare::Prolong,
        };
        let r = spatial_study(&s).unwrap();
        assert_eq!(r.errors(), alloc::vec![0.0, 0.0]);
        assert_eq!(r.average_rate, None);
    }

    #[test]
    fn non_nested_chain_is_rejected() {
        let s = SpatialStudy {
            dim: Dimension::One,
            mass: MassTreatment::Lumped,
            alpha: 0.5,
            t: 1.0,
            source: SourceSpec::one_plus_power(-0.5, Profile::Power(-0.25)).unwrap(),
            u0: InitialData::zero(),
            projection: Projection::L2,
            subdivisions: alloc::vec![8, 12],
            compare: Compare::Restrict,
        };
        assert!(matches!(spatial_study(&s), Err(Error::NonNestedMeshes { .. })));
    }

    #[test]
    fn decreasing_step_counts_are_rejected() {
        assert!(fode_study(TimeScheme::Glbe, 0.5, -0.5, -1.0, 1.0, &[40, 20]).is_err());
        assert!(fode_study(TimeScheme::Glbe, 0.5, -0.5, -1.0, 1.0, &[]).is_err());
    }

    #[test]
    fn first_order_scalar_row() {
        let r = fode_study(TimeScheme::Glbe, 0.5, -0.5, -1.0, 1.0, &[20, 40, 80, 160, 320]).unwrap();
        assert!(r.valid);
        let e = r.errors();
        assert!((e[4] / 9.9517e-4 - 1.0).abs() < 1e-3, "{e:?}");
    }
}
