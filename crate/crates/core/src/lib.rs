//! Time stepping for sub-diffusion equations with sources that are singular
//! at `t = 0`.
//!
//! The crate solves `∂ₜᵅu − Δu = f` on the unit interval or the unit square
//! with homogeneous Dirichlet data, where `f` is a finite sum of separable
//! terms `c·t^μ·g(x)` and `μ > −1`. It provides
//!
//! * convolution-quadrature weights for the Grünwald-Letnikov and fractional
//!   BDF2 symbols ([`cq_weights`]),
//! * the Mittag-Leffler function `E_{α,β}(x)` for real arguments
//!   ([`mittag_leffler`]),
//! * linear finite element operators with consistent or lumped mass on
//!   uniform meshes, with closed-form sine eigenpairs ([`spatial`]),
//! * power-type sources and their exact time antiderivatives ([`source`]),
//! * the GLBE and FBDF22 schemes plus the corrected BE / uncorrected SBD
//!   baselines ([`stepper`]),
//! * exact semidiscrete reference solutions ([`oracle`]) and convergence-rate
//!   bookkeeping ([`convergence`]), and refinement studies in time and
//!   space ([`study`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod convergence;
pub mod cq_weights;
pub mod dd;
mod error;
pub mod mittag_leffler;
pub mod oracle;
pub mod source;
pub mod spatial;
pub mod special;
pub mod stepper;
pub mod study;

pub use error::{Error, Result};

pub use cq_weights::{apply_cq, fbdf2_weights, gl_weights, CqKernel, CqScheme, FractionalOrder};
pub use mittag_leffler::{ml_conv_weight, ml_eval, MlQuery};
pub use oracle::{fode_exact, semidiscrete_exact, semidiscrete_exact_modal};
pub use source::{InitialData, Profile, SourceSpec, SourceTerm, TimePower};
pub use spatial::{Dimension, MassTreatment, MeshSpec, SolveMethod, SpatialOperator};
pub use stepper::{TimeGrid, TimeScheme};
pub use study::{fode_study, pde_study, spatial_study, Compare, PdeStudy, SpatialStudy};
