//! Linear finite elements on uniform meshes of the unit interval and the
//! unit square with homogeneous Dirichlet data.
//!
//! Unknowns are interior nodal values. In 2D they are ordered with `x`
//! varying fastest: node `(i, j)`, `1 <= i, j <= M-1`, has index
//! `(j-1)(M-1) + (i-1)`. Modes use the same layout with `(n, m)` in place
//! of `(i, j)`.
//!
//! The square is split into right triangles along the south-west to
//! north-east diagonal of every cell, so the stiffness matrix is the
//! five-point stencil. Sine vectors diagonalize every operator here except
//! the 2D consistent mass matrix; for that case only nodal solves are
//! available.

use alloc::vec;
use alloc::vec::Vec;

use crate::source::Profile;
use crate::special::sinpi;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    One,
    Two,
}

impl Dimension {
    pub fn from_usize(d: usize) -> Result<Self> {
        match d {
            1 => Ok(Dimension::One),
            2 => Ok(Dimension::Two),
            _ => Err(Error::domain("dim", d as f64, "1 or 2")),
        }
    }

    pub fn as_usize(self) -> usize {
        match self {
            Dimension::One => 1,
            Dimension::Two => 2,
        }
    }
}

/// Uniform mesh with `M` subdivisions per axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeshSpec {
    dim: Dimension,
    m: usize,
}

impl MeshSpec {
    pub fn new(dim: Dimension, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::domain("M", m as f64, "M >= 2"));
        }
        if m > 1 << 16 {
            return Err(Error::domain("M", m as f64, "M <= 65536"));
        }
        Ok(MeshSpec { dim, m })
    }

    pub fn one_d(m: usize) -> Result<Self> {
        Self::new(Dimension::One, m)
    }

    pub fn two_d(m: usize) -> Result<Self> {
        Self::new(Dimension::Two, m)
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn subdivisions(&self) -> usize {
        self.m
    }

    pub fn h(&self) -> f64 {
        1.0 / self.m as f64
    }

    /// Interior nodes per axis.
    pub fn n_axis(&self) -> usize {
        self.m - 1
    }

    pub fn dof(&self) -> usize {
        match self.dim {
            Dimension::One => self.m - 1,
            Dimension::Two => (self.m - 1) * (self.m - 1),
        }
    }

    /// Coordinates of interior node `idx`; `y = 0` in 1D.
    pub fn node(&self, idx: usize) -> (f64, f64) {
        let n1 = self.n_axis();
        let mf = self.m as f64;
        match self.dim {
            Dimension::One => ((idx + 1) as f64 / mf, 0.0),
            Dimension::Two => (((idx % n1) + 1) as f64 / mf, ((idx / n1) + 1) as f64 / mf),
        }
    }

    /// Lumped-mass weight of every interior node: `h` or `h²`.
    pub fn node_weight(&self) -> f64 {
        match self.dim {
            Dimension::One => self.h(),
            Dimension::Two => self.h() * self.h(),
        }
    }

    /// True when every node of `self` is a node of `fine`.
    pub fn is_refined_by(&self, fine: &MeshSpec) -> bool {
        self.dim == fine.dim && fine.m % self.m == 0
    }

    /// Values of a fine-mesh vector at the nodes of `self`.
    pub fn restrict_from(&self, fine: &MeshSpec, v: &[f64]) -> Result<Vec<f64>> {
        if !self.is_refined_by(fine) {
            return Err(Error::NonNestedMeshes { coarse: self.m, fine: fine.m });
        }
        check_len(fine.dof(), v.len())?;
        let r = fine.m / self.m;
        let nf = fine.n_axis();
        let nc = self.n_axis();
        Ok(match self.dim {
            Dimension::One => (1..=nc).map(|i| v[i * r - 1]).collect(),
            Dimension::Two => {
                let mut out = Vec::with_capacity(self.dof());
                for j in 1..=nc {
                    for i in 1..=nc {
                        out.push(v[(j * r - 1) * nf + (i * r - 1)]);
                    }
                }
                out
            }
        })
    }

    /// Piecewise-linear interpolation of a coarse vector onto `fine`.
    pub fn prolong_to(&self, fine: &MeshSpec, v: &[f64]) -> Result<Vec<f64>> {
        if !self.is_refined_by(fine) {
            return Err(Error::NonNestedMeshes { coarse: self.m, fine: fine.m });
        }
        check_len(self.dof(), v.len())?;
        let nc = self.n_axis();
        let mc = self.m;
        // value at coarse grid point (i, j) including boundary zeros
        let at = |i: usize, j: usize| -> f64 {
            if i == 0 || i == mc || j == 0 || j == mc {
                0.0
            } else {
                match self.dim {
                    Dimension::One => v[i - 1],
                    Dimension::Two => v[(j - 1) * nc + (i - 1)],
                }
            }
        };
        let r = fine.m / self.m;
        let rf = r as f64;
        let mut out = Vec::with_capacity(fine.dof());
        match self.dim {
            Dimension::One => {
                for p in 1..fine.m {
                    let (i, s) = (p / r, (p % r) as f64 / rf);
                    let right = if s > 0.0 { at(i + 1, 1) } else { 0.0 };
                    out.push((1.0 - s) * at(i, 1) + s * right);
                }
            }
            Dimension::Two => {
                for q in 1..fine.m {
                    for p in 1..fine.m {
                        let (i, sx) = (p / r, (p % r) as f64 / rf);
                        let (j, sy) = (q / r, (q % r) as f64 / rf);
                        let v00 = at(i, j);
                        let get = |a: usize, b: usize| if a <= mc && b <= mc { at(a, b) } else { 0.0 };
                        // P1 on the cell split along its SW-NE diagonal
                        let val = if sx >= sy {
                            v00 + sx * (get(i + 1, j) - v00) + sy * (get(i + 1, j + 1) - get(i + 1, j))
                        } else {
                            v00 + sy * (get(i, j + 1) - v00) + sx * (get(i + 1, j + 1) - get(i, j + 1))
                        };
                        out.push(val);
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MassTreatment {
    Galerkin,
    Lumped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    /// Sine-transform diagonalization.
    Spectral,
    /// Banded Cholesky factorization of the assembled matrix.
    Banded,
}

/// How a spatial profile is mapped into the finite element space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Nodal interpolation.
    Interpolation,
    /// `L²` projection in the operator's inner product, using the exact load
    /// vector `∫ g ψ_i`.
    L2,
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Discrete Laplacian `-Δ_h` with its mass treatment.
#[derive(Clone, Debug)]
pub struct SpatialOperator {
    mesh: MeshSpec,
    mass: MassTreatment,
    /// `sin(πj/M)`, `j = 0..2M`.
    sines: Vec<f64>,
    /// `sin²(kπ/2M)`, `k = 1..M-1`.
    s2: Vec<f64>,
}

impl SpatialOperator {
    pub fn build(mesh: MeshSpec, mass: MassTreatment) -> Self {
        let m = mesh.m;
        let sines = (0..2 * m).map(|j| sinpi(j as f64 / m as f64)).collect();
        let s2 = (1..m)
            .map(|k| {
                let s = sinpi(k as f64 / (2 * m) as f64);
                s * s
            })
            .collect();
        SpatialOperator { mesh, mass, sines, s2 }
    }

    pub fn mesh(&self) -> &MeshSpec {
        &self.mesh
    }

    pub fn mass(&self) -> MassTreatment {
        self.mass
    }

    pub fn dof(&self) -> usize {
        self.mesh.dof()
    }

    /// Whether closed-form eigenpairs are available.
    pub fn has_modal_basis(&self) -> bool {
        !(self.mesh.dim == Dimension::Two && self.mass == MassTreatment::Galerkin)
    }

    fn require_modal(&self) -> Result<()> {
        if self.has_modal_basis() {
            Ok(())
        } else {
            Err(Error::NotDiagonalizable)
        }
    }

    fn h2(&self) -> f64 {
        self.mesh.h() * self.mesh.h()
    }

    /// Eigenvalue of 1D factor `k` (1-based).
    fn lambda_1d(&self, k: usize) -> f64 {
        let s2 = self.s2[k - 1];
        let l = 4.0 * s2 / self.h2();
        match self.mass {
            MassTreatment::Lumped => l,
            MassTreatment::Galerkin => l / (1.0 - 2.0 / 3.0 * s2),
        }
    }

    /// Scale of the 1D eigenvector `norm_k·√2·sin(kπx_i)`.
    fn vec_scale_1d(&self, k: usize) -> f64 {
        match self.mass {
            MassTreatment::Lumped => 1.0,
            MassTreatment::Galerkin => 1.0 / libm::sqrt(1.0 - 2.0 / 3.0 * self.s2[k - 1]),
        }
    }

    /// Eigenvalues in mode order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        self.require_modal()?;
        let n1 = self.mesh.n_axis();
        Ok(match self.mesh.dim {
            Dimension::One => (1..=n1).map(|k| self.lambda_1d(k)).collect(),
            Dimension::Two => {
                let mut out = Vec::with_capacity(n1 * n1);
                for m in 1..=n1 {
                    for n in 1..=n1 {
                        out.push(self.lambda_1d(n) + self.lambda_1d(m));
                    }
                }
                out
            }
        })
    }

    /// Nodal values of eigenvector `mode` (0-based mode index).
    pub fn eigenvector(&self, mode: usize) -> Result<Vec<f64>> {
        self.require_modal()?;
        let mut c = vec![0.0; self.dof()];
        if mode >= c.len() {
            return Err(Error::DimensionMismatch { expected: c.len(), found: mode });
        }
        c[mode] = 1.0;
        self.to_nodal(&c)
    }

    /// `(T v)_k = Σ_i sin(kπi/M) v_i` along one axis, fixed summation order.
    fn dst_1d(&self, v: &[f64], out: &mut [f64]) {
        let m2 = 2 * self.mesh.m;
        for (k, o) in out.iter_mut().enumerate() {
            let k1 = k + 1;
            let mut s = 0.0;
            let mut idx = 0usize;
            for vi in v {
                idx += k1;
                if idx >= m2 {
                    idx -= m2;
                }
                s += self.sines[idx] * vi;
            }
            *o = s;
        }
    }

    /// Unscaled separable sine transform in the mesh layout.
    fn dst(&self, v: &[f64]) -> Vec<f64> {
        let n1 = self.mesh.n_axis();
        let mut out = vec![0.0; v.len()];
        match self.mesh.dim {
            Dimension::One => self.dst_1d(v, &mut out),
            Dimension::Two => {
                let mut tmp = vec![0.0; v.len()];
                for j in 0..n1 {
                    self.dst_1d(&v[j * n1..(j + 1) * n1], &mut tmp[j * n1..(j + 1) * n1]);
                }
                let mut col = vec![0.0; n1];
                let mut colt = vec![0.0; n1];
                for i in 0..n1 {
                    for j in 0..n1 {
                        col[j] = tmp[j * n1 + i];
                    }
                    self.dst_1d(&col, &mut colt);
                    for j in 0..n1 {
                        out[j * n1 + i] = colt[j];
                    }
                }
            }
        }
        out
    }

    fn mode_scales(&self) -> Vec<f64> {
        let n1 = self.mesh.n_axis();
        match self.mesh.dim {
            Dimension::One => (1..=n1).map(|k| core::f64::consts::SQRT_2 * self.vec_scale_1d(k)).collect(),
            Dimension::Two => {
                let mut out = Vec::with_capacity(n1 * n1);
                for m in 1..=n1 {
                    for n in 1..=n1 {
                        out.push(2.0 * self.vec_scale_1d(n) * self.vec_scale_1d(m));
                    }
                }
                out
            }
        }
    }

    /// Modal coefficients `c_k = (v, φ_k)` in the operator's inner product.
    pub fn to_modal(&self, v: &[f64]) -> Result<Vec<f64>> {
        self.require_modal()?;
        check_len(self.dof(), v.len())?;
        let mv = self.apply_mass(v)?;
        self.dual_to_modal(&mv)
    }

    /// Modal coefficients `c_k = φ_k · b` of a dual vector `b` (for example a
    /// load vector); equals `to_modal(M⁻¹ b)`.
    pub fn dual_to_modal(&self, b: &[f64]) -> Result<Vec<f64>> {
        self.require_modal()?;
        check_len(self.dof(), b.len())?;
        let mut c = self.dst(b);
        for (ci, s) in c.iter_mut().zip(self.mode_scales()) {
            *ci *= s;
        }
        Ok(c)
    }

    /// Nodal vector `Σ_k c_k φ_k`.
    pub fn to_nodal(&self, c: &[f64]) -> Result<Vec<f64>> {
        self.require_modal()?;
        check_len(self.dof(), c.len())?;
        let scaled: Vec<f64> = c.iter().zip(self.mode_scales()).map(|(a, s)| a * s).collect();
        Ok(self.dst(&scaled))
    }

    /// Symmetric stencil: `diag` at the node, `axis` on the axis neighbours
    /// and `ne_sw` on the diagonal neighbours of the triangulation.
    fn stencil(&self, v: &[f64], diag: f64, axis: f64, ne_sw: f64) -> Vec<f64> {
        let n1 = self.mesh.n_axis();
        let mut out = vec![0.0; v.len()];
        match self.mesh.dim {
            Dimension::One => {
                for i in 0..n1 {
                    let mut s = diag * v[i];
                    if i > 0 {
                        s += axis * v[i - 1];
                    }
                    if i + 1 < n1 {
                        s += axis * v[i + 1];
                    }
                    out[i] = s;
                }
            }
            Dimension::Two => {
                for j in 0..n1 {
                    for i in 0..n1 {
                        let p = j * n1 + i;
                        let mut s = diag * v[p];
                        if i > 0 {
                            s += axis * v[p - 1];
                        }
                        if i + 1 < n1 {
                            s += axis * v[p + 1];
                        }
                        if j > 0 {
                            s += axis * v[p - n1];
                        }
                        if j + 1 < n1 {
                            s += axis * v[p + n1];
                        }
                        if ne_sw != 0.0 {
                            if i > 0 && j > 0 {
                                s += ne_sw * v[p - n1 - 1];
                            }
                            if i + 1 < n1 && j + 1 < n1 {
                                s += ne_sw * v[p + n1 + 1];
                            }
                        }
                        out[p] = s;
                    }
                }
            }
        }
        out
    }

    /// Stiffness matrix times `v`.
    pub fn apply_stiffness(&self, v: &[f64]) -> Result<Vec<f64>> {
        check_len(self.dof(), v.len())?;
        let h = self.mesh.h();
        Ok(match self.mesh.dim {
            Dimension::One => self.stencil(v, 2.0 / h, -1.0 / h, 0.0),
            Dimension::Two => self.stencil(v, 4.0, -1.0, 0.0),
        })
    }

    /// Mass matrix (consistent or lumped) times `v`.
    pub fn apply_mass(&self, v: &[f64]) -> Result<Vec<f64>> {
        check_len(self.dof(), v.len())?;
        let h = self.mesh.h();
        Ok(match (self.mass, self.mesh.dim) {
            (MassTreatment::Lumped, _) => {
                let w = self.mesh.node_weight();
                v.iter().map(|x| w * x).collect()
            }
            (MassTreatment::Galerkin, Dimension::One) => self.stencil(v, 4.0 * h / 6.0, h / 6.0, 0.0),
            (MassTreatment::Galerkin, Dimension::Two) => {
                let h2 = h * h;
                self.stencil(v, h2 / 2.0, h2 / 12.0, h2 / 12.0)
            }
        })
    }

    /// `(v, w)` in the operator's inner product.
    pub fn inner(&self, v: &[f64], w: &[f64]) -> Result<f64> {
        check_len(v.len(), w.len())?;
        let mw = self.apply_mass(w)?;
        Ok(v.iter().zip(&mw).map(|(a, b)| a * b).sum())
    }

    /// Norm induced by [`SpatialOperator::inner`].
    pub fn norm(&self, v: &[f64]) -> Result<f64> {
        Ok(libm::sqrt(self.inner(v, v)?.max(0.0)))
    }

    /// `max_i |(A φ_k - λ_k M φ_k)_i|`.
    pub fn eigen_residual(&self, mode: usize) -> Result<f64> {
        let phi = self.eigenvector(mode)?;
        let lam = self.eigenvalues()?[mode];
        let a = self.apply_stiffness(&phi)?;
        let m = self.apply_mass(&phi)?;
        Ok(a.iter().zip(&m).map(|(x, y)| (x - lam * y).abs()).fold(0.0, f64::max))
    }

    /// Nodal values of a profile at the interior nodes.
    pub fn interpolate(&self, g: &Profile) -> Result<Vec<f64>> {
        self.check_profile(g)?;
        (0..self.dof())
            .map(|i| {
                let (x, y) = self.mesh.node(i);
                g.eval(x, y)
            })
            .collect()
    }

    fn check_profile(&self, g: &Profile) -> Result<()> {
        let ok = match (self.mesh.dim, g) {
            (Dimension::One, Profile::Indicator2d { .. }) => false,
            (Dimension::One, Profile::Sine { m, .. }) => *m == 0,
            (Dimension::Two, Profile::Power(_) | Profile::Indicator { .. }) => false,
            (Dimension::Two, Profile::Sine { m, .. }) => *m > 0,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain("profile dimension", self.mesh.dim.as_usize() as f64, "a profile matching the mesh"))
        }
    }

    /// Load vector `b_i = ∫ g ψ_i` with hat functions `ψ_i`.
    pub fn load_vector(&self, g: &Profile) -> Result<Vec<f64>> {
        self.check_profile(g)?;
        match self.mesh.dim {
            Dimension::One => load_1d(&self.mesh, g),
            Dimension::Two => load_2d(&self.mesh, g),
        }
    }

    /// Nodal vector of the projection of `g` into the finite element space.
    pub fn project(&self, g: &Profile, kind: Projection) -> Result<Vec<f64>> {
        match kind {
            Projection::Interpolation => self.interpolate(g),
            Projection::L2 => {
                let b = self.load_vector(g)?;
                match self.mass {
                    MassTreatment::Lumped => {
                        let w = self.mesh.node_weight();
                        Ok(b.iter().map(|x| x / w).collect())
                    }
                    MassTreatment::Galerkin => {
                        let f = BandedCholesky::factor(&self.band_matrix(1.0, 0.0))?;
                        Ok(f.solve(&b))
                    }
                }
            }
        }
    }

    /// Modal coefficients `(P g, φ_k)` of a projected profile.
    pub fn project_source(&self, g: &Profile, kind: Projection) -> Result<Vec<f64>> {
        self.require_modal()?;
        match kind {
            Projection::Interpolation => self.to_modal(&self.interpolate(g)?),
            Projection::L2 => self.dual_to_modal(&self.load_vector(g)?),
        }
    }

    /// Lower band of `mass_scale·Mass + stiff_scale·A`.
    pub fn band_matrix(&self, mass_scale: f64, stiff_scale: f64) -> BandMatrix {
        let n = self.dof();
        let n1 = self.mesh.n_axis();
        let h = self.mesh.h();
        let h2 = h * h;
        match self.mesh.dim {
            Dimension::One => {
                let (md, mo) = match self.mass {
                    MassTreatment::Lumped => (h, 0.0),
                    MassTreatment::Galerkin => (4.0 * h / 6.0, h / 6.0),
                };
                let mut b = BandMatrix::zeros(n, 1);
                for i in 0..n {
                    b.set(i, 0, mass_scale * md + stiff_scale * 2.0 / h);
                    if i > 0 {
                        b.set(i, 1, mass_scale * mo - stiff_scale / h);
                    }
                }
                b
            }
            Dimension::Two => {
                let (md, mo, mdiag) = match self.mass {
                    MassTreatment::Lumped => (h2, 0.0, 0.0),
                    MassTreatment::Galerkin => (h2 / 2.0, h2 / 12.0, h2 / 12.0),
                };
                let bw = if mdiag != 0.0 { n1 + 1 } else { n1 };
                let mut b = BandMatrix::zeros(n, bw);
                for j in 0..n1 {
                    for i in 0..n1 {
                        let p = j * n1 + i;
                        b.set(p, 0, mass_scale * md + stiff_scale * 4.0);
                        if i > 0 {
                            b.set(p, 1, mass_scale * mo - stiff_scale);
                        }
                        if j > 0 {
                            b.set(p, n1, mass_scale * mo - stiff_scale);
                            if i > 0 && mdiag != 0.0 {
                                b.set(p, n1 + 1, mass_scale * mdiag);
                            }
                        }
                    }
                }
                b
            }
        }
    }

    /// Factorization reused by repeated [`SpatialOperator::shifted_solve`]s.
    pub fn shifted_factor(&self, shift: f64, method: SolveMethod) -> Result<ShiftedSolver<'_>> {
        if !(shift > 0.0) {
            return Err(Error::domain("shift", shift, "shift > 0"));
        }
        match method {
            SolveMethod::Spectral => {
                let lam = self.eigenvalues()?;
                Ok(ShiftedSolver::Spectral { op: self, inv: lam.iter().map(|l| 1.0 / (shift + l)).collect() })
            }
            SolveMethod::Banded => {
                let chol = BandedCholesky::factor(&self.band_matrix(shift, 1.0))?;
                Ok(ShiftedSolver::Banded { op: self, chol })
            }
        }
    }

    /// Solves `(shift·I - Δ_h) v = rhs`, i.e. `(shift·Mass + A) v = Mass·rhs`.
    pub fn shifted_solve(&self, shift: f64, rhs: &[f64], method: SolveMethod) -> Result<Vec<f64>> {
        self.shifted_factor(shift, method)?.solve(rhs)
    }
}

/// A prepared `(shift·I - Δ_h)⁻¹`.
#[derive(Clone, Debug)]
pub enum ShiftedSolver<'a> {
    Spectral { op: &'a SpatialOperator, inv: Vec<f64> },
    Banded { op: &'a SpatialOperator, chol: BandedCholesky },
}

impl ShiftedSolver<'_> {
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        match self {
            ShiftedSolver::Spectral { op, inv } => {
                let mut c = op.to_modal(rhs)?;
                for (ci, d) in c.iter_mut().zip(inv) {
                    *ci *= d;
                }
                op.to_nodal(&c)
            }
            ShiftedSolver::Banded { op, chol } => {
                let b = op.apply_mass(rhs)?;
                Ok(chol.solve(&b))
            }
        }
    }
}

/// Symmetric band matrix stored by its lower band; row `i` holds entries
/// `(i, i-d)` for `d = 0..=bw`.
#[derive(Clone, Debug, PartialEq)]
pub struct BandMatrix {
    n: usize,
    bw: usize,
    data: Vec<f64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, bw: usize) -> Self {
        BandMatrix { n, bw, data: vec![0.0; n * (bw + 1)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        self.bw
    }

    /// Sets entry `(i, i-d)` (and by symmetry `(i-d, i)`).
    pub fn set(&mut self, i: usize, d: usize, v: f64) {
        self.data[i * (self.bw + 1) + d] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        let d = hi - lo;
        if d > self.bw {
            0.0
        } else {
            self.data[hi * (self.bw + 1) + d]
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            for d in 0..=self.bw.min(i) {
                let a = self.data[i * (self.bw + 1) + d];
                y[i] += a * x[i - d];
                if d > 0 {
                    y[i - d] += a * x[i];
                }
            }
        }
        y
    }
}

/// Cholesky factor `L Lᵀ` of a symmetric positive definite band matrix.
#[derive(Clone, Debug)]
pub struct BandedCholesky {
    l: BandMatrix,
}

impl BandedCholesky {
    pub fn factor(a: &BandMatrix) -> Result<Self> {
        let n = a.n;
        let bw = a.bw;
        let w = bw + 1;
        let mut l = a.clone();
        for i in 0..n {
            let jmin = i.saturating_sub(bw);
            for j in jmin..=i {
                // L[i][j] = (A[i][j] - Σ_k L[i][k] L[j][k]) / L[j][j]
                let mut s = l.data[i * w + (i - j)];
                let kmin = jmin.max(j.saturating_sub(bw));
                for k in kmin..j {
                    s -= l.data[i * w + (i - k)] * l.data[j * w + (j - k)];
                }
                if i == j {
                    if !(s > 0.0) {
                        return Err(Error::AccuracyNotAchieved {
                            routine: "banded_cholesky",
                            detail: "matrix is not positive definite",
                        });
                    }
                    l.data[i * w] = libm::sqrt(s);
                } else {
                    l.data[i * w + (i - j)] = s / l.data[j * w];
                }
            }
        }
        Ok(BandedCholesky { l })
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.l.n;
        let bw = self.l.bw;
        let w = bw + 1;
        let d = &self.l.data;
        let mut y = b.to_vec();
        for i in 0..n {
            let mut s = y[i];
            for k in i.saturating_sub(bw)..i {
                s -= d[i * w + (i - k)] * y[k];
            }
            y[i] = s / d[i * w];
        }
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in i + 1..n.min(i + bw + 1) {
                s -= d[k * w + (k - i)] * y[k];
            }
            y[i] = s / d[i * w];
        }
        y
    }
}

const GAUSS10: [(f64, f64); 10] = [
    (-0.9739065285171717, 0.06667134430868807),
    (-0.8650633666889845, 0.14945134915058036),
    (-0.6794095682990244, 0.219086362515982),
    (-0.4333953941292472, 0.2692667193099965),
    (-0.14887433898163122, 0.295524224714753),
    (0.14887433898163122, 0.295524224714753),
    (0.4333953941292472, 0.2692667193099965),
    (0.6794095682990244, 0.219086362515982),
    (0.8650633666889845, 0.14945134915058036),
    (0.9739065285171717, 0.06667134430868807),
];

fn load_1d(mesh: &MeshSpec, g: &Profile) -> Result<Vec<f64>> {
    let m = mesh.m;
    let h = mesh.h();
    let n = mesh.dof();
    let mut b = vec![0.0; n];
    if g.is_zero() {
        return Ok(b);
    }
    let breaks: Vec<f64> = match *g {
        Profile::Indicator { a, b } => vec![a, b],
        _ => Vec::new(),
    };
    for e in 0..m {
        let xl = e as f64 * h;
        let xr = (e + 1) as f64 * h;
        // contributions to left node e (ψ decreasing) and right node e+1
        let (mut left, mut right) = (0.0, 0.0);
        if let (Profile::Power(p), 0) = (g, e) {
            // exact on the first element: ∫_0^h x^p (x/h) dx
            right = libm::pow(h, p + 1.0) / (p + 2.0);
        } else {
            let mut pts = vec![xl];
            for &c in &breaks {
                if c > xl && c < xr {
                    pts.push(c);
                }
            }
            pts.push(xr);
            for win in pts.windows(2) {
                let (a, c) = (win[0], win[1]);
                let half = 0.5 * (c - a);
                let mid = 0.5 * (a + c);
                for (xi, wi) in GAUSS10 {
                    let x = mid + half * xi;
                    // indicators are evaluated on open sub-intervals
                    let gv = g.eval(x, 0.0)?;
                    let phi_r = (x - xl) / h;
                    left += wi * half * gv * (1.0 - phi_r);
                    right += wi * half * gv * phi_r;
                }
            }
        }
        if e >= 1 {
            b[e - 1] += left;
        }
        if e + 1 <= n {
            b[e] += right;
        }
    }
    Ok(b)
}

// Degree-5 rule on the reference triangle: (λ1, λ2, λ3, weight).
const DUNAVANT5: [(f64, f64, f64, f64); 7] = [
    (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.225),
    (0.059715871789770, 0.470142064105115, 0.470142064105115, 0.132394152788506),
    (0.470142064105115, 0.059715871789770, 0.470142064105115, 0.132394152788506),
    (0.470142064105115, 0.470142064105115, 0.059715871789770, 0.132394152788506),
    (0.797426985353087, 0.101286507323456, 0.101286507323456, 0.125939180544827),
    (0.101286507323456, 0.797426985353087, 0.101286507323456, 0.125939180544827),
    (0.101286507323456, 0.101286507323456, 0.797426985353087, 0.125939180544827),
];

fn load_2d(mesh: &MeshSpec, g: &Profile) -> Result<Vec<f64>> {
    let m = mesh.m;
    let n1 = mesh.n_axis();
    let h = mesh.h();
    let mut b = vec![0.0; mesh.dof()];
    if g.is_zero() {
        return Ok(b);
    }
    let area = 0.5 * h * h;
    for cj in 0..m {
        for ci in 0..m {
            let tris = [
                [(ci, cj), (ci + 1, cj), (ci + 1, cj + 1)],
                [(ci, cj), (ci + 1, cj + 1), (ci, cj + 1)],
            ];
            for tri in tris {
                let verts: [(f64, f64); 3] = core::array::from_fn(|k| (tri[k].0 as f64 * h, tri[k].1 as f64 * h));
                let integrals = match *g {
                    Profile::Constant(c) => [c * area / 3.0; 3],
                    Profile::Indicator2d { x0: bx0, x1: bx1, y0: by0, y1: by1 } => {
                        clipped_linear_integrals(&verts, (bx0, bx1, by0, by1))
                    }
                    _ => {
                        let mut acc = [0.0; 3];
                        for (l1, l2, l3, w) in DUNAVANT5 {
                            let x = l1 * verts[0].0 + l2 * verts[1].0 + l3 * verts[2].0;
                            let y = l1 * verts[0].1 + l2 * verts[1].1 + l3 * verts[2].1;
                            let gv = g.eval(x, y)?;
                            acc[0] += w * area * gv * l1;
                            acc[1] += w * area * gv * l2;
                            acc[2] += w * area * gv * l3;
                        }
                        acc
                    }
                };
                for k in 0..3 {
                    let (i, j) = tri[k];
                    if i >= 1 && i < m && j >= 1 && j < m {
                        b[(j - 1) * n1 + (i - 1)] += integrals[k];
                    }
                }
            }
        }
    }
    Ok(b)
}

/// `∫_{T∩B} λ_k` for the barycentric coordinates of triangle `T`.
fn clipped_linear_integrals(t: &[(f64, f64); 3], bx: (f64, f64, f64, f64)) -> [f64; 3] {
    let mut poly: Vec<(f64, f64)> = t.to_vec();
    let planes: [(f64, f64, f64); 4] = [
        (1.0, 0.0, -bx.0),  // x >= x0
        (-1.0, 0.0, bx.1),  // x <= x1
        (0.0, 1.0, -bx.2),  // y >= y0
        (0.0, -1.0, bx.3),  // y <= y1
    ];
    for (a, b, c) in planes {
        if poly.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(poly.len() + 2);
        for k in 0..poly.len() {
            let p = poly[k];
            let q = poly[(k + 1) % poly.len()];
            let fp = a * p.0 + b * p.1 + c;
            let fq = a * q.0 + b * q.1 + c;
            if fp >= 0.0 {
                next.push(p);
            }
            if (fp >= 0.0) != (fq >= 0.0) {
                let s = fp / (fp - fq);
                next.push((p.0 + s * (q.0 - p.0), p.1 + s * (q.1 - p.1)));
            }
        }
        poly = next;
    }
    if poly.len() < 3 {
        return [0.0; 3];
    }
    // area and centroid of the clipped polygon
    let (mut a2, mut cx, mut cy) = (0.0, 0.0, 0.0);
    for k in 0..poly.len() {
        let p = poly[k];
        let q = poly[(k + 1) % poly.len()];
        let cr = p.0 * q.1 - q.0 * p.1;
        a2 += cr;
        cx += (p.0 + q.0) * cr;
        cy += (p.1 + q.1) * cr;
    }
    if a2.abs() < 1e-300 {
        return [0.0; 3];
    }
    let area = 0.5 * a2;
    let (cx, cy) = (cx / (3.0 * a2), cy / (3.0 * a2));
    let bary = barycentric(t, cx, cy);
    [area.abs() * bary[0], area.abs() * bary[1], area.abs() * bary[2]]
}

fn barycentric(t: &[(f64, f64); 3], x: f64, y: f64) -> [f64; 3] {
    let (x1, y1) = t[0];
    let (x2, y2) = t[1];
    let (x3, y3) = t[2];
    let det = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3);
    let l1 = ((y2 - y3) * (x - x3) + (x3 - x2) * (y - y3)) / det;
    let l2 = ((y3 - y1) * (x - x3) + (x1 - x3) * (y - y3)) / det;
    [l1, l2, 1.0 - l1 - l2]
}
