//! Finite element operators against a dense element-by-element assembly, and
//! shifted solves against dense Gaussian elimination.

use fracsub_core::spatial::{BandMatrix, BandedCholesky, Projection};
use fracsub_core::{Dimension, MassTreatment, MeshSpec, Profile, SolveMethod, SpatialOperator};
use proptest::prelude::*;

struct Dense {
    n: usize,
    a: Vec<f64>,
}

impl Dense {
    fn zeros(n: usize) -> Self {
        Dense { n, a: vec![0.0; n * n] }
    }
    fn add(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] += v;
    }
    fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }
    fn mul(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum()).collect()
    }
    fn combine(&self, s: f64, other: &Dense, t: f64) -> Dense {
        Dense { n: self.n, a: self.a.iter().zip(&other.a).map(|(x, y)| s * x + t * y).collect() }
    }
    /// Gaussian elimination with partial pivoting.
    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut x = b.to_vec();
        for c in 0..n {
            let p = (c..n).max_by(|&i, &j| a[i * n + c].abs().total_cmp(&a[j * n + c].abs())).unwrap();
            for k in 0..n {
                a.swap(c * n + k, p * n + k);
            }
            x.swap(c, p);
            for r in c + 1..n {
                let f = a[r * n + c] / a[c * n + c];
                for k in c..n {
                    a[r * n + k] -= f * a[c * n + k];
                }
                x[r] -= f * x[c];
            }
        }
        for c in (0..n).rev() {
            let mut s = x[c];
            for k in c + 1..n {
                s -= a[c * n + k] * x[k];
            }
            x[c] = s / a[c * n + c];
        }
        x
    }
}

/// Interior index of grid point `(i, j)` or `None` on the boundary.
fn interior(m: usize, i: usize, j: usize) -> Option<usize> {
    if i == 0 || j == 0 || i == m || j == m {
        None
    } else {
        Some((j - 1) * (m - 1) + (i - 1))
    }
}

/// Stiffness and mass matrices assembled from element contributions.
fn assemble(dim: Dimension, m: usize, mass: MassTreatment) -> (Dense, Dense) {
    let h = 1.0 / m as f64;
    match dim {
        Dimension::One => {
            let n = m - 1;
            let (mut a, mut b) = (Dense::zeros(n), Dense::zeros(n));
            for e in 0..m {
                let nodes = [e, e + 1];
                for (p, &gp) in nodes.iter().enumerate() {
                    for (q, &gq) in nodes.iter().enumerate() {
                        if gp == 0 || gp == m || gq == 0 || gq == m {
                            continue;
                        }
                        let (i, j) = (gp - 1, gq - 1);
                        a.add(i, j, if p == q { 1.0 / h } else { -1.0 / h });
                        let mv = match mass {
                            MassTreatment::Galerkin => h / 6.0 * if p == q { 2.0 } else { 1.0 },
                            MassTreatment::Lumped => if p == q { h / 2.0 } else { 0.0 },
                        };
                        b.add(i, j, mv);
                    }
                }
            }
            (a, b)
        }
        Dimension::Two => {
            let n = (m - 1) * (m - 1);
            let (mut a, mut b) = (Dense::zeros(n), Dense::zeros(n));
            let area = h * h / 2.0;
            for j in 0..m {
                for i in 0..m {
                    // split along the SW-NE diagonal
                    let tris = [[(i, j), (i + 1, j), (i + 1, j + 1)], [(i, j), (i + 1, j + 1), (i, j + 1)]];
                    for t in tris {
                        let xy: Vec<(f64, f64)> = t.iter().map(|&(p, q)| (p as f64 * h, q as f64 * h)).collect();
                        let det = (xy[1].0 - xy[0].0) * (xy[2].1 - xy[0].1) - (xy[2].0 - xy[0].0) * (xy[1].1 - xy[0].1);
                        let grads: Vec<(f64, f64)> = (0..3)
                            .map(|k| {
                                let (p1, p2) = (xy[(k + 1) % 3], xy[(k + 2) % 3]);
                                ((p1.1 - p2.1) / det, (p2.0 - p1.0) / det)
                            })
                            .collect();
                        for p in 0..3 {
                            for q in 0..3 {
                                let (Some(gi), Some(gj)) = (interior(m, t[p].0, t[p].1), interior(m, t[q].0, t[q].1)) else {
                                    continue;
                                };
                                a.add(gi, gj, area * (grads[p].0 * grads[q].0 + grads[p].1 * grads[q].1));
                                let mv = match mass {
                                    MassTreatment::Galerkin => area / 12.0 * if p == q { 2.0 } else { 1.0 },
                                    MassTreatment::Lumped => if p == q { area / 3.0 } else { 0.0 },
                                };
                                b.add(gi, gj, mv);
                            }
                        }
                    }
                }
            }
            (a, b)
        }
    }
}

fn configs() -> Vec<(Dimension, usize, MassTreatment)> {
    let mut out = Vec::new();
    for mass in [MassTreatment::Galerkin, MassTreatment::Lumped] {
        for m in [2, 3, 4, 8, 16] {
            out.push((Dimension::One, m, mass));
            out.push((Dimension::Two, m, mass));
        }
    }
    out
}

fn test_vector(n: usize, seed: u64) -> Vec<f64> {
    (0..n).map(|i| ((i as f64 + 1.0) * 0.7548776662 + seed as f64 * 0.5698402910).fract() - 0.5).collect()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn operators_match_element_assembly() {
    for (dim, m, mass) in configs() {
        let op = SpatialOperator::build(MeshSpec::new(dim, m).unwrap(), mass);
        let (a, b) = assemble(dim, m, mass);
        let v = test_vector(op.dof(), 3);
        let scale = (m * m) as f64;
        assert!(max_diff(&op.apply_stiffness(&v).unwrap(), &a.mul(&v)) < 1e-12 * scale, "{dim:?} {m} {mass:?}");
        assert!(max_diff(&op.apply_mass(&v).unwrap(), &b.mul(&v)) < 1e-15, "{dim:?} {m} {mass:?}");
    }
}

#[test]
fn band_matrix_matches_dense() {
    for (dim, m, mass) in configs() {
        let op = SpatialOperator::build(MeshSpec::new(dim, m).unwrap(), mass);
        let (a, b) = assemble(dim, m, mass);
        let band = op.band_matrix(1.7, 0.3);
        let dense = b.combine(1.7, &a, 0.3);
        for i in 0..op.dof() {
            for j in 0..op.dof() {
                assert!((band.get(i, j) - dense.get(i, j)).abs() < 1e-12 * (m * m) as f64, "{dim:?} {m} {mass:?} ({i},{j})");
            }
        }
    }
}

#[test]
fn shifted_solve_matches_dense_elimination() {
    for (dim, m, mass) in configs() {
        let op = SpatialOperator::build(MeshSpec::new(dim, m).unwrap(), mass);
        let (a, b) = assemble(dim, m, mass);
        for shift in [1e-3, 1.0, 250.0] {
            // (shift·Mass + A) u = Mass·rhs
            let dense = b.combine(shift, &a, 1.0);
            let rhs = test_vector(op.dof(), 11);
            let want = dense.solve(&b.mul(&rhs));
            let norm = want.iter().map(|x| x.abs()).fold(0.0, f64::max);
            let methods: &[SolveMethod] =
                if op.has_modal_basis() { &[SolveMethod::Spectral, SolveMethod::Banded] } else { &[SolveMethod::Banded] };
            for &method in methods {
                let got = op.shifted_solve(shift, &rhs, method).unwrap();
                assert!(max_diff(&got, &want) <= 1e-12 * norm, "{dim:?} {m} {mass:?} {method:?} shift={shift}");
            }
        }
    }
}

#[test]
fn two_d_galerkin_has_no_modal_basis() {
    let op = SpatialOperator::build(MeshSpec::two_d(8).unwrap(), MassTreatment::Galerkin);
    assert!(op.eigenvalues().is_err());
    assert!(op.to_modal(&vec![0.0; op.dof()]).is_err());
    assert!(op.shifted_solve(1.0, &vec![1.0; op.dof()], SolveMethod::Spectral).is_err());
}

#[test]
fn eigenpairs_have_small_residual() {
    for mass in [MassTreatment::Galerkin, MassTreatment::Lumped] {
        for m in [2, 5, 16, 64] {
            let op = SpatialOperator::build(MeshSpec::one_d(m).unwrap(), mass);
            for k in 0..op.dof() {
                let r = op.eigen_residual(k).unwrap();
                let lam = op.eigenvalues().unwrap()[k];
                assert!(r <= 1e-12 * lam.max(1.0), "1d {mass:?} M={m} k={k}: {r:e}");
            }
        }
    }
    for m in [2, 5, 16, 32] {
        let op = SpatialOperator::build(MeshSpec::two_d(m).unwrap(), MassTreatment::Lumped);
        let lam = op.eigenvalues().unwrap();
        for k in (0..op.dof()).step_by(7) {
            let r = op.eigen_residual(k).unwrap();
            assert!(r <= 1e-12 * lam[k], "2d M={m} k={k}: {r:e}");
        }
    }
}

#[test]
fn eigenvalues_in_closed_form() {
    let m = 10;
    let h = 0.1f64;
    let lumped = SpatialOperator::build(MeshSpec::one_d(m).unwrap(), MassTreatment::Lumped);
    let galerkin = SpatialOperator::build(MeshSpec::one_d(m).unwrap(), MassTreatment::Galerkin);
    for k in 1..m {
        let s2 = (k as f64 * std::f64::consts::PI * h / 2.0).sin().powi(2);
        let l = 4.0 / (h * h) * s2;
        assert!((lumped.eigenvalues().unwrap()[k - 1] - l).abs() < 1e-11);
        let g = 6.0 / (h * h) * (1.0 - (k as f64 * std::f64::consts::PI * h).cos()) / (2.0 + (k as f64 * std::f64::consts::PI * h).cos());
        assert!((galerkin.eigenvalues().unwrap()[k - 1] - g).abs() < 1e-10);
    }
}

#[test]
fn eigenvectors_are_mass_orthonormal() {
    for (dim, mass) in [
        (Dimension::One, MassTreatment::Galerkin),
        (Dimension::One, MassTreatment::Lumped),
        (Dimension::Two, MassTreatment::Lumped),
    ] {
        let op = SpatialOperator::build(MeshSpec::new(dim, 6).unwrap(), mass);
        let phis: Vec<Vec<f64>> = (0..op.dof()).map(|k| op.eigenvector(k).unwrap()).collect();
        for i in 0..op.dof() {
            for j in 0..op.dof() {
                let ip = op.inner(&phis[i], &phis[j]).unwrap();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - want).abs() < 1e-13, "{dim:?} {mass:?} ({i},{j}) {ip}");
            }
        }
    }
}

#[test]
fn modal_round_trip() {
    for (dim, m, mass) in configs() {
        let op = SpatialOperator::build(MeshSpec::new(dim, m).unwrap(), mass);
        if !op.has_modal_basis() {
            continue;
        }
        let v = test_vector(op.dof(), 5);
        let back = op.to_nodal(&op.to_modal(&v).unwrap()).unwrap();
        assert!(max_diff(&v, &back) < 1e-13, "{dim:?} {m} {mass:?}");
        // Parseval in the mass inner product
        let c = op.to_modal(&v).unwrap();
        let e: f64 = c.iter().map(|x| x * x).sum();
        assert!((e - op.norm(&v).unwrap().powi(2)).abs() < 1e-13);
    }
}

#[test]
fn load_vector_matches_fine_quadrature() {
    // composite midpoint rule on each element against hat functions
    let m = 8;
    let op = SpatialOperator::build(MeshSpec::one_d(m).unwrap(), MassTreatment::Lumped);
    for g in [Profile::Constant(2.0), Profile::Sine { n: 3, m: 0 }, Profile::Indicator { a: 0.3, b: 0.61 }] {
        let b = op.load_vector(&g).unwrap();
        let h = 1.0 / m as f64;
        let q = 20_000;
        for (i, bi) in b.iter().enumerate() {
            let xi = (i + 1) as f64 * h;
            let mut s = 0.0;
            for k in 0..q {
                let x = xi - h + 2.0 * h * (k as f64 + 0.5) / q as f64;
                s += g.eval(x, 0.0).unwrap() * (1.0 - (x - xi).abs() / h) * 2.0 * h / q as f64;
            }
            assert!((bi - s).abs() < 1e-6 * h, "{g:?} i={i}: {bi} vs {s}");
        }
    }
    let b = op.load_vector(&Profile::Power(-0.25)).unwrap();
    let h = 1.0 / m as f64;
    // ∫_0^h x^{-1/4}·x/h dx + ∫_h^{2h} x^{-1/4}(2 - x/h) dx
    let exact_left = h.powf(0.75) / 1.75;
    let exact_right = {
        let f = |x: f64| 2.0 * x.powf(0.75) / 0.75 - x.powf(1.75) / (1.75 * h);
        f(2.0 * h) - f(h)
    };
    assert!((b[0] - (exact_left + exact_right)).abs() < 1e-14, "{} vs {}", b[0], exact_left + exact_right);
}

#[test]
fn two_d_box_load_is_exact() {
    // the box load is piecewise linear integration over clipped triangles;
    // total mass Σ b_i equals the box area when the box avoids the boundary layer
    let op = SpatialOperator::build(MeshSpec::two_d(16).unwrap(), MassTreatment::Lumped);
    let g = Profile::Indicator2d { x0: 0.25, x1: 0.75, y0: 0.25, y1: 0.75 };
    let b = op.load_vector(&g).unwrap();
    let total: f64 = b.iter().sum();
    assert!((total - 0.25).abs() < 1e-14, "{total}");
    // an off-grid box: Σ_i b_i = ∫ g Σ_i ψ_i = area when it stays one cell away from ∂Ω
    let g = Profile::Indicator2d { x0: 0.13, x1: 0.71, y0: 0.2, y1: 0.9 };
    let total: f64 = op.load_vector(&g).unwrap().iter().sum();
    assert!((total - 0.58 * 0.7).abs() < 1e-13, "{total}");
}

#[test]
fn l2_projection_reproduces_discrete_functions() {
    // for g = sin(πx) sin(πy) the projection error is second order
    let mut prev: Option<f64> = None;
    for m in [8, 16, 32] {
        let op = SpatialOperator::build(MeshSpec::two_d(m).unwrap(), MassTreatment::Galerkin);
        let g = Profile::Sine { n: 1, m: 1 };
        let p = op.project(&g, Projection::L2).unwrap();
        let i = op.interpolate(&g).unwrap();
        let d: Vec<f64> = p.iter().zip(&i).map(|(a, b)| a - b).collect();
        let e = op.norm(&d).unwrap();
        if let Some(pe) = prev {
            let r: f64 = (pe / e).log2();
            assert!(r > 1.8, "rate {r}");
        }
        prev = Some(e);
    }
}

#[test]
fn prolong_then_restrict_is_identity() {
    for dim in [Dimension::One, Dimension::Two] {
        let coarse = MeshSpec::new(dim, 4).unwrap();
        let fine = MeshSpec::new(dim, 16).unwrap();
        assert!(coarse.is_refined_by(&fine));
        assert!(!fine.is_refined_by(&coarse));
        assert!(!coarse.is_refined_by(&MeshSpec::new(dim, 6).unwrap()));
        let v = test_vector(coarse.dof(), 2);
        let up = coarse.prolong_to(&fine, &v).unwrap();
        let back = coarse.restrict_from(&fine, &up).unwrap();
        assert!(max_diff(&v, &back) == 0.0);
    }
}

#[test]
fn prolongation_is_exact_for_linear_functions() {
    let coarse = MeshSpec::two_d(4).unwrap();
    let fine = MeshSpec::two_d(8).unwrap();
    let lin = |x: f64, y: f64| 0.3 + 2.0 * x - 1.5 * y;
    let v: Vec<f64> = (0..coarse.dof()).map(|i| lin(coarse.node(i).0, coarse.node(i).1)).collect();
    let up = coarse.prolong_to(&fine, &v).unwrap();
    for (i, u) in up.iter().enumerate() {
        let (x, y) = fine.node(i);
        // nodes adjacent to the boundary see the zero boundary value instead
        if x > 0.25 - 1e-12 && x < 0.75 + 1e-12 && y > 0.25 - 1e-12 && y < 0.75 + 1e-12 {
            assert!((u - lin(x, y)).abs() < 1e-14, "({x},{y})");
        }
    }
}

#[test]
fn node_numbering_is_x_fastest() {
    let mesh = MeshSpec::two_d(4).unwrap();
    assert_eq!(mesh.node(0), (0.25, 0.25));
    assert_eq!(mesh.node(1), (0.5, 0.25));
    assert_eq!(mesh.node(3), (0.25, 0.5));
    assert_eq!(mesh.dof(), 9);
}

#[test]
fn banded_cholesky_solves_spd_systems() {
    let mut a = BandMatrix::zeros(5, 2);
    for i in 0..5 {
        a.set(i, 0, 6.0);
        if i >= 1 {
            a.set(i, 1, -1.0);
        }
        if i >= 2 {
            a.set(i, 2, 0.5);
        }
    }
    let x = vec![1.0, -2.0, 3.0, 0.5, 4.0];
    let b = a.mul_vec(&x);
    let got = BandedCholesky::factor(&a).unwrap().solve(&b);
    assert!(max_diff(&got, &x) < 1e-14);
    let mut bad = BandMatrix::zeros(2, 1);
    bad.set(0, 0, 1.0);
    bad.set(1, 0, 1.0);
    bad.set(1, 1, 2.0);
    assert!(BandedCholesky::factor(&bad).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stiffness_is_symmetric_positive(m in 2usize..12, two_d in any::<bool>(), seed in 0u64..1000) {
        let dim = if two_d { Dimension::Two } else { Dimension::One };
        let op = SpatialOperator::build(MeshSpec::new(dim, m).unwrap(), MassTreatment::Galerkin);
        let u = test_vector(op.dof(), seed);
        let v = test_vector(op.dof(), seed + 17);
        let au = op.apply_stiffness(&u).unwrap();
        let av = op.apply_stiffness(&v).unwrap();
        let uav: f64 = u.iter().zip(&av).map(|(a, b)| a * b).sum();
        let vau: f64 = v.iter().zip(&au).map(|(a, b)| a * b).sum();
        prop_assert!((uav - vau).abs() < 1e-10 * (1.0 + uav.abs()));
        let uau: f64 = u.iter().zip(&au).map(|(a, b)| a * b).sum();
        prop_assert!(uau > 0.0);
    }

    #[test]
    fn spectral_and_banded_solves_agree(m in 2usize..20, two_d in any::<bool>(), lumped in any::<bool>(), shift in 1e-4f64..1e4) {
        let dim = if two_d { Dimension::Two } else { Dimension::One };
        let mass = if lumped { MassTreatment::Lumped } else { MassTreatment::Galerkin };
        let op = SpatialOperator::build(MeshSpec::new(dim, m).unwrap(), mass);
        prop_assume!(op.has_modal_basis());
        let rhs = test_vector(op.dof(), m as u64);
        let a = op.shifted_solve(shift, &rhs, SolveMethod::Spectral).unwrap();
        let b = op.shifted_solve(shift, &rhs, SolveMethod::Banded).unwrap();
        let n = b.iter().map(|x| x.abs()).fold(0.0, f64::max);
        prop_assert!(max_diff(&a, &b) <= 1e-11 * n);
    }
}
