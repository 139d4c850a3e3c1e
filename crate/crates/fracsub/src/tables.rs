//! Reproduction of the published error tables and the golden comparison.

use fracsub_core::convergence::ConvergenceReport;
use fracsub_core::spatial::Projection;
use fracsub_core::{
    fode_study, pde_study, spatial_study, Compare, Dimension, InitialData, MassTreatment, MeshSpec, PdeStudy, Profile,
    SourceSpec, SpatialStudy, TimeScheme,
};
use rayon::prelude::*;

use crate::error::{HarnessError, Result};
use crate::golden::{self, GoldenRow, GoldenTable};
use crate::report::Record;

/// Mesh size used by the fully discrete tables.
pub const PDE_SUBDIVISIONS: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToleranceProfile {
    /// Error entries and rates.
    Strict,
    /// Observed orders only.
    Paper,
}

impl ToleranceProfile {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "strict" => Some(ToleranceProfile::Strict),
            "paper" => Some(ToleranceProfile::Paper),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TableOptions {
    pub compare: Compare,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions { compare: Compare::Prolong }
    }
}

/// A reproduced row next to its published counterpart.
#[derive(Clone, Debug)]
pub struct RowResult {
    pub golden: GoldenRow,
    pub report: ConvergenceReport,
}

#[derive(Clone, Debug)]
pub struct TableResult {
    pub id: u8,
    pub rows: Vec<RowResult>,
}

pub fn box_indicator() -> Profile {
    Profile::Indicator2d { x0: 0.25, x1: 0.75, y0: 0.25, y1: 0.75 }
}

pub fn interval_indicator() -> Profile {
    Profile::Indicator { a: 0.25, b: 0.75 }
}

fn scheme(name: &str) -> TimeScheme {
    TimeScheme::from_name(name).expect("golden scheme names are valid")
}

/// Source and initial data of the fully discrete examples.
pub fn pde_case(dim: Dimension, case_b: bool, mu: f64) -> Result<(SourceSpec, InitialData)> {
    Ok(match (dim, case_b) {
        (Dimension::One, false) => {
            (SourceSpec::zero().with_power_term(1.0, mu, Profile::Power(-0.25))?, InitialData::zero())
        }
        (Dimension::Two, false) => (SourceSpec::one_plus_power(mu, box_indicator())?, InitialData::zero()),
        (Dimension::One, true) => (SourceSpec::zero(), InitialData::new(interval_indicator())),
        (Dimension::Two, true) => (SourceSpec::zero(), InitialData::new(box_indicator())),
    })
}

fn run_row(t: &GoldenTable, g: &GoldenRow, opts: TableOptions) -> Result<ConvergenceReport> {
    let ns = t.params;
    let exp = g.exp.unwrap_or(0.0);
    let r = match t.id {
        1..=4 => fode_study(scheme(g.scheme), g.alpha, exp, -1.0, 1.0, ns)?,
        5 | 6 => {
            let (dim, profile) = if t.id == 5 {
                (Dimension::One, Profile::Power(-0.25))
            } else {
                (Dimension::Two, box_indicator())
            };
            let mut chain = vec![ns[0] / 2];
            chain.extend_from_slice(ns);
            spatial_study(&SpatialStudy {
                dim,
                mass: MassTreatment::Lumped,
                alpha: g.alpha,
                t: 1.0,
                source: SourceSpec::one_plus_power(exp, profile)?,
                u0: InitialData::zero(),
                projection: Projection::L2,
                subdivisions: chain,
                compare: opts.compare,
            })?
        }
        7 | 8 => {
            let dim = if t.id == 7 { Dimension::One } else { Dimension::Two };
            let (source, u0) = pde_case(dim, g.exp.is_none(), exp)?;
            pde_study(
                &PdeStudy {
                    mesh: MeshSpec::new(dim, PDE_SUBDIVISIONS)?,
                    mass: MassTreatment::Lumped,
                    scheme: scheme(g.scheme),
                    alpha: g.alpha,
                    t: 1.0,
                    source,
                    u0,
                    projection: Projection::L2,
                },
                ns,
            )?
        }
        _ => return Err(HarnessError::Config(format!("no table with id {}", t.id))),
    };
    if !r.valid {
        return Err(HarnessError::Numerical(fracsub_core::Error::AccuracyNotAchieved {
            routine: "table run",
            detail: "a refinement step failed",
        }));
    }
    Ok(r)
}

/// Runs every row of table `id`; rows are independent and run on the
/// current rayon pool, results keep table order.
pub fn run_table(id: u8, opts: TableOptions) -> Result<TableResult> {
    let t = golden::table(id).ok_or_else(|| HarnessError::Config(format!("table id must be 1..8, got {id}")))?;
    let rows = t
        .rows
        .par_iter()
        .map(|g| run_row(t, g, opts).map(|report| RowResult { golden: *g, report }))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableResult { id, rows })
}

impl TableResult {
    pub fn records(&self) -> Vec<Record> {
        let mut out = Vec::new();
        for r in &self.rows {
            for row in &r.report.rows {
                out.push(Record {
                    scheme: r.golden.scheme.to_string(),
                    alpha: r.golden.alpha,
                    exp: r.golden.exp,
                    param: row.param as usize,
                    error: row.error,
                    rate: row.rate,
                    rate_theory: r.golden.rate_theory,
                });
            }
        }
        out
    }
}

/// Outcome of comparing one row with the published values.
#[derive(Clone, Debug)]
pub struct RowCheck {
    pub label: String,
    pub pass: bool,
    /// Largest relative deviation of an error entry.
    pub max_rel: f64,
    pub rate: Option<f64>,
    pub expected_rate: f64,
    pub detail: String,
}

/// Relative tolerance per error entry and absolute rate tolerance.
pub fn tolerances(id: u8) -> (f64, f64) {
    match id {
        1..=4 => (1e-3, 0.03),
        5 | 6 => (1e-2, 0.03),
        _ => (5e-2, 0.05),
    }
}

/// Accepted interval for the average rate of a row.
pub fn rate_window(id: u8, g: &GoldenRow) -> (f64, f64) {
    let (_, tol) = tolerances(id);
    if id == 4 {
        // second-order rows; the α=0.7, ν=-0.1 row is irregular in the
        // published data (2.43)
        if g.alpha == 0.7 && g.exp == Some(-0.1) {
            (1.9, 2.5)
        } else {
            (1.9, 2.1)
        }
    } else {
        (g.rate - tol, g.rate + tol)
    }
}

pub fn row_label(id: u8, g: &GoldenRow) -> String {
    let e = match (id, g.exp) {
        (_, None) => "case b".to_string(),
        (1..=4, Some(v)) => format!("nu={v}"),
        (7 | 8, Some(v)) => format!("case a mu={v}"),
        (_, Some(v)) => format!("mu={v}"),
    };
    format!("table {id} {} alpha={} {e}", g.scheme, g.alpha)
}

pub fn check_table(res: &TableResult, profile: ToleranceProfile) -> Vec<RowCheck> {
    let (rel_tol, _) = tolerances(res.id);
    res.rows
        .iter()
        .map(|r| {
            let g = &r.golden;
            let errs = r.report.errors();
            let mut max_rel: f64 = 0.0;
            for (e, w) in errs.iter().zip(g.errors) {
                max_rel = max_rel.max((e / w - 1.0).abs());
            }
            if errs.len() != g.errors.len() {
                max_rel = f64::INFINITY;
            }
            let (lo, hi) = rate_window(res.id, g);
            let rate_ok = r.report.average_rate.is_some_and(|x| x >= lo && x <= hi);
            let errors_ok = profile == ToleranceProfile::Paper || max_rel <= rel_tol;
            let detail = format!(
                "max rel dev {max_rel:.2e} (tol {}), rate {} in [{lo:.2}, {hi:.2}]",
                if profile == ToleranceProfile::Paper { "unchecked".to_string() } else { format!("{rel_tol:.0e}") },
                r.report.average_rate.map(|x| format!("{x:.3}")).unwrap_or_else(|| "none".into()),
            );
            RowCheck {
                label: row_label(res.id, g),
                pass: rate_ok && errors_ok,
                max_rel,
                rate: r.report.average_rate,
                expected_rate: g.rate,
                detail,
            }
        })
        .collect()
}

/// Worker pool capped by `FRACSUB_THREADS` when set.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("FRACSUB_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| HarnessError::Config(format!("FRACSUB_THREADS must be a positive integer, got `{v}`")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| HarnessError::Config(e.to_string()))
}
