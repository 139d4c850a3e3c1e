//! Error tables and observed convergence rates.

use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Time,
    Space,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    /// `N` for time studies, `1/h` for space studies.
    pub param: f64,
    pub error: f64,
    pub rate: Option<f64>,
}

/// Errors over a refinement chain with successive rates.
///
/// Each refinement halves the step (or mesh) size, and the rate between
/// consecutive rows is `log₂(e_prev/e_next)`. The average is the arithmetic
/// mean of the defined rates.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub axis: Axis,
    pub rows: Vec<ConvergenceRow>,
    pub average_rate: Option<f64>,
    /// False when some run in the chain failed.
    pub valid: bool,
}

/// `log₂(prev/next)`, undefined unless both errors are positive and finite.
pub fn rate(prev: f64, next: f64) -> Option<f64> {
    if prev > 0.0 && next > 0.0 && prev.is_finite() && next.is_finite() {
        Some(libm::log2(prev / next))
    } else {
        None
    }
}

pub fn average(rates: &[Option<f64>]) -> Option<f64> {
    let defined: Vec<f64> = rates.iter().flatten().copied().collect();
    if defined.is_empty() {
        None
    } else {
        Some(defined.iter().sum::<f64>() / defined.len() as f64)
    }
}

impl ConvergenceReport {
    pub fn from_errors(axis: Axis, params: &[f64], errors: &[f64]) -> Self {
        let mut rows = Vec::with_capacity(errors.len());
        for (i, (&p, &e)) in params.iter().zip(errors).enumerate() {
            let r = if i == 0 { None } else { rate(errors[i - 1], e) };
            rows.push(ConvergenceRow { param: p, error: e, rate: r });
        }
        let rates: Vec<Option<f64>> = rows.iter().map(|r| r.rate).collect();
        ConvergenceReport { axis, rows, average_rate: average(&rates), valid: true }
    }

    pub fn errors(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.error).collect()
    }
}
