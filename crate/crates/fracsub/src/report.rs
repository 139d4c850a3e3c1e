//! Table records and their CSV form.

use std::io::{Read, Write};

use crate::error::{HarnessError, Result};

pub const HEADER: [&str; 7] = ["scheme", "alpha", "exp", "param", "error", "rate", "rate_theory"];

/// One error entry of a reproduced table.
#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub scheme: String,
    pub alpha: f64,
    /// `ν` or `μ`; empty for initial-data rows.
    pub exp: Option<f64>,
    /// `N` or `M`.
    pub param: usize,
    pub error: f64,
    /// Rate against the previous entry of the same row.
    pub rate: Option<f64>,
    pub rate_theory: Option<f64>,
}

/// C-style `%.6E`: `2.890080E-03`.
pub fn format_error(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{x:.6E}");
    let (mant, exp) = s.split_once('E').expect("exponent");
    let e: i32 = exp.parse().expect("integer exponent");
    format!("{mant}E{}{:02}", if e < 0 { '-' } else { '+' }, e.abs())
}

pub fn format_rate(x: f64) -> String {
    format!("{x:.2}")
}

fn opt(x: Option<f64>, f: impl Fn(f64) -> String) -> String {
    x.map(f).unwrap_or_default()
}

pub fn write_records<W: Write>(w: W, records: &[Record]) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(HEADER)?;
    for r in records {
        wr.write_record([
            r.scheme.clone(),
            format!("{}", r.alpha),
            opt(r.exp, |v| format!("{v}")),
            r.param.to_string(),
            format_error(r.error),
            opt(r.rate, format_rate),
            opt(r.rate_theory, format_rate),
        ])?;
    }
    wr.flush()?;
    Ok(())
}

fn parse_f64(field: &str, name: &str) -> Result<f64> {
    field.trim().parse().map_err(|_| HarnessError::Config(format!("bad {name} `{field}`")))
}

fn parse_opt(field: &str, name: &str) -> Result<Option<f64>> {
    if field.trim().is_empty() {
        Ok(None)
    } else {
        parse_f64(field, name).map(Some)
    }
}

pub fn read_records<R: Read>(r: R) -> Result<Vec<Record>> {
    let mut rd = csv::Reader::from_reader(r);
    let header = rd.headers()?.clone();
    if header.iter().collect::<Vec<_>>() != HEADER {
        return Err(HarnessError::Config(format!("unexpected CSV header {header:?}")));
    }
    let mut out = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        if rec.len() != HEADER.len() {
            return Err(HarnessError::Config(format!("expected {} fields, found {}", HEADER.len(), rec.len())));
        }
        out.push(Record {
            scheme: rec[0].to_string(),
            alpha: parse_f64(&rec[1], "alpha")?,
            exp: parse_opt(&rec[2], "exp")?,
            param: rec[3].trim().parse().map_err(|_| HarnessError::Config(format!("bad param `{}`", &rec[3])))?,
            error: parse_f64(&rec[4], "error")?,
            rate: parse_opt(&rec[5], "rate")?,
            rate_theory: parse_opt(&rec[6], "rate_theory")?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_style_exponent() {
        assert_eq!(format_error(2.89008e-3), "2.890080E-03");
        assert_eq!(format_error(1.0), "1.000000E+00");
        assert_eq!(format_error(0.0), "0.000000E+00");
        assert_eq!(format_error(1.5e-120), "1.500000E-120");
        assert_eq!(format_rate(2.014), "2.01");
    }
}
