use std::fmt::Write as _;
use std::path::Path;

use brui_core::econ::correlate_by_month;
use serde::Serialize;

use crate::format::real;
use crate::index_io::{read_month_column, write_file};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct CorrelationReport {
    pub series_a: String,
    pub series_b: String,
    pub r: f64,
    pub n: usize,
    pub overlap_start: String,
    pub overlap_end: String,
}

/// Correlates two month-keyed series over their shared months and writes
/// `correlation.json` and the aligned `comparison.csv` to `out`.
pub fn run_compare(
    a: &Path,
    b: &Path,
    column_a: Option<&str>,
    column_b: Option<&str>,
    out: &Path,
) -> Result<CorrelationReport> {
    for p in [a, b] {
        if !p.exists() {
            return Err(Error::Missing(p.to_path_buf()));
        }
    }
    let (name_a, sa) = read_month_column(a, column_a)?;
    let (name_b, sb) = read_month_column(b, column_b)?;
    let aligned = correlate_by_month(&sa, &sb)
        .map_err(|e| Error::data(format!("{} vs {}", a.display(), b.display()), e))?;
    let report = CorrelationReport {
        series_a: format!("{}:{name_a}", a.display()),
        series_b: format!("{}:{name_b}", b.display()),
        r: aligned.r,
        n: aligned.n,
        overlap_start: aligned.first.to_string(),
        overlap_end: aligned.last.to_string(),
    };
    let mut csv = String::from("month,a,b\n");
    for (m, x, y) in &aligned.pairs {
        let _ = writeln!(csv, "{m},{},{}", real(*x), real(*y));
    }
    write_file(&out.join("comparison.csv"), &csv)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    write_file(&out.join("correlation.json"), &(json + "\n"))?;
    Ok(report)
}
