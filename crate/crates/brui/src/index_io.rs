//! Index output files.

use std::fs;
use std::path::Path;

use brui_core::{IndexSeries, Month};
use serde::Serialize;

use crate::format::real;
use crate::{Error, Result};

pub const INDEX_HEADER: [&str; 11] = [
    "month",
    "brukn",
    "crukn",
    "joint",
    "tbrukn",
    "tcrukn",
    "total_words",
    "brui_raw",
    "brui",
    "crui_raw",
    "crui",
];

/// One month of both indices, in output column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexRow {
    pub month: String,
    pub brukn: u64,
    pub crukn: u64,
    pub joint: u64,
    pub tbrukn: f64,
    pub tcrukn: f64,
    pub total_words: u64,
    pub brui_raw: f64,
    pub brui: f64,
    pub crui_raw: f64,
    pub crui: f64,
}

pub fn index_rows(a: &IndexSeries, b: &IndexSeries) -> Vec<IndexRow> {
    (0..a.months.len())
        .map(|i| {
            let c = a.counts[i];
            IndexRow {
                month: a.months[i].to_string(),
                brukn: c.brukn,
                crukn: c.crukn,
                joint: c.joint,
                tbrukn: a.weighted_totals[i],
                tcrukn: b.weighted_totals[i],
                total_words: c.total_words,
                brui_raw: a.raw[i],
                brui: a.normalized[i],
                crui_raw: b.raw[i],
                crui: b.normalized[i],
            }
        })
        .collect()
}

pub fn render_index_csv(rows: &[IndexRow]) -> String {
    let mut out = INDEX_HEADER.join(",");
    out.push('\n');
    for r in rows {
        let fields = [
            r.month.clone(),
            r.brukn.to_string(),
            r.crukn.to_string(),
            r.joint.to_string(),
            real(r.tbrukn),
            real(r.tcrukn),
            r.total_words.to_string(),
            real(r.brui_raw),
            real(r.brui),
            real(r.crui_raw),
            real(r.crui),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

pub fn write_index(dir: &Path, rows: &[IndexRow]) -> Result<()> {
    write_file(&dir.join("index.csv"), &render_index_csv(rows))?;
    let json = serde_json::to_string_pretty(rows).expect("index rows serialize");
    write_file(&dir.join("index.json"), &(json + "\n"))
}

/// Reads one value column of a month-keyed CSV.
pub fn read_month_column(path: &Path, column: Option<&str>) -> Result<(String, Vec<(Month, f64)>)> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::parse(path, e))?;
    let headers = reader.headers().map_err(|e| Error::parse(path, e))?.clone();
    if headers.get(0) != Some("month") {
        return Err(Error::parse(path, "first column must be 'month'"));
    }
    let idx = match column {
        Some(name) => headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::parse(path, format!("no column '{name}'")))?,
        None if headers.len() == 2 => 1,
        None => {
            return Err(Error::parse(
                path,
                "expected exactly one value column; choose one explicitly",
            ))
        }
    };
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::parse(path, e))?;
        let month: Month = rec[0].trim().parse().map_err(|e| Error::parse(path, e))?;
        let raw = rec.get(idx).unwrap_or("").trim();
        let v: f64 = raw
            .parse()
            .map_err(|_| Error::parse(path, format!("bad value '{raw}' at {month}")))?;
        out.push((month, v));
    }
    Ok((headers[idx].to_string(), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_line() {
        assert_eq!(
            render_index_csv(&[]),
            "month,brukn,crukn,joint,tbrukn,tcrukn,total_words,brui_raw,brui,crui_raw,crui\n"
        );
    }
}
