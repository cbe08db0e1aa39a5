use std::path::Path;

use brui_core::Month;

use crate::{Error, Result};

/// A month-keyed CSV of level series, as read.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelTable {
    pub months: Vec<Month>,
    pub names: Vec<String>,
    /// `columns[j][t]`; `None` for an empty cell.
    pub columns: Vec<Vec<Option<f64>>>,
}

impl PanelTable {
    pub fn column(&self, name: &str) -> Option<&[Option<f64>]> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|j| self.columns[j].as_slice())
    }
}

/// Reads `month,<series...>`. Rows are sorted by month; duplicate months
/// are rejected.
pub fn read_panel(path: &Path) -> Result<PanelTable> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::parse(path, e))?;
    let headers = reader.headers().map_err(|e| Error::parse(path, e))?.clone();
    if headers.get(0).map(str::trim) != Some("month") || headers.len() < 2 {
        return Err(Error::parse(path, "expected header 'month,<series...>'"));
    }
    let names: Vec<String> = headers.iter().skip(1).map(|h| h.trim().to_string()).collect();
    let mut rows: Vec<(Month, Vec<Option<f64>>)> = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::parse(path, e))?;
        let month: Month = rec[0].trim().parse().map_err(|e| Error::parse(path, e))?;
        let mut values = Vec::with_capacity(names.len());
        for (j, name) in names.iter().enumerate() {
            let cell = rec.get(j + 1).unwrap_or("").trim();
            values.push(if cell.is_empty() || cell.eq_ignore_ascii_case("na") {
                None
            } else {
                Some(
                    cell.parse().map_err(|_| {
                        Error::parse(path, format!("bad value '{cell}' for {name} at {month}"))
                    })?,
                )
            });
        }
        rows.push((month, values));
    }
    rows.sort_by_key(|r| r.0);
    if let Some(w) = rows.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::parse(path, format!("duplicate month {}", w[0].0)));
    }
    let columns = (0..names.len())
        .map(|j| rows.iter().map(|r| r.1[j]).collect())
        .collect();
    Ok(PanelTable {
        months: rows.iter().map(|r| r.0).collect(),
        names,
        columns,
    })
}
