use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Matrix;
use crate::{Error, Month};

/// How a level series becomes a model variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transform {
    /// Take natural logs first.
    pub log: bool,
    /// Number of times to first-difference.
    pub diff: usize,
}

impl Transform {
    pub const NONE: Transform = Transform { log: false, diff: 0 };
    pub const DIFF: Transform = Transform { log: false, diff: 1 };
    pub const LOG_DIFF: Transform = Transform { log: true, diff: 1 };
}

/// Aligned monthly series in a fixed variable order.
///
/// The variable order is the recursive identification order used later by
/// the Cholesky factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct MacroPanel {
    months: Vec<Month>,
    names: Vec<String>,
    /// T × k, one column per variable.
    data: Matrix,
    transforms: Vec<Transform>,
}

impl MacroPanel {
    pub fn new(
        months: Vec<Month>,
        names: Vec<String>,
        columns: Vec<Vec<f64>>,
        transforms: Vec<Transform>,
    ) -> Result<Self, Error> {
        let k = names.len();
        if k == 0 {
            return Err(Error::InvalidPanel("no variables".into()));
        }
        if columns.len() != k || transforms.len() != k {
            return Err(Error::InvalidPanel(
                "names, columns and transforms differ in length".into(),
            ));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidPanel(format!("duplicate variable '{n}'")));
            }
        }
        if let Some(w) = months.windows(2).find(|w| w[1] != w[0].succ()) {
            return Err(Error::InvalidPanel(format!(
                "months not consecutive between {} and {}",
                w[0], w[1]
            )));
        }
        let t = months.len();
        for (name, col) in names.iter().zip(&columns) {
            if col.len() != t {
                return Err(Error::InvalidPanel(format!(
                    "series '{name}' has {} values, expected {t}",
                    col.len()
                )));
            }
            if let Some(i) = col.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidPanel(format!(
                    "series '{name}' is not finite at {}",
                    months[i]
                )));
            }
        }
        let mut data = Matrix::zeros(t, k);
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                data[(i, j)] = *v;
            }
        }
        Ok(MacroPanel {
            months,
            names,
            data,
            transforms,
        })
    }

    pub fn months(&self) -> &[Month] {
        &self.months
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn transforms(&self) -> &[Transform] {
        &self.transforms
    }

    /// Observations as rows.
    pub fn data(&self) -> &Matrix {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.months.len()
    }

    pub fn is_empty(&self) -> bool {
        self.months.is_empty()
    }

    pub fn series(&self, j: usize) -> Vec<f64> {
        self.data.column(j)
    }

    /// Months within `[start, end]`.
    pub fn restrict(&self, start: Month, end: Month) -> MacroPanel {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| self.months[i] >= start && self.months[i] <= end)
            .collect();
        let mut data = Matrix::zeros(keep.len(), self.names.len());
        for (r, &i) in keep.iter().enumerate() {
            data.row_mut(r).copy_from_slice(self.data.row(i));
        }
        MacroPanel {
            months: keep.iter().map(|&i| self.months[i]).collect(),
            names: self.names.clone(),
            data,
            transforms: self.transforms.clone(),
        }
    }
}

fn difference(x: &[f64]) -> Vec<f64> {
    x.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Applies each variable's transform: natural log where flagged, then the
/// requested number of first differences. The month axis loses as many
/// leading months as the largest difference order. The result carries
/// [`Transform::NONE`] for every variable.
pub fn transform_series(panel: &MacroPanel) -> Result<MacroPanel, Error> {
    let max_diff = panel.transforms.iter().map(|t| t.diff).max().unwrap_or(0);
    if panel.len() <= max_diff {
        return Err(Error::InvalidPanel(format!(
            "{} months cannot be differenced {max_diff} times",
            panel.len()
        )));
    }
    let mut columns = Vec::with_capacity(panel.names.len());
    for (j, t) in panel.transforms.iter().enumerate() {
        let mut col = panel.series(j);
        if t.log {
            if let Some(i) = col.iter().position(|v| !(*v > 0.0)) {
                return Err(Error::NonPositiveLog {
                    series: panel.names[j].clone(),
                    month: panel.months[i],
                });
            }
            col.iter_mut().for_each(|v| *v = libm::log(*v));
        }
        for _ in 0..t.diff {
            col = difference(&col);
        }
        let skip = max_diff - t.diff;
        columns.push(col[skip..].to_vec());
    }
    MacroPanel::new(
        panel.months[max_diff..].to_vec(),
        panel.names.clone(),
        columns,
        alloc::vec![Transform::NONE; panel.names.len()],
    )
}
