use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::{Error, Month};

/// Product-moment correlation of two equal-length series.
pub fn pearson_correlation(a: &[f64], b: &[f64]) -> Result<f64, Error> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument("series lengths differ".into()));
    }
    if a.len() < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two observations"));
    }
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        sab += dx * dy;
        saa += dx * dx;
        sbb += dy * dy;
    }
    let constant = |s: &[f64]| s.iter().all(|v| *v == s[0]);
    if constant(a) || constant(b) || saa == 0.0 || sbb == 0.0 {
        return Err(Error::UndefinedCorrelation("constant series"));
    }
    Ok((sab / (libm::sqrt(saa) * libm::sqrt(sbb))).clamp(-1.0, 1.0))
}

/// Correlation over the months both series share.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignedCorrelation {
    pub r: f64,
    pub n: usize,
    pub first: Month,
    pub last: Month,
    /// (month, a, b) for every shared month, in order.
    pub pairs: Vec<(Month, f64, f64)>,
}

/// Intersects the two month axes, then correlates.
pub fn correlate_by_month(a: &[(Month, f64)], b: &[(Month, f64)]) -> Result<AlignedCorrelation, Error> {
    let lookup: BTreeMap<Month, f64> = b.iter().copied().collect();
    let mut pairs: Vec<(Month, f64, f64)> = a
        .iter()
        .filter_map(|&(m, x)| lookup.get(&m).map(|&y| (m, x, y)))
        .collect();
    pairs.sort_by_key(|p| p.0);
    pairs.dedup_by_key(|p| p.0);
    if pairs.is_empty() {
        return Err(Error::UndefinedCorrelation("no overlapping months"));
    }
    let xs: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| p.2).collect();
    Ok(AlignedCorrelation {
        r: pearson_correlation(&xs, &ys)?,
        n: pairs.len(),
        first: pairs[0].0,
        last: pairs[pairs.len() - 1].0,
        pairs,
    })
}
