//! Context-window classification and index construction.

use alloc::vec::Vec;

use crate::corpus::Report;
use crate::lexicon::{match_ngrams, Category, Lexicon, Match};
use crate::{Error, Month};

pub const DEFAULT_RADIUS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    EventAOnly,
    EventBOnly,
    Joint,
    Neither,
    /// Voided by the exclusion rule; counts nowhere.
    Excluded,
}

/// The context window opened by one uncertainty hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowRecord {
    pub month: Month,
    /// Position of the uncertainty term in the stripped stream.
    pub center: usize,
    /// Inclusive bounds after truncation at the stream edges.
    pub low: usize,
    pub high: usize,
    pub classification: Classification,
}

impl WindowRecord {
    pub fn contains(&self, position: usize) -> bool {
        (self.low..=self.high).contains(&position)
    }
}

/// One window per uncertainty match, spanning `radius` tokens either side.
///
/// Windows start out as [`Classification::Neither`]; see [`classify_window`].
pub fn extract_windows(
    month: Month,
    stream_len: usize,
    matches: &[Match],
    radius: usize,
) -> Vec<WindowRecord> {
    let last = stream_len.saturating_sub(1);
    matches
        .iter()
        .filter(|m| m.category == Category::Uncertainty)
        .map(|m| WindowRecord {
            month,
            center: m.position,
            low: m.position.saturating_sub(radius),
            high: (m.position + radius).min(last),
            classification: Classification::Neither,
        })
        .collect()
}

/// Classifies a window by which event terms start inside its span.
///
/// A window whose only event-A evidence is the exclusion trigger, and which
/// also holds an exclusion-context term, is [`Classification::Excluded`].
pub fn classify_window(w: &WindowRecord, matches: &[Match], lexicon: &Lexicon) -> Classification {
    let trigger = &lexicon.exclusion_trigger().canonical;
    let mut event_a = 0usize;
    let mut trigger_only = true;
    let mut event_b = false;
    let mut context = false;
    for m in matches.iter().filter(|m| w.contains(m.position)) {
        match m.category {
            Category::EventA => {
                event_a += 1;
                trigger_only &= lexicon.term(m.category, m.term).canonical == *trigger;
            }
            Category::EventB => event_b = true,
            Category::ExclusionContext => context = true,
            Category::Uncertainty => {}
        }
    }
    match (event_a > 0, event_b) {
        (true, _) if trigger_only && context => Classification::Excluded,
        (true, true) => Classification::Joint,
        (true, false) => Classification::EventAOnly,
        (false, true) => Classification::EventBOnly,
        (false, false) => Classification::Neither,
    }
}

/// Per-month window tallies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonthlyCounts {
    pub month: Month,
    /// Windows with event-A terms only.
    pub brukn: u64,
    /// Windows with event-B terms only.
    pub crukn: u64,
    pub joint: u64,
    pub neither: u64,
    pub excluded: u64,
    pub total_words: u64,
}

impl MonthlyCounts {
    pub fn windows(&self) -> u64 {
        self.brukn + self.crukn + self.joint + self.neither + self.excluded
    }
}

/// Splits joint windows between the two events in proportion to their
/// exclusive counts; with no exclusive counts the split is even.
pub fn weight_joint(c: &MonthlyCounts) -> (f64, f64) {
    let (a, b, j) = (c.brukn as f64, c.crukn as f64, c.joint as f64);
    if c.brukn + c.crukn == 0 {
        return (j / 2.0, j / 2.0);
    }
    let total = a + b;
    (a + j * a / total, b + j * b / total)
}

/// Weighted count per word of report.
pub fn standardize(weighted: f64, total_words: u64) -> Result<f64, Error> {
    if total_words == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(weighted / total_words as f64)
}

/// Rescales so the largest value is exactly 100.
pub fn normalize_series(raw: &[f64]) -> Result<Vec<f64>, Error> {
    let max = raw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(max > 0.0) || !max.is_finite() {
        return Err(Error::DegenerateSeries);
    }
    // v / max first, so the maximum maps to 1.0 and then to exactly 100
    Ok(raw.iter().map(|v| v / max * 100.0).collect())
}

/// Windows and counts for a single report.
#[derive(Debug, Clone)]
pub struct ReportAnalysis {
    pub matches: Vec<Match>,
    pub windows: Vec<WindowRecord>,
    pub counts: MonthlyCounts,
}

pub fn analyze_report(report: &Report, lexicon: &Lexicon, radius: usize) -> ReportAnalysis {
    let view = report.content_view();
    let matches = match_ngrams(&view, lexicon);
    let mut windows = extract_windows(report.month, view.len(), &matches, radius);
    let mut counts = MonthlyCounts {
        month: report.month,
        brukn: 0,
        crukn: 0,
        joint: 0,
        neither: 0,
        excluded: 0,
        total_words: report.total_words as u64,
    };
    for w in &mut windows {
        // only matches near the window can fall inside it
        let lo = matches.partition_point(|m| m.position < w.low);
        let hi = matches.partition_point(|m| m.position <= w.high);
        w.classification = classify_window(w, &matches[lo..hi], lexicon);
        match w.classification {
            Classification::EventAOnly => counts.brukn += 1,
            Classification::EventBOnly => counts.crukn += 1,
            Classification::Joint => counts.joint += 1,
            Classification::Neither => counts.neither += 1,
            Classification::Excluded => counts.excluded += 1,
        }
    }
    ReportAnalysis {
        matches,
        windows,
        counts,
    }
}

/// A monthly index: raw ratios, normalized values and their provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexSeries {
    pub months: Vec<Month>,
    pub raw: Vec<f64>,
    pub normalized: Vec<f64>,
    pub counts: Vec<MonthlyCounts>,
    /// Exclusive count plus the allocated share of joint windows.
    pub weighted_totals: Vec<f64>,
}

/// Turns per-month counts into the event-A and event-B index series.
pub fn assemble_indices(counts: Vec<MonthlyCounts>) -> Result<(IndexSeries, IndexSeries), Error> {
    let months: Vec<Month> = counts.iter().map(|c| c.month).collect();
    if let Some(w) = months.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::DuplicateMonth(w[1]));
    }
    let (mut wa, mut wb, mut ra, mut rb) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for c in &counts {
        let (a, b) = weight_joint(c);
        ra.push(standardize(a, c.total_words).map_err(|_| Error::EmptyReport(c.month))?);
        rb.push(standardize(b, c.total_words).map_err(|_| Error::EmptyReport(c.month))?);
        wa.push(a);
        wb.push(b);
    }
    let series = |raw: Vec<f64>, weighted: Vec<f64>| -> Result<IndexSeries, Error> {
        Ok(IndexSeries {
            months: months.clone(),
            normalized: normalize_series(&raw)?,
            raw,
            counts: counts.clone(),
            weighted_totals: weighted,
        })
    };
    Ok((series(ra, wa)?, series(rb, wb)?))
}

/// Full pipeline over a month-sorted corpus.
pub fn build_indices(
    corpus: &[Report],
    lexicon: &Lexicon,
    radius: usize,
) -> Result<(IndexSeries, IndexSeries), Error> {
    if radius == 0 {
        return Err(Error::InvalidArgument(alloc::string::String::from(
            "radius must be at least 1",
        )));
    }
    let counts = corpus
        .iter()
        .map(|r| analyze_report(r, lexicon, radius).counts)
        .collect();
    assemble_indices(counts)
}
