//! The `analyze` workflow: merge the index into the macro panel, fit the
//! VAR on the full sample and on each subperiod, and write responses,
//! variance decompositions and a report.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use brui_core::econ::{
    fevd_from_responses, fit_var, max_feasible_lag, select_lag, transform_series, BootstrapSpec, Criterion,
    FevdTable, IrfResult, MacroPanel, Transform,
};
use brui_core::Month;
use serde::Serialize;

use crate::config::{AnalysisConfig, CriterionName};
use crate::format::real;
use crate::index_io::{index_rows, read_month_column, write_file, write_index};
use crate::panel_io::read_panel;
use crate::{corpus, lexicon, parallel, Error, Result};

pub const FULL_SAMPLE: &str = "full";

#[derive(Debug, Clone, Serialize)]
pub struct Conventions {
    pub residual_covariance_divisor: &'static str,
    pub identification: &'static str,
    pub percentile: &'static str,
    pub bootstrap: &'static str,
    pub rng: &'static str,
    pub lag_selection_sample: &'static str,
}

const CONVENTIONS: Conventions = Conventions {
    residual_covariance_divisor: "T - p",
    identification: "lower-triangular Cholesky factor in variable_order",
    percentile: "type 7 (linear interpolation at q*(n-1))",
    bootstrap: "residual recursive-design, centered residuals, first p observations fixed",
    rng: "ChaCha8 seeded with the run seed, stream = replication index",
    lag_selection_sample: "last T - p_max observations for every candidate",
};

#[derive(Debug, Clone, Serialize)]
pub struct SampleReport {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Months actually used; the requested range when the sample never
    /// got that far.
    pub start: String,
    pub end: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lag_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lag_source: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_max_effective: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion_values: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimation_observations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bootstrap_reps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discarded_replications: Option<usize>,
    pub files: Vec<String>,
}

impl SampleReport {
    fn new(name: &str, start: Month, end: Month) -> Self {
        SampleReport {
            name: name.to_string(),
            status: "failed",
            error: None,
            start: start.to_string(),
            end: end.to_string(),
            observations: None,
            lag_order: None,
            lag_source: None,
            p_max_effective: None,
            criterion_values: None,
            estimation_observations: None,
            spectral_radius: None,
            stable: None,
            warning: None,
            bootstrap_reps: None,
            discarded_replications: None,
            files: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub seed: u64,
    pub variables: Vec<String>,
    pub panel_start: String,
    pub panel_end: String,
    pub conventions: Conventions,
    pub samples: Vec<SampleReport>,
    pub config: AnalysisConfig,
}

impl AnalysisReport {
    pub fn sample(&self, name: &str) -> Option<&SampleReport> {
        self.samples.iter().find(|s| s.name == name)
    }
}

/// The index series as a month-keyed column, built from the corpus unless
/// an index file is configured. A freshly built index is also written to
/// `out`.
fn load_index(cfg: &AnalysisConfig, out: &Path) -> Result<Vec<(Month, f64)>> {
    let column = cfg.index_series.column();
    if let Some(path) = &cfg.index_path {
        if !path.exists() {
            return Err(Error::Missing(path.clone()));
        }
        return Ok(read_month_column(path, Some(column))?.1);
    }
    let dir = cfg
        .corpus_dir
        .as_deref()
        .ok_or_else(|| Error::Config("either index_path or corpus_dir is required".into()))?;
    let reports = corpus::load_corpus(dir)?;
    let lex = lexicon::load_lexicon(cfg.lexicon_path.as_deref())?;
    let (a, b) =
        parallel::build_indices(&reports, &lex, cfg.radius).map_err(|e| Error::data(dir.display(), e))?;
    let rows = index_rows(&a, &b);
    write_index(out, &rows)?;
    let chosen = match cfg.index_series {
        crate::config::IndexChoice::Brui => &a,
        crate::config::IndexChoice::Crui => &b,
    };
    Ok(chosen
        .months
        .iter()
        .copied()
        .zip(chosen.normalized.iter().copied())
        .collect())
}

/// Level panel over the months covered by both the index and the panel
/// file, variables in `variable_order`.
pub fn merge_panel(cfg: &AnalysisConfig, index: &[(Month, f64)]) -> Result<MacroPanel> {
    let path = cfg
        .panel_path
        .as_deref()
        .ok_or_else(|| Error::Config("panel_path is required for analyze".into()))?;
    if !path.exists() {
        return Err(Error::Missing(path.to_path_buf()));
    }
    let table = read_panel(path)?;
    let (Some(&(i0, _)), Some(&(i1, _))) = (index.first(), index.last()) else {
        return Err(Error::Analysis("index series is empty".into()));
    };
    let (Some(&p0), Some(&p1)) = (table.months.first(), table.months.last()) else {
        return Err(Error::parse(path, "panel has no rows"));
    };
    let (start, end) = (i0.max(p0), i1.min(p1));
    if start > end {
        return Err(Error::Analysis(format!(
            "index ({i0}..{i1}) and panel ({p0}..{p1}) share no months"
        )));
    }
    let months: Vec<Month> = Month::range(start, end).collect();
    let mut columns = Vec::with_capacity(cfg.variable_order.len());
    let mut transforms = Vec::with_capacity(cfg.variable_order.len());
    for name in &cfg.variable_order {
        let mut col = Vec::with_capacity(months.len());
        if *name == cfg.index_variable {
            for &m in &months {
                let v = index
                    .binary_search_by_key(&m, |p| p.0)
                    .map(|i| index[i].1)
                    .map_err(|_| Error::Analysis(format!("{name} has no value for {m}")))?;
                col.push(v);
            }
        } else {
            let values = table
                .column(name)
                .ok_or_else(|| Error::parse(path, format!("no column for variable '{name}'")))?;
            for &m in &months {
                let v = table
                    .months
                    .binary_search(&m)
                    .ok()
                    .and_then(|i| values[i])
                    .ok_or_else(|| Error::parse(path, format!("{name} has no value for {m}")))?;
                col.push(v);
            }
        }
        columns.push(col);
        transforms.push(Transform::from(cfg.transform_for(name)));
    }
    Ok(MacroPanel::new(
        months,
        cfg.variable_order.clone(),
        columns,
        transforms,
    )?)
}

fn irf_csv(names: &[String], irf: &IrfResult) -> String {
    let mut s = String::from("horizon,shock,response,point,lower,upper\n");
    for h in 0..=irf.point.horizon() {
        for (j, shock) in names.iter().enumerate() {
            for (i, response) in names.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{h},{shock},{response},{},{},{}",
                    real(irf.point.get(h, j, i)),
                    real(irf.lower.get(h, j, i)),
                    real(irf.upper.get(h, j, i))
                );
            }
        }
    }
    s
}

fn fevd_csv(names: &[String], table: &FevdTable, response: usize) -> String {
    let mut s = format!("period,{}\n", names.join(","));
    for h in 1..=table.horizon() {
        let row: Vec<String> = table.row(h, response).iter().map(|&v| real(v)).collect();
        let _ = writeln!(s, "{h},{}", row.join(","));
    }
    s
}

fn run_sample(
    cfg: &AnalysisConfig,
    seed: u64,
    panel: &MacroPanel,
    out: &Path,
    rep: &mut SampleReport,
) -> brui_core::Result<()> {
    if let (Some(first), Some(last)) = (panel.months().first(), panel.months().last()) {
        rep.start = first.to_string();
        rep.end = last.to_string();
    }
    let data = panel.data();
    let (t, k) = (data.rows(), data.cols());
    rep.observations = Some(t);
    let p = match cfg.lag.fixed {
        Some(p) => {
            rep.lag_source = Some("fixed");
            p
        }
        None => {
            let p_max = cfg.lag.p_max.min(max_feasible_lag(t, k));
            rep.p_max_effective = Some(p_max);
            if p_max == 0 {
                return Err(brui_core::Error::InsufficientSample {
                    observations: t,
                    required: 2 * k + 1,
                });
            }
            let sel = select_lag(data, p_max, Criterion::from(cfg.lag.criterion))?;
            rep.lag_source = Some(match cfg.lag.criterion {
                CriterionName::Aic => "aic",
                CriterionName::Bic => "bic",
                CriterionName::Hq => "hq",
            });
            rep.criterion_values = Some(sel.values);
            sel.lag_order
        }
    };
    rep.lag_order = Some(p);
    let model = fit_var(data, p)?;
    rep.estimation_observations = Some(model.n_obs);
    let radius = model.spectral_radius();
    rep.spectral_radius = Some(radius);
    rep.stable = Some(radius < 1.0);
    if radius >= 1.0 {
        rep.warning = Some(format!(
            "estimated VAR is not stable (spectral radius {}); responses need not decay",
            real(radius)
        ));
    }
    let spec = BootstrapSpec {
        horizon: cfg.horizons,
        reps: cfg.bootstrap.reps,
        level: cfg.bootstrap.level,
        seed,
    };
    let irf = parallel::bootstrap_irf(&model, data, &spec)?;
    rep.bootstrap_reps = Some(irf.reps);
    rep.discarded_replications = Some(irf.discarded);
    let table = fevd_from_responses(&irf.point, cfg.horizons)?;

    let names = panel.names();
    let irf_name = format!("irf_{}.csv", rep.name);
    write_file(&out.join(&irf_name), &irf_csv(names, &irf)).map_err(to_core)?;
    rep.files.push(irf_name);
    for (i, response) in names.iter().enumerate() {
        let rel = format!("fevd/{}/{response}.csv", rep.name);
        write_file(&out.join(&rel), &fevd_csv(names, &table, i)).map_err(to_core)?;
        rep.files.push(rel);
    }
    Ok(())
}

// Sample-level failures are reported as text, so file errors are folded in.
fn to_core(e: Error) -> brui_core::Error {
    brui_core::Error::InvalidArgument(e.to_string())
}

/// Runs every sample, writes `report.json` and `effective_config.toml`, and
/// returns the report. A failed subperiod is recorded and the rest go on;
/// a failed full sample makes the whole command fail after the report is
/// written.
pub fn run_analysis(
    cfg: &AnalysisConfig,
    seed: u64,
    out: &Path,
    log: &dyn Fn(&str),
) -> Result<AnalysisReport> {
    let mut effective = cfg.clone();
    effective.bootstrap.seed = Some(seed);
    for p in [
        &mut effective.corpus_dir,
        &mut effective.lexicon_path,
        &mut effective.panel_path,
        &mut effective.index_path,
    ]
    .into_iter()
    .flatten()
    {
        *p = absolute(p);
    }

    let index = load_index(cfg, out)?;
    let levels = merge_panel(cfg, &index)?;
    let (raw_start, raw_end) = (levels.months()[0], *levels.months().last().unwrap());
    let transformed = transform_series(&levels).map_err(|e| Error::data("panel", e))?;
    if transformed.is_empty() {
        return Err(Error::Analysis("no observations left after differencing".into()));
    }

    let mut samples = Vec::new();
    let full_range = (transformed.months()[0], *transformed.months().last().unwrap());
    let mut plan = vec![(FULL_SAMPLE.to_string(), full_range, None)];
    for s in &cfg.subperiods {
        let (a, b) = s.bounds()?;
        let outside = (a < raw_start || b > raw_end)
            .then(|| format!("subperiod {a}..{b} lies outside the panel range {raw_start}..{raw_end}"));
        plan.push((s.name.clone(), (a, b), outside));
    }
    for (name, (a, b), outside) in plan {
        log(&format!("sample {name}: {a}..{b}"));
        let mut rep = SampleReport::new(&name, a, b);
        let result = match outside {
            Some(msg) => Err(brui_core::Error::InvalidArgument(msg)),
            None => run_sample(&effective, seed, &transformed.restrict(a, b), out, &mut rep),
        };
        match result {
            Ok(()) => rep.status = "ok",
            Err(e) => {
                log(&format!("sample {name} failed: {e}"));
                rep.error = Some(e.to_string());
            }
        }
        samples.push(rep);
    }

    let report = AnalysisReport {
        seed,
        variables: levels.names().to_vec(),
        panel_start: raw_start.to_string(),
        panel_end: raw_end.to_string(),
        conventions: CONVENTIONS,
        samples,
        config: effective.clone(),
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    write_file(&out.join("report.json"), &(json + "\n"))?;
    write_file(&out.join("effective_config.toml"), &effective.to_toml())?;
    if let Some(err) = &report.samples[0].error {
        return Err(Error::Analysis(format!("full sample failed: {err}")));
    }
    Ok(report)
}

fn absolute(p: &Path) -> PathBuf {
    std::path::absolute(p).unwrap_or_else(|_| p.to_path_buf())
}
