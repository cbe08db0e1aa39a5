//! Analysis configuration.
//!
//! A TOML (or JSON) file; every field has a default, and the effective
//! configuration with defaults filled in is echoed into each run's report.
//! Relative paths are resolved against the config file's directory.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use brui_core::econ::{Criterion, Transform};
use brui_core::Month;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const DEFAULT_VARIABLES: [&str; 10] = [
    "BRUI", "GDP", "CPI", "PPI", "X", "M", "GBP_EUR", "GBP_USD", "EMP", "UEMP",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformSpec {
    pub log: bool,
    pub diff: usize,
}

impl From<TransformSpec> for Transform {
    fn from(t: TransformSpec) -> Transform {
        Transform {
            log: t.log,
            diff: t.diff,
        }
    }
}

/// Variables without an entry are first-differenced in levels.
pub const FALLBACK_TRANSFORM: TransformSpec = TransformSpec { log: false, diff: 1 };

fn default_transforms() -> BTreeMap<String, TransformSpec> {
    DEFAULT_VARIABLES
        .iter()
        .map(|&v| {
            let log = !matches!(v, "GBP_EUR" | "GBP_USD" | "UEMP");
            (v.to_string(), TransformSpec { log, diff: 1 })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CriterionName {
    #[default]
    Aic,
    Bic,
    Hq,
}

impl From<CriterionName> for Criterion {
    fn from(c: CriterionName) -> Criterion {
        match c {
            CriterionName::Aic => Criterion::Aic,
            CriterionName::Bic => Criterion::Bic,
            CriterionName::Hq => Criterion::Hq,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LagConfig {
    /// Fixed lag order; overrides selection when set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed: Option<usize>,
    pub criterion: CriterionName,
    pub p_max: usize,
}

impl Default for LagConfig {
    fn default() -> Self {
        LagConfig {
            fixed: None,
            criterion: CriterionName::Aic,
            p_max: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BootstrapConfig {
    pub reps: usize,
    pub level: f64,
    /// Drawn at random (and recorded) when omitted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Default for BootstrapConfig {
    fn default() -> Self {
        BootstrapConfig {
            reps: 999,
            level: 90.0,
            seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Subperiod {
    pub name: String,
    pub start: String,
    pub end: String,
}

impl Subperiod {
    pub fn bounds(&self) -> Result<(Month, Month)> {
        let parse = |s: &str| {
            s.parse::<Month>()
                .map_err(|e| Error::Config(format!("subperiod '{}': {e}", self.name)))
        };
        Ok((parse(&self.start)?, parse(&self.end)?))
    }
}

fn default_subperiods() -> Vec<Subperiod> {
    [
        ("pre", "2012-05", "2016-06"),
        ("transition", "2016-07", "2020-01"),
        ("post", "2020-02", "2025-01"),
    ]
    .iter()
    .map(|&(name, start, end)| Subperiod {
        name: name.into(),
        start: start.into(),
        end: end.into(),
    })
    .collect()
}

/// Which built index joins the macro panel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum IndexChoice {
    #[default]
    Brui,
    Crui,
}

impl IndexChoice {
    pub fn column(self) -> &'static str {
        match self {
            IndexChoice::Brui => "brui",
            IndexChoice::Crui => "crui",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnalysisConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus_dir: Option<PathBuf>,
    /// Bundled lexicon when omitted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lexicon_path: Option<PathBuf>,
    pub radius: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub panel_path: Option<PathBuf>,
    /// A previously written index CSV; built from the corpus when omitted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_path: Option<PathBuf>,
    pub index_series: IndexChoice,
    /// Name the index takes inside the panel.
    pub index_variable: String,
    /// Estimation and Cholesky order.
    pub variable_order: Vec<String>,
    pub transforms: BTreeMap<String, TransformSpec>,
    pub lag: LagConfig,
    /// IRF horizons 0..=H and FEVD periods 1..=H.
    pub horizons: usize,
    pub bootstrap: BootstrapConfig,
    pub subperiods: Vec<Subperiod>,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            corpus_dir: None,
            lexicon_path: None,
            radius: brui_core::indexer::DEFAULT_RADIUS,
            panel_path: None,
            index_path: None,
            index_series: IndexChoice::Brui,
            index_variable: "BRUI".into(),
            variable_order: DEFAULT_VARIABLES.iter().map(|s| s.to_string()).collect(),
            transforms: default_transforms(),
            lag: LagConfig::default(),
            horizons: 10,
            bootstrap: BootstrapConfig::default(),
            subperiods: default_subperiods(),
        }
    }
}

impl AnalysisConfig {
    pub fn from_toml(text: &str) -> std::result::Result<Self, String> {
        toml::from_str(text).map_err(|e| e.message().to_string())
    }

    /// Loads TOML, or JSON when the extension is `.json` (an analysis
    /// `report.json` works too), then resolves
    /// relative paths and validates.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg: AnalysisConfig = if path.extension().is_some_and(|e| e == "json") {
            let mut value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::parse(path, e))?;
            // an analysis report carries its effective config under "config"
            if value.get("samples").is_some() {
                value = value["config"].take();
            }
            serde_json::from_value(value).map_err(|e| Error::parse(path, e))?
        } else {
            Self::from_toml(&text).map_err(|e| Error::parse(path, e))?
        };
        let base = path.parent().unwrap_or(Path::new("."));
        for p in [
            &mut cfg.corpus_dir,
            &mut cfg.lexicon_path,
            &mut cfg.panel_path,
            &mut cfg.index_path,
        ]
        .into_iter()
        .flatten()
        {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if self.radius == 0 {
            return bad("radius must be at least 1".into());
        }
        if self.bootstrap.reps == 0 {
            return bad("bootstrap.reps must be at least 1".into());
        }
        if !(self.bootstrap.level > 0.0 && self.bootstrap.level < 100.0) {
            return bad("bootstrap.level must lie in (0, 100)".into());
        }
        if self.horizons == 0 {
            return bad("horizons must be at least 1".into());
        }
        if self.lag.p_max == 0 || self.lag.fixed == Some(0) {
            return bad("lag orders must be at least 1".into());
        }
        if self.variable_order.is_empty() {
            return bad("variable_order is empty".into());
        }
        for (i, v) in self.variable_order.iter().enumerate() {
            if self.variable_order[..i].contains(v) {
                return bad(format!("variable '{v}' listed twice"));
            }
        }
        for (i, s) in self.subperiods.iter().enumerate() {
            let (a, b) = s.bounds()?;
            if a > b {
                return bad(format!("subperiod '{}' ends before it starts", s.name));
            }
            let safe = !s.name.is_empty()
                && s.name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
            if !safe || s.name == "full" {
                return bad(format!(
                    "subperiod name '{}' must be [A-Za-z0-9_-]+ and not 'full'",
                    s.name
                ));
            }
            if self.subperiods[..i].iter().any(|o| o.name == s.name) {
                return bad(format!("subperiod '{}' listed twice", s.name));
            }
        }
        Ok(())
    }

    pub fn transform_for(&self, variable: &str) -> TransformSpec {
        self.transforms
            .get(variable)
            .copied()
            .unwrap_or(FALLBACK_TRANSFORM)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }
}
