use std::path::Path;

use brui_core::{keyword_frequency, Category};
use serde::Serialize;

use crate::index_io::{index_rows, write_file, write_index, IndexRow};
use crate::{corpus, lexicon, parallel, Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct KeywordEntry {
    pub category: &'static str,
    pub phrase: String,
    pub phrases: Vec<String>,
    pub count: u64,
    pub zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CategoryTotal {
    pub category: &'static str,
    pub total: u64,
    pub zero_count_phrases: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexSummary {
    pub months: usize,
    pub first: String,
    pub last: String,
    pub radius: usize,
    pub lexicon: String,
    pub categories: Vec<CategoryTotal>,
    pub keywords: Vec<KeywordEntry>,
}

/// Builds both indices from `corpus_dir` and writes `index.csv`,
/// `index.json` and `index_summary.json` to `out`.
pub fn run_build_index(
    corpus_dir: &Path,
    lexicon_path: Option<&Path>,
    radius: usize,
    out: &Path,
) -> Result<(Vec<IndexRow>, IndexSummary)> {
    if !corpus_dir.is_dir() {
        return Err(Error::Missing(corpus_dir.to_path_buf()));
    }
    let lex = lexicon::load_lexicon(lexicon_path)?;
    let reports = corpus::load_corpus(corpus_dir)?;
    let (a, b) =
        parallel::build_indices(&reports, &lex, radius).map_err(|e| Error::data(corpus_dir.display(), e))?;
    let rows = index_rows(&a, &b);
    write_index(out, &rows)?;

    let freq = keyword_frequency(&reports, &lex);
    let keywords: Vec<KeywordEntry> = freq
        .iter()
        .map(|k| KeywordEntry {
            category: k.category.name(),
            phrase: k.phrase.clone(),
            phrases: k.phrases.clone(),
            count: k.count,
            zero: k.is_absent(),
        })
        .collect();
    let categories = [Category::Uncertainty, Category::EventA, Category::EventB]
        .into_iter()
        .map(|c| CategoryTotal {
            category: c.name(),
            total: freq.iter().filter(|k| k.category == c).map(|k| k.count).sum(),
            zero_count_phrases: freq
                .iter()
                .filter(|k| k.category == c && k.is_absent())
                .map(|k| k.phrase.clone())
                .collect(),
        })
        .collect();
    let summary = IndexSummary {
        months: rows.len(),
        first: rows[0].month.clone(),
        last: rows[rows.len() - 1].month.clone(),
        radius,
        lexicon: lexicon_path.map_or_else(|| "bundled".to_string(), |p| p.display().to_string()),
        categories,
        keywords,
    };
    let json = serde_json::to_string_pretty(&summary).expect("summary serializes");
    write_file(&out.join("index_summary.json"), &(json + "\n"))?;
    Ok((rows, summary))
}
