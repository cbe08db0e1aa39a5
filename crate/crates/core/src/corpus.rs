//! Report text: case folding, tokenization and stopword-stripped views.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{stopwords, Error, Month};

/// Lowercases every cased character and leaves everything else alone.
pub fn normalize_text(raw: &str) -> String {
    raw.to_lowercase()
}

fn is_joiner(c: char) -> bool {
    matches!(c, '-' | '\'' | '\u{2019}')
}

/// Splits lowercased text into word tokens.
///
/// A token is a maximal run of letters and digits, where a hyphen or
/// apostrophe is kept only when it sits between two alphanumeric characters
/// (`brexit-related`, `covid-19`, `uk's`). Everything else separates tokens
/// and is dropped. The typographic apostrophe `’` is emitted as `'`.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_alphanumeric() {
            current.push(c);
        } else if is_joiner(c)
            && current.chars().last().is_some_and(char::is_alphanumeric)
            && chars.peek().is_some_and(|n| n.is_alphanumeric())
        {
            current.push(if c == '-' { '-' } else { '\'' });
        } else if !current.is_empty() {
            tokens.push(core::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

/// A subsequence of a report's tokens together with where each one came from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenView {
    pub tokens: Vec<String>,
    /// `origin_map[i]` is the index of `tokens[i]` in the parent token list.
    pub origin_map: Vec<usize>,
}

impl TokenView {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// Drops bundled stopwords, recording the original position of each survivor.
pub fn remove_stopwords<S: AsRef<str>>(tokens: &[S]) -> TokenView {
    let mut view = TokenView::default();
    for (i, t) in tokens.iter().enumerate() {
        let t = t.as_ref();
        if !stopwords::is_stopword(t) {
            view.tokens.push(String::from(t));
            view.origin_map.push(i);
        }
    }
    view
}

/// One month's document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub month: Month,
    pub raw_text: String,
    /// Lowercased tokens, stopwords included.
    pub tokens: Vec<String>,
    /// Length of `tokens`; the denominator of the standardized index.
    pub total_words: usize,
}

impl Report {
    /// Normalizes and tokenizes `raw_text`. A report without any word is
    /// rejected since its length ratio would be undefined.
    pub fn new(month: Month, raw_text: String) -> Result<Self, Error> {
        let tokens = tokenize(&normalize_text(&raw_text));
        if tokens.is_empty() {
            return Err(Error::EmptyReport(month));
        }
        Ok(Report {
            month,
            total_words: tokens.len(),
            raw_text,
            tokens,
        })
    }

    pub fn content_view(&self) -> TokenView {
        remove_stopwords(&self.tokens)
    }
}

/// Sorts reports by month, rejecting duplicates.
pub fn assemble_corpus(mut reports: Vec<Report>) -> Result<Vec<Report>, Error> {
    reports.sort_by_key(|r| r.month);
    if let Some(w) = reports.windows(2).find(|w| w[0].month == w[1].month) {
        return Err(Error::DuplicateMonth(w[0].month));
    }
    Ok(reports)
}
