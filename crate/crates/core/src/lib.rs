//! Event-uncertainty indices from monthly report text, and the VAR toolkit
//! used to measure their macroeconomic impact.
//!
//! The text side turns a corpus of monthly reports into two normalized
//! series: tokens are lowercased and stripped of stopwords, lexicon phrases
//! are matched as exact n-grams, every uncertainty hit opens a ±`radius`
//! context window, and each window is classified by which event lexicons
//! (A, B, both or neither) start inside it. Joint windows are split between
//! the two events in proportion to their exclusive counts, divided by the
//! report length, and finally rescaled so each series peaks at 100.
//!
//! The econometric side ([`econ`]) estimates a VAR by least squares,
//! identifies shocks recursively through the Cholesky factor of the residual
//! covariance, and produces impulse responses (with residual-bootstrap
//! percentile bands) and forecast-error variance decompositions.
//!
//! The crate is `no_std` and only needs `alloc`; file IO, parallelism and the
//! command-line tool live in the companion `brui` crate.

#![no_std]
#![forbid(unsafe_code)]
// dense matrix code indexes by (row, col) throughout
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod corpus;
pub mod econ;
mod error;
pub mod indexer;
pub mod lexicon;
mod month;
pub mod stopwords;

pub use corpus::{assemble_corpus, normalize_text, remove_stopwords, tokenize, Report, TokenView};
pub use error::{Error, Result};
pub use indexer::{
    analyze_report, assemble_indices, build_indices, classify_window, extract_windows, normalize_series,
    standardize, weight_joint, Classification, IndexSeries, MonthlyCounts, WindowRecord,
};
pub use lexicon::{canonicalize_phrase, keyword_frequency, match_ngrams, Category, Lexicon, Match};
pub use month::Month;
