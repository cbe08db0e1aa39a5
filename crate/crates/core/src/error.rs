use alloc::string::String;
use core::fmt;

use crate::Month;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the core pipeline and estimators.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two reports share the same month.
    DuplicateMonth(Month),
    /// A `YYYY-MM` string could not be parsed.
    InvalidMonth(String),
    /// A report has no tokens, so its length ratio is undefined.
    EmptyReport(Month),
    /// Ratio with a zero denominator.
    ZeroDenominator,
    /// A lexicon phrase tokenizes to nothing.
    EmptyPhrase(String),
    /// A lexicon category has no phrases.
    EmptyCategory(&'static str),
    /// The same phrase (after canonicalization) appears in two categories.
    CrossCategoryPhrase {
        phrase: String,
        first: &'static str,
        second: &'static str,
    },
    /// Normalization needs at least one positive value.
    DegenerateSeries,
    /// A log transform met a non-positive value.
    NonPositiveLog { series: String, month: Month },
    /// Panel shape or month-axis problem.
    InvalidPanel(String),
    /// Not enough observations for the requested lag order.
    InsufficientSample { observations: usize, required: usize },
    /// Regressor matrix is rank deficient.
    Singular,
    /// Cholesky pivot at or below tolerance.
    NotPositiveDefinite { pivot: usize },
    /// A forecast-error variance of zero makes shares undefined.
    DegenerateVariance { variable: usize },
    /// Correlation of a constant series or of too few points.
    UndefinedCorrelation(&'static str),
    /// Too many bootstrap replications failed to refit.
    BootstrapFailure { discarded: usize, reps: usize },
    /// Argument outside its documented domain.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateMonth(m) => write!(f, "duplicate month {m}"),
            Error::InvalidMonth(s) => write!(f, "invalid month '{s}', expected YYYY-MM"),
            Error::EmptyReport(m) => write!(f, "report {m} has no words"),
            Error::ZeroDenominator => f.write_str("total word count is zero"),
            Error::EmptyPhrase(p) => write!(f, "phrase '{p}' has no tokens"),
            Error::EmptyCategory(c) => write!(f, "lexicon category '{c}' is empty"),
            Error::CrossCategoryPhrase {
                phrase,
                first,
                second,
            } => write!(f, "phrase '{phrase}' appears in both '{first}' and '{second}'"),
            Error::DegenerateSeries => f.write_str("series has no positive value; normalization undefined"),
            Error::NonPositiveLog { series, month } => {
                write!(
                    f,
                    "series '{series}' has a non-positive value at {month}; cannot take log"
                )
            }
            Error::InvalidPanel(msg) => write!(f, "invalid panel: {msg}"),
            Error::InsufficientSample {
                observations,
                required,
            } => write!(
                f,
                "insufficient sample: {observations} observations, need more than {required}"
            ),
            Error::Singular => f.write_str("regressor matrix is singular"),
            Error::NotPositiveDefinite { pivot } => {
                write!(f, "matrix is not positive definite (pivot {pivot})")
            }
            Error::DegenerateVariance { variable } => {
                write!(f, "variable {variable} has zero forecast-error variance")
            }
            Error::UndefinedCorrelation(why) => write!(f, "correlation undefined: {why}"),
            Error::BootstrapFailure { discarded, reps } => write!(
                f,
                "{discarded} of {reps} bootstrap replications failed (limit 10%)"
            ),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
