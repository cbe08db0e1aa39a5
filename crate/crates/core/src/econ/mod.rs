//! VAR estimation, recursive identification, impulse responses with
//! bootstrap bands, variance decompositions and index correlations.

mod bootstrap;
mod cholesky;
mod correlation;
mod irf;
mod matrix;
mod panel;
mod var;

pub use bootstrap::{
    bootstrap_irf, percentile, pseudo_sample, replicate, summarize, BootstrapSpec, IrfResult,
};
pub use cholesky::{cholesky_factor, cholesky_semidefinite};
pub use correlation::{correlate_by_month, pearson_correlation, AlignedCorrelation};
pub use irf::{
    fevd, fevd_from_responses, impulse_response, impulse_response_with_factor, ma_coefficients, FevdTable,
    ImpulseResponses,
};
pub use matrix::{least_squares, Matrix};
pub use panel::{transform_series, MacroPanel, Transform};
pub use var::{fit_var, max_feasible_lag, select_lag, Criterion, LagSelection, VarModel};
