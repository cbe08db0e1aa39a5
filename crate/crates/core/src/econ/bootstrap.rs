//! Residual-based recursive-design bootstrap for impulse-response bands.
//!
//! Each replication resamples whole rows of centered residuals with
//! replacement, rebuilds a pseudo-sample from the fitted model starting at
//! the original first `p` observations, refits the VAR (re-estimating the
//! covariance and its Cholesky factor) and recomputes the responses.
//!
//! Replication `r` draws from a ChaCha8 generator seeded with the run seed
//! and switched to stream `r`, so any execution order gives the same draws.

use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{fit_var, impulse_response, ImpulseResponses, Matrix, VarModel};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BootstrapSpec {
    pub horizon: usize,
    pub reps: usize,
    /// Confidence level in percent, e.g. 90.
    pub level: f64,
    pub seed: u64,
}

impl BootstrapSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.reps == 0 {
            return Err(Error::InvalidArgument("bootstrap reps must be at least 1".into()));
        }
        if !(self.level > 0.0 && self.level < 100.0) {
            return Err(Error::InvalidArgument(
                "confidence level must lie in (0, 100)".into(),
            ));
        }
        Ok(())
    }

    /// Lower and upper quantile probabilities.
    pub fn quantiles(&self) -> (f64, f64) {
        ((100.0 - self.level) / 200.0, (100.0 + self.level) / 200.0)
    }
}

/// Point responses with percentile bands.
#[derive(Debug, Clone, PartialEq)]
pub struct IrfResult {
    pub point: ImpulseResponses,
    pub lower: ImpulseResponses,
    pub upper: ImpulseResponses,
    pub reps: usize,
    /// Replications whose refit failed.
    pub discarded: usize,
    pub level: f64,
    pub seed: u64,
}

/// Empirical quantile of sorted data, interpolating linearly between order
/// statistics at position `q·(n−1)`.
pub fn percentile(sorted: &[f64], q: f64) -> f64 {
    assert!(!sorted.is_empty());
    let pos = q * (sorted.len() - 1) as f64;
    let lo = libm::floor(pos) as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    let frac = pos - lo as f64;
    if frac == 0.0 {
        sorted[lo]
    } else {
        sorted[lo] + frac * (sorted[hi] - sorted[lo])
    }
}

fn centered_residuals(model: &VarModel) -> Matrix {
    let mut u = model.residuals.clone();
    let n = u.rows();
    for j in 0..u.cols() {
        let mean = u.column(j).iter().sum::<f64>() / n as f64;
        for i in 0..n {
            u[(i, j)] -= mean;
        }
    }
    u
}

fn check_inputs(model: &VarModel, data: &Matrix) -> Result<(), Error> {
    if data.cols() != model.k() || data.rows() != model.n_obs + model.lag_order {
        return Err(Error::InvalidArgument(
            "data does not match the fitted model".into(),
        ));
    }
    Ok(())
}

/// Builds one pseudo-sample for replication `rep`.
pub fn pseudo_sample(model: &VarModel, data: &Matrix, seed: u64, rep: u64) -> Matrix {
    let residuals = centered_residuals(model);
    pseudo_sample_from(model, data, &residuals, seed, rep)
}

fn pseudo_sample_from(model: &VarModel, data: &Matrix, residuals: &Matrix, seed: u64, rep: u64) -> Matrix {
    let (t, k, p) = (data.rows(), data.cols(), model.lag_order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(rep);
    let mut out = Matrix::zeros(t, k);
    for i in 0..p {
        out.row_mut(i).copy_from_slice(data.row(i));
    }
    let n = residuals.rows();
    for i in p..t {
        let draw = rng.random_range(0..n);
        let history: Vec<&[f64]> = (i - p..i).map(|r| out.row(r)).collect();
        let mut y = model.conditional_mean(&history);
        for (v, u) in y.iter_mut().zip(residuals.row(draw)) {
            *v += u;
        }
        out.row_mut(i).copy_from_slice(&y);
    }
    out
}

/// Responses from bootstrap replication `rep`.
pub fn replicate(
    model: &VarModel,
    data: &Matrix,
    spec: &BootstrapSpec,
    rep: u64,
) -> Result<ImpulseResponses, Error> {
    check_inputs(model, data)?;
    let sample = pseudo_sample(model, data, spec.seed, rep);
    let refit = fit_var(&sample, model.lag_order)?;
    impulse_response(&refit, spec.horizon)
}

/// Combines replication results (in replication order) into bands.
///
/// Fails if more than 10% of replications were discarded.
pub fn summarize(
    point: ImpulseResponses,
    draws: &[Option<ImpulseResponses>],
    spec: &BootstrapSpec,
) -> Result<IrfResult, Error> {
    let reps = draws.len();
    let kept: Vec<&ImpulseResponses> = draws.iter().flatten().collect();
    let discarded = reps - kept.len();
    if discarded * 10 > reps || kept.is_empty() {
        return Err(Error::BootstrapFailure { discarded, reps });
    }
    let (ql, qu) = spec.quantiles();
    let cells = point.as_slice().len();
    let mut lower = Vec::with_capacity(cells);
    let mut upper = Vec::with_capacity(cells);
    let mut column = Vec::with_capacity(kept.len());
    for c in 0..cells {
        column.clear();
        column.extend(kept.iter().map(|d| d.as_slice()[c]));
        column.sort_by(f64::total_cmp);
        lower.push(percentile(&column, ql));
        upper.push(percentile(&column, qu));
    }
    let (k, h) = (point.k(), point.horizon());
    Ok(IrfResult {
        lower: ImpulseResponses::from_values(k, h, lower),
        upper: ImpulseResponses::from_values(k, h, upper),
        point,
        reps,
        discarded,
        level: spec.level,
        seed: spec.seed,
    })
}

/// Serial bootstrap over replications `0..reps`.
pub fn bootstrap_irf(model: &VarModel, data: &Matrix, spec: &BootstrapSpec) -> Result<IrfResult, Error> {
    spec.validate()?;
    check_inputs(model, data)?;
    let point = impulse_response(model, spec.horizon)?;
    let residuals = centered_residuals(model);
    let draws: Vec<Option<ImpulseResponses>> = (0..spec.reps as u64)
        .map(|rep| {
            let sample = pseudo_sample_from(model, data, &residuals, spec.seed, rep);
            fit_var(&sample, model.lag_order)
                .and_then(|m| impulse_response(&m, spec.horizon))
                .ok()
        })
        .collect();
    summarize(point, &draws, spec)
}
