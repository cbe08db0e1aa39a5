//! Least-squares VAR(p) estimation with an intercept.

use alloc::vec::Vec;

use super::{cholesky_factor, least_squares, Matrix};
use crate::Error;

/// A fitted VAR(p): `y_t = c + A_1 y_{t-1} + … + A_p y_{t-p} + u_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct VarModel {
    pub lag_order: usize,
    pub intercept: Vec<f64>,
    /// `coefficients[i]` is `A_{i+1}`; entry `(r, c)` is the effect of
    /// variable `c` at lag `i+1` on variable `r`.
    pub coefficients: Vec<Matrix>,
    /// Residual cross-product divided by the number of residual rows
    /// (`T − p`), without degrees-of-freedom correction.
    pub sigma: Matrix,
    /// `(T − p) × k` residuals, row `t` belonging to observation `t + p`.
    pub residuals: Matrix,
    /// Observations used in estimation (`T − p`).
    pub n_obs: usize,
}

/// Lagged design matrix `[1, y_{t-1}ᵀ, …, y_{t-p}ᵀ]` and targets `y_t` for
/// `t = p..T`.
pub(crate) fn design(data: &Matrix, p: usize) -> (Matrix, Matrix) {
    let (t, k) = (data.rows(), data.cols());
    let n = t - p;
    let mut x = Matrix::zeros(n, 1 + k * p);
    let mut y = Matrix::zeros(n, k);
    for r in 0..n {
        let obs = r + p;
        x[(r, 0)] = 1.0;
        for lag in 1..=p {
            let src = data.row(obs - lag);
            x.row_mut(r)[1 + (lag - 1) * k..1 + lag * k].copy_from_slice(src);
        }
        y.row_mut(r).copy_from_slice(data.row(obs));
    }
    (x, y)
}

/// Fits a VAR(p) equation by equation on `data` (rows are observations).
///
/// Requires more usable observations than regressors per equation:
/// `T − p > k·p + 1`.
pub fn fit_var(data: &Matrix, p: usize) -> Result<VarModel, Error> {
    let (t, k) = (data.rows(), data.cols());
    if p == 0 {
        return Err(Error::InvalidArgument("lag order must be at least 1".into()));
    }
    if t <= (k + 1) * p + 1 {
        return Err(Error::InsufficientSample {
            observations: t,
            required: (k + 1) * p + 1,
        });
    }
    let (x, y) = design(data, p);
    let b = least_squares(&x, &y)?;
    let residuals = y.sub(&x.matmul(&b));
    let n = t - p;
    let mut sigma = residuals.gram();
    sigma.scale(1.0 / n as f64);
    let intercept = b.row(0).to_vec();
    let coefficients = (0..p)
        .map(|lag| {
            let mut a = Matrix::zeros(k, k);
            for r in 0..k {
                for c in 0..k {
                    a[(r, c)] = b[(1 + lag * k + c, r)];
                }
            }
            a
        })
        .collect();
    Ok(VarModel {
        lag_order: p,
        intercept,
        coefficients,
        sigma,
        residuals,
        n_obs: n,
    })
}

impl VarModel {
    pub fn k(&self) -> usize {
        self.intercept.len()
    }

    /// The `kp × kp` companion matrix.
    pub fn companion(&self) -> Matrix {
        let (k, p) = (self.k(), self.lag_order);
        let mut c = Matrix::zeros(k * p, k * p);
        for (lag, a) in self.coefficients.iter().enumerate() {
            for r in 0..k {
                for col in 0..k {
                    c[(r, lag * k + col)] = a[(r, col)];
                }
            }
        }
        for i in k..k * p {
            c[(i, i - k)] = 1.0;
        }
        c
    }

    /// Spectral radius of the companion matrix, estimated from
    /// `‖C^(2^j)‖^(1/2^j)` with rescaling after each squaring.
    pub fn spectral_radius(&self) -> f64 {
        let mut m = self.companion();
        let mut log_scale = 0.0;
        let mut power = 1.0;
        for _ in 0..24 {
            m = m.matmul(&m);
            power *= 2.0;
            log_scale *= 2.0;
            let s = m.max_abs();
            if s == 0.0 {
                return 0.0;
            }
            m.scale(1.0 / s);
            log_scale += libm::log(s);
        }
        libm::exp((log_scale + libm::log(m.norm())) / power)
    }

    /// Stability in the usual sense: all companion eigenvalues inside the
    /// unit circle (checked with a small margin on the estimate).
    pub fn is_stable(&self) -> bool {
        self.spectral_radius() < 1.0 - 1e-9
    }

    /// `c + Σ A_i y_{t-i}` given the last `p` observations, most recent last.
    pub fn conditional_mean(&self, history: &[&[f64]]) -> Vec<f64> {
        let k = self.k();
        let p = self.lag_order;
        let mut out = self.intercept.clone();
        for (lag, a) in self.coefficients.iter().enumerate() {
            let y = history[history.len() - 1 - lag];
            for r in 0..k {
                out[r] += (0..k).map(|c| a[(r, c)] * y[c]).sum::<f64>();
            }
        }
        debug_assert!(history.len() >= p);
        out
    }
}

/// Information criterion for lag selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Criterion {
    #[default]
    Aic,
    Bic,
    Hq,
}

impl Criterion {
    fn penalty(self, n: f64) -> f64 {
        match self {
            Criterion::Aic => 2.0 / n,
            Criterion::Bic => libm::log(n) / n,
            Criterion::Hq => 2.0 * libm::log(libm::log(n)) / n,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LagSelection {
    pub lag_order: usize,
    /// Criterion value for p = 1..=p_max.
    pub values: Vec<f64>,
}

fn log_det(sigma: &Matrix) -> Result<f64, Error> {
    let l = cholesky_factor(sigma).map_err(|_| Error::Singular)?;
    Ok((0..l.rows()).map(|i| 2.0 * libm::log(l[(i, i)])).sum())
}

/// Picks p in `1..=p_max` minimizing `ln|Σ_p| + penalty·p·k²`, every
/// candidate fitted on the same last `T − p_max` observations. Ties go to the
/// smaller p.
pub fn select_lag(data: &Matrix, p_max: usize, criterion: Criterion) -> Result<LagSelection, Error> {
    let (t, k) = (data.rows(), data.cols());
    if p_max == 0 {
        return Err(Error::InvalidArgument("p_max must be at least 1".into()));
    }
    if t <= (k + 1) * p_max + 1 {
        return Err(Error::InsufficientSample {
            observations: t,
            required: (k + 1) * p_max + 1,
        });
    }
    let n = (t - p_max) as f64;
    let mut values = Vec::with_capacity(p_max);
    let mut best = (f64::INFINITY, 1);
    for p in 1..=p_max {
        let start = p_max - p;
        let sub = Matrix::from_vec(t - start, k, data.as_slice()[start * k..].to_vec());
        let model = fit_var(&sub, p)?;
        let value = log_det(&model.sigma)? + criterion.penalty(n) * (p * k * k) as f64;
        if value < best.0 {
            best = (value, p);
        }
        values.push(value);
    }
    Ok(LagSelection {
        lag_order: best.1,
        values,
    })
}

/// Largest p leaving at least `k` residual degrees of freedom per equation
/// on `t` observations of `k` variables, so the residual covariance can be
/// nonsingular; 0 if none.
pub fn max_feasible_lag(t: usize, k: usize) -> usize {
    if k == 0 || t < k + 1 {
        0
    } else {
        (t - 1 - k) / (k + 1)
    }
}
