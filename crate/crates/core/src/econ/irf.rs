//! Orthogonalized impulse responses and variance decompositions.

use alloc::vec;
use alloc::vec::Vec;

use super::{cholesky_semidefinite, Matrix, VarModel};
use crate::Error;

/// MA(∞) coefficients `Ψ_0 = I`, `Ψ_h = Σ_{i=1..min(h,p)} A_i Ψ_{h−i}`.
pub fn ma_coefficients(model: &VarModel, horizon: usize) -> Vec<Matrix> {
    let k = model.k();
    let mut psi = vec![Matrix::identity(k)];
    for h in 1..=horizon {
        let mut acc = Matrix::zeros(k, k);
        for i in 1..=h.min(model.lag_order) {
            let term = model.coefficients[i - 1].matmul(&psi[h - i]);
            for r in 0..k {
                for c in 0..k {
                    acc[(r, c)] += term[(r, c)];
                }
            }
        }
        psi.push(acc);
    }
    psi
}

/// Responses indexed by (horizon, shock, response).
#[derive(Debug, Clone, PartialEq)]
pub struct ImpulseResponses {
    k: usize,
    horizon: usize,
    values: Vec<f64>,
}

impl ImpulseResponses {
    fn zeros(k: usize, horizon: usize) -> Self {
        ImpulseResponses {
            k,
            horizon,
            values: vec![0.0; (horizon + 1) * k * k],
        }
    }

    fn offset(&self, h: usize, shock: usize, response: usize) -> usize {
        (h * self.k + shock) * self.k + response
    }

    pub fn get(&self, h: usize, shock: usize, response: usize) -> f64 {
        self.values[self.offset(h, shock, response)]
    }

    fn set(&mut self, h: usize, shock: usize, response: usize, v: f64) {
        let o = self.offset(h, shock, response);
        self.values[o] = v;
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest horizon; responses exist for `0..=horizon`.
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn from_values(k: usize, horizon: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), (horizon + 1) * k * k);
        ImpulseResponses { k, horizon, values }
    }
}

/// Responses to one-standard-deviation orthogonalized shocks, `Ψ_h L`,
/// where `L` is the given lower-triangular factor.
pub fn impulse_response_with_factor(model: &VarModel, factor: &Matrix, horizon: usize) -> ImpulseResponses {
    let k = model.k();
    let mut out = ImpulseResponses::zeros(k, horizon);
    for (h, psi) in ma_coefficients(model, horizon).iter().enumerate() {
        // Ψ_0 = I, so the impact responses are L itself
        let theta = if h == 0 {
            factor.clone()
        } else {
            psi.matmul(factor)
        };
        for shock in 0..k {
            for response in 0..k {
                out.set(h, shock, response, theta[(response, shock)]);
            }
        }
    }
    out
}

/// Cholesky-identified impulse responses for horizons `0..=horizon`.
pub fn impulse_response(model: &VarModel, horizon: usize) -> Result<ImpulseResponses, Error> {
    let factor = cholesky_semidefinite(&model.sigma)?;
    Ok(impulse_response_with_factor(model, &factor, horizon))
}

/// Forecast-error variance shares in percent, indexed by
/// (horizon 1..=H, response, shock).
#[derive(Debug, Clone, PartialEq)]
pub struct FevdTable {
    k: usize,
    horizon: usize,
    shares: Vec<f64>,
}

impl FevdTable {
    pub fn get(&self, h: usize, response: usize, shock: usize) -> f64 {
        assert!(h >= 1 && h <= self.horizon, "horizon out of range");
        self.shares[((h - 1) * self.k + response) * self.k + shock]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Shares of all shocks in one response's h-step variance.
    pub fn row(&self, h: usize, response: usize) -> &[f64] {
        let start = ((h - 1) * self.k + response) * self.k;
        &self.shares[start..start + self.k]
    }
}

/// Decomposes each variable's h-step forecast-error variance across the
/// orthogonalized shocks, for `h = 1..=horizon`.
pub fn fevd(model: &VarModel, horizon: usize) -> Result<FevdTable, Error> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("FEVD horizon must be at least 1".into()));
    }
    let irf = impulse_response(model, horizon - 1)?;
    fevd_from_responses(&irf, horizon)
}

pub fn fevd_from_responses(irf: &ImpulseResponses, horizon: usize) -> Result<FevdTable, Error> {
    let k = irf.k();
    let mut shares = Vec::with_capacity(horizon * k * k);
    let mut cumulative = vec![0.0; k * k];
    for h in 1..=horizon {
        let s = h - 1;
        for response in 0..k {
            for shock in 0..k {
                let v = irf.get(s, shock, response);
                cumulative[response * k + shock] += v * v;
            }
        }
        for response in 0..k {
            let row = &cumulative[response * k..(response + 1) * k];
            let total: f64 = row.iter().sum();
            if !(total > 0.0) {
                return Err(Error::DegenerateVariance { variable: response });
            }
            shares.extend(row.iter().map(|v| v / total * 100.0));
        }
    }
    Ok(FevdTable { k, horizon, shares })
}
