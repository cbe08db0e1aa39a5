use super::Matrix;
use crate::Error;

fn factor(sigma: &Matrix, semidefinite: bool) -> Result<Matrix, Error> {
    let n = sigma.rows();
    assert_eq!(n, sigma.cols(), "covariance must be square");
    let scale = (0..n).fold(0.0f64, |m, i| m.max(sigma[(i, i)].abs()));
    let tol = scale * f64::EPSILON * (n.max(1) as f64) * 16.0;
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut pivot = sigma[(j, j)];
        for k in 0..j {
            pivot -= l[(j, k)] * l[(j, k)];
        }
        if pivot <= tol {
            if semidefinite && pivot >= -tol {
                continue;
            }
            return Err(Error::NotPositiveDefinite { pivot: j });
        }
        let d = libm::sqrt(pivot);
        l[(j, j)] = d;
        for i in j + 1..n {
            let mut s = sigma[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Ok(l)
}

/// Lower-triangular `L` with `L Lᵀ = sigma`; only the lower triangle of
/// `sigma` is read. Pivots at or below `16·n·ε·max|diag|` are rejected.
pub fn cholesky_factor(sigma: &Matrix) -> Result<Matrix, Error> {
    factor(sigma, false)
}

/// Like [`cholesky_factor`] but a numerically zero pivot yields a zero
/// column instead of an error, so a singular covariance (for instance one
/// built from all-zero residuals) still factors. Agrees bit for bit with
/// [`cholesky_factor`] on positive definite input.
pub fn cholesky_semidefinite(sigma: &Matrix) -> Result<Matrix, Error> {
    factor(sigma, true)
}
