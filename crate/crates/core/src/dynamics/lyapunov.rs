// SPDX-License-Identifier: Apache-2.0

//! Stationary covariance from M V + V Mᵀ = −D.
//!
//! The state has six quadratures, so the equation is vectorized into the
//! 36×36 system (I⊗M + M⊗I)·vec(V) = −vec(D) (column-major vec) and solved
//! by LU with partial pivoting.

use nalgebra::{Matrix6, SMatrix, SVector};

use super::{norm_inf, stability, CovarianceMatrix, LinearModel, Stability};
use crate::error::{Error, Result};

pub type KroneckerOperator = SMatrix<f64, 36, 36>;

/// I⊗M + M⊗I, acting on column-major vec(V).
pub fn kronecker_operator(m: &Matrix6<f64>) -> KroneckerOperator {
    let mut k = KroneckerOperator::zeros();
    for col in 0..6 {
        for row in 0..6 {
            let r = col * 6 + row;
            // (M V)_{row,col} = Σ_i M[row,i] V[i,col]
            for i in 0..6 {
                k[(r, col * 6 + i)] += m[(row, i)];
            }
            // (V Mᵀ)_{row,col} = Σ_j V[row,j] M[col,j]
            for j in 0..6 {
                k[(r, j * 6 + row)] += m[(col, j)];
            }
        }
    }
    k
}

/// Solves M V + V Mᵀ = −D for V without any stability check.
/// Returns `None` when the Kronecker system is singular.
pub fn solve_lyapunov(m: &Matrix6<f64>, d: &Matrix6<f64>) -> Option<Matrix6<f64>> {
    let k = kronecker_operator(m);
    let rhs = SVector::<f64, 36>::from_column_slice((-d).as_slice());
    let x = k.lu().solve(&rhs)?;
    Some(Matrix6::from_column_slice(x.as_slice()))
}

/// Stationary covariance of a stable model.
pub fn steady_covariance(model: &LinearModel) -> Result<CovarianceMatrix> {
    steady_covariance_with(model, &stability(model)?)
}

/// As [`steady_covariance`], reusing an already computed spectrum of `model`.
pub(crate) fn steady_covariance_with(model: &LinearModel, s: &Stability) -> Result<CovarianceMatrix> {
    if !s.stable {
        return Err(Error::UnstableSystem { max_real_part: s.max_real_part });
    }

    let (m, d) = model.scaled();
    let m_norm = norm_inf(&m);

    // The Lyapunov operator has eigenvalues λi + λj.
    let ev: Vec<_> = s.eigenvalues.iter().map(|z| z / model.scale).collect();
    let min_pair_sum = ev.iter().flat_map(|a| ev.iter().map(move |b| (a + b).norm())).fold(f64::INFINITY, f64::min);
    if min_pair_sum <= 1e-12 * m_norm {
        return Err(Error::SingularSystem { min_pair_sum: min_pair_sum * model.scale });
    }

    let v = solve_lyapunov(&m, &d).ok_or(Error::SingularSystem { min_pair_sum: min_pair_sum * model.scale })?;
    let cov = CovarianceMatrix::new(v);
    let v = cov.matrix();

    let residual = norm_inf(&(m * v + v * m.transpose() + d));
    let bound = 1e-8 * (m_norm * norm_inf(v) + norm_inf(&d));
    if residual.is_nan() || residual > bound {
        return Err(Error::ResidualTooLarge { residual, bound });
    }
    Ok(cov)
}
