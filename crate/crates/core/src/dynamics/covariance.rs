// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, Matrix6, SMatrix, SymmetricEigen};

use super::index::{P_M, Q_M};

/// Block-diagonal symplectic form with 2×2 blocks ((0, 1), (−1, 0)).
pub fn symplectic_form<const N: usize>() -> SMatrix<f64, N, N> {
    let mut j = SMatrix::<f64, N, N>::zeros();
    for k in (0..N - 1).step_by(2) {
        j[(k, k + 1)] = 1.0;
        j[(k + 1, k)] = -1.0;
    }
    j
}

/// Smallest eigenvalue of the Hermitian matrix V + (i/2)J, via its real
/// 2N×2N representation [[V, −J/2], [J/2, V]].
pub(crate) fn uncertainty_margin<const N: usize>(v: &SMatrix<f64, N, N>) -> f64 {
    let j = symplectic_form::<N>() * 0.5;
    let mut h = DMatrix::<f64>::zeros(2 * N, 2 * N);
    h.view_mut((0, 0), (N, N)).copy_from(v);
    h.view_mut((N, N), (N, N)).copy_from(v);
    h.view_mut((0, N), (N, N)).copy_from(&(-j));
    h.view_mut((N, 0), (N, N)).copy_from(&j);
    SymmetricEigen::new(h).eigenvalues.min()
}

/// Stationary covariance of (δq_m, δp_m, δq0, δp0, δq1, δp1), vacuum variance ½.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix {
    v: Matrix6<f64>,
}

impl CovarianceMatrix {
    /// Symmetrizes `v`.
    pub fn new(v: Matrix6<f64>) -> Self {
        CovarianceMatrix { v: (v + v.transpose()) * 0.5 }
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.v
    }

    /// Minimum eigenvalue of V + (i/2)J; non-negative for a quantum state.
    pub fn physicality_margin(&self) -> f64 {
        uncertainty_margin(&self.v)
    }

    pub fn is_physical(&self) -> bool {
        self.physicality_margin() >= -1e-9
    }

    /// Mean phonon number (V_qq + V_pp − 1)/2 of the acoustic mode.
    pub fn acoustic_occupation(&self) -> f64 {
        (self.v[(Q_M, Q_M)] + self.v[(P_M, P_M)] - 1.0) / 2.0
    }
}

impl From<CovarianceMatrix> for Matrix6<f64> {
    fn from(c: CovarianceMatrix) -> Self {
        c.v
    }
}
