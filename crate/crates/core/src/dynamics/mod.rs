// SPDX-License-Identifier: Apache-2.0

//! Linearized quantum Langevin dynamics ẋ = Mx + n of the fluctuations
//! x = (δq_m, δp_m, δq0, δp0, δq1, δp1), and its stationary covariance.

mod covariance;
mod lyapunov;

use std::cmp::Ordering;
use std::str::FromStr;

use nalgebra::{Complex, Matrix6, Schur};

pub(crate) use covariance::uncertainty_margin as covariance_margin;
pub use covariance::{symplectic_form, CovarianceMatrix};
pub(crate) use lyapunov::steady_covariance_with;
pub use lyapunov::{kronecker_operator, solve_lyapunov, steady_covariance};

use crate::error::{Error, Result};
use crate::model::DerivedParams;

/// Index of each quadrature in the state vector.
pub mod index {
    pub const Q_M: usize = 0;
    pub const P_M: usize = 1;
    pub const Q_0: usize = 2;
    pub const P_0: usize = 3;
    pub const Q_1: usize = 4;
    pub const P_1: usize = 5;
}

/// Thermal entry of the diffusion matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiffusionMode {
    /// D22 = 2γ_m k_BT/(ħω_m); vanishes at T = 0. CLI name `paper`.
    #[default]
    Thermal,
    /// D22 = 2γ_m (n_th + 1/2) with the Bose occupation n_th.
    ZeroPoint,
}

impl FromStr for DiffusionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" | "thermal" => Ok(DiffusionMode::Thermal),
            "zero-point" => Ok(DiffusionMode::ZeroPoint),
            _ => Err(Error::Usage(format!("unknown diffusion mode `{s}` (expected paper|zero-point)"))),
        }
    }
}

/// Drift and diffusion matrices in SI units (rad/s).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearModel {
    pub drift: Matrix6<f64>,
    pub diffusion: Matrix6<f64>,
    /// ω_m, used to non-dimensionalize before solving.
    pub scale: f64,
    pub mode: DiffusionMode,
}

impl LinearModel {
    pub fn build(d: &DerivedParams, mode: DiffusionMode) -> Self {
        let wm = d.omega_m;
        let k0 = d.g0 * d.q_bar_0;
        let k1 = d.g0 * d.q_bar_1;
        #[rustfmt::skip]
        let drift = Matrix6::new(
            0.0, wm,          0.0,         0.0,         0.0,         0.0,
            -wm, -d.gamma_m,  k1,          0.0,         k0,          0.0,
            0.0, 0.0,         -d.gamma_0,  d.delta_0,   0.0,         0.0,
            k1,  0.0,         -d.delta_0,  -d.gamma_0,  0.0,         0.0,
            0.0, 0.0,         0.0,         0.0,         -d.gamma_1,  d.delta_1,
            k0,  0.0,         0.0,         0.0,         -d.delta_1,  -d.gamma_1,
        );
        let thermal = match mode {
            DiffusionMode::Thermal => 2.0 * d.gamma_m * d.thermal_quanta,
            DiffusionMode::ZeroPoint => 2.0 * d.gamma_m * (d.n_th + 0.5),
        };
        let diffusion =
            Matrix6::from_diagonal(&nalgebra::Vector6::new(0.0, thermal, d.gamma_0, d.gamma_0, d.gamma_1, d.gamma_1));
        LinearModel { drift, diffusion, scale: wm, mode }
    }

    pub(crate) fn scaled(&self) -> (Matrix6<f64>, Matrix6<f64>) {
        (self.drift / self.scale, self.diffusion / self.scale)
    }
}

pub fn build_model(d: &DerivedParams, mode: DiffusionMode) -> LinearModel {
    LinearModel::build(d, mode)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stability {
    pub stable: bool,
    /// Largest real part among the eigenvalues of M, 1/s.
    pub max_real_part: f64,
    /// Sorted by real part, then imaginary part, both descending.
    pub eigenvalues: Vec<Complex<f64>>,
}

/// Max-row-sum norm.
pub(crate) fn norm_inf(m: &Matrix6<f64>) -> f64 {
    m.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

pub(crate) fn eigenvalues(m: &Matrix6<f64>) -> Result<Vec<Complex<f64>>> {
    let schur = Schur::try_new(*m, 1e-15, 10_000).ok_or(Error::EigenNonConvergence)?;
    let mut ev: Vec<_> = schur.complex_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| {
        b.re.partial_cmp(&a.re).unwrap_or(Ordering::Equal).then(b.im.partial_cmp(&a.im).unwrap_or(Ordering::Equal))
    });
    Ok(ev)
}

/// Stable iff every eigenvalue of M has Re(λ) < −1e-9·‖M‖.
pub fn stability(model: &LinearModel) -> Result<Stability> {
    if model.drift.iter().any(|x| !x.is_finite()) {
        return Err(Error::EigenNonConvergence);
    }
    let (m, _) = model.scaled();
    let eigenvalues: Vec<_> = eigenvalues(&m)?.into_iter().map(|z| z * model.scale).collect();
    let max_real_part = eigenvalues.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let tolerance = 1e-9 * norm_inf(&model.drift);
    Ok(Stability { stable: max_real_part < -tolerance, max_real_part, eigenvalues })
}
