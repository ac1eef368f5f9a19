// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {}", join_violations(.0))]
    InvalidParams(Vec<Violation>),

    #[error("line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("missing required key `{0}`")]
    MissingKey(&'static str),

    #[error("{0}")]
    Usage(String),

    #[error("drift matrix is not stable (max Re(λ) = {max_real_part:e} 1/s)")]
    UnstableSystem { max_real_part: f64 },

    #[error("Lyapunov operator is numerically singular (min |λi + λj| = {min_pair_sum:e})")]
    SingularSystem { min_pair_sum: f64 },

    #[error("Lyapunov residual {residual:e} exceeds bound {bound:e}")]
    ResidualTooLarge { residual: f64, bound: f64 },

    #[error("eigenvalue solver did not converge")]
    EigenNonConvergence,

    #[error("covariance matrix is unphysical (min eigenvalue of V + iJ/2 = {min_eigenvalue:e})")]
    Unphysical { min_eigenvalue: f64 },

    #[error("mode index {index} out of range for a {modes}-mode covariance matrix")]
    ModeOutOfRange { index: usize, modes: usize },

    #[error("a mode pair needs two distinct modes")]
    InvalidPair,

    #[error("requires the cooling configuration (TEM00 driven on resonance), got detuning_00 = {detuning_00}")]
    NotCoolingConfiguration { detuning_00: f64 },

    #[error("parametric gain {gain} >= 1: the acoustic mode is unstable")]
    GainInstability { gain: f64 },

    #[error("effective occupation undefined: S(Ω) = S(-Ω)")]
    UndefinedOccupation,

    #[error("unknown quantity `{0}`")]
    UnknownQuantity(String),

    #[error("unknown recipe `{0}`")]
    UnknownRecipe(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
