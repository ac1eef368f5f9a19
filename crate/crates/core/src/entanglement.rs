// SPDX-License-Identifier: Apache-2.0

//! Gaussian entanglement measures on the stationary covariance matrix.
//!
//! Conventions: quadratures ordered (q, p) per mode, vacuum variance ½,
//! partial transposition flips the sign of one mode's momentum.

use nalgebra::{Matrix2, Matrix4, Matrix6, SMatrix, SymmetricEigen};

use crate::dynamics::covariance_margin;
use crate::dynamics::{symplectic_form, CovarianceMatrix};
use crate::error::{Error, Result};

const PHYSICAL_TOLERANCE: f64 = 1e-9;

/// A mode of the three-mode system, in global state order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Acoustic = 0,
    Tem00 = 1,
    Tem01 = 2,
}

impl Mode {
    pub fn index(self) -> usize {
        self as usize
    }
}

/// Two distinct modes, stored in global order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModePair(Mode, Mode);

impl ModePair {
    pub const TEM00_ACOUSTIC: ModePair = ModePair(Mode::Acoustic, Mode::Tem00);
    pub const TEM01_ACOUSTIC: ModePair = ModePair(Mode::Acoustic, Mode::Tem01);
    pub const OPTICAL: ModePair = ModePair(Mode::Tem00, Mode::Tem01);

    pub fn new(a: Mode, b: Mode) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(ModePair(a, b)),
            std::cmp::Ordering::Greater => Ok(ModePair(b, a)),
            std::cmp::Ordering::Equal => Err(Error::InvalidPair),
        }
    }

    pub fn modes(self) -> (Mode, Mode) {
        (self.0, self.1)
    }

    fn indices(self) -> [usize; 4] {
        let (a, b) = (2 * self.0.index(), 2 * self.1.index());
        [a, a + 1, b, b + 1]
    }
}

/// 4×4 covariance of a mode pair, rows/columns in global (q, p, q, p) order.
pub fn submatrix(v: &CovarianceMatrix, pair: ModePair) -> Matrix4<f64> {
    let idx = pair.indices();
    Matrix4::from_fn(|i, j| v.matrix()[(idx[i], idx[j])])
}

/// Writes `sub` back into the rows/columns of `pair`.
pub fn embed(v: &Matrix6<f64>, sub: &Matrix4<f64>, pair: ModePair) -> Matrix6<f64> {
    let idx = pair.indices();
    let mut out = *v;
    for i in 0..4 {
        for j in 0..4 {
            out[(idx[i], idx[j])] = sub[(i, j)];
        }
    }
    out
}

/// Flips the sign of `mode`'s momentum row and column. An involution.
pub fn partial_transpose<const N: usize>(v: &SMatrix<f64, N, N>, mode: usize) -> Result<SMatrix<f64, N, N>> {
    let modes = N / 2;
    if mode >= modes {
        return Err(Error::ModeOutOfRange { index: mode, modes });
    }
    let p = 2 * mode + 1;
    let mut out = *v;
    for k in 0..N {
        if k != p {
            out[(p, k)] = -out[(p, k)];
            out[(k, p)] = -out[(k, p)];
        }
    }
    Ok(out)
}

fn check_physical<const N: usize>(v: &SMatrix<f64, N, N>) -> Result<()> {
    let min_eigenvalue = covariance_margin(v);
    if min_eigenvalue < -PHYSICAL_TOLERANCE || !min_eigenvalue.is_finite() {
        return Err(Error::Unphysical { min_eigenvalue });
    }
    Ok(())
}

/// Smallest symplectic eigenvalue σ₋ of the partial transpose of a two-mode covariance.
pub fn min_pt_symplectic_eigenvalue(v_sub: &Matrix4<f64>) -> Result<f64> {
    check_physical(v_sub)?;
    let block = |r: usize, c: usize| -> Matrix2<f64> { v_sub.fixed_view::<2, 2>(r, c).into_owned() };
    let sigma = block(0, 0).determinant() + block(2, 2).determinant() - 2.0 * block(0, 2).determinant();
    let det = v_sub.determinant();
    let mut disc = sigma * sigma - 4.0 * det;
    if disc < 0.0 {
        if disc < -1e-12 * sigma * sigma.max(1.0) {
            return Err(Error::Unphysical { min_eigenvalue: disc });
        }
        disc = 0.0;
    }
    // (Σ − √disc)/2 rationalized to avoid cancellation for strongly entangled states.
    let sigma_minus_sq = 2.0 * det / (sigma + disc.sqrt());
    Ok(sigma_minus_sq.max(0.0).sqrt())
}

/// Logarithmic negativity E_N = max(0, −ln 2σ₋).
/// Values below this are rounding noise on a separable boundary state.
const LOG_NEGATIVITY_FLOOR: f64 = 1e-12;

pub fn log_negativity(v_sub: &Matrix4<f64>) -> Result<f64> {
    let sigma_minus = min_pt_symplectic_eigenvalue(v_sub)?;
    let en = -(2.0 * sigma_minus).ln();
    Ok(if en < LOG_NEGATIVITY_FLOOR { 0.0 } else { en })
}

pub fn pair_log_negativity(v: &CovarianceMatrix, pair: ModePair) -> Result<f64> {
    log_negativity(&submatrix(v, pair))
}

/// Symplectic eigenvalues of a positive semidefinite 6×6 covariance, ascending.
///
/// They are the moduli of the eigenvalues of J·V. Here they are taken from
/// the symmetric matrix √V·Jᵀ·V·J·√V, whose spectrum is {ν_k²}, each twice.
pub fn symplectic_eigenvalues(v: &Matrix6<f64>) -> [f64; 3] {
    let eig = SymmetricEigen::new(*v);
    let root = eig.eigenvalues.map(|x| x.max(0.0).sqrt());
    let sqrt_v = eig.eigenvectors * Matrix6::from_diagonal(&root) * eig.eigenvectors.transpose();
    let j = symplectic_form::<6>();
    let k = sqrt_v * j.transpose() * v * j * sqrt_v;
    let mut nu2: Vec<f64> = SymmetricEigen::new((k + k.transpose()) * 0.5).eigenvalues.iter().copied().collect();
    nu2.sort_by(f64::total_cmp);
    [0, 2, 4].map(|i| ((nu2[i] + nu2[i + 1]) * 0.5).max(0.0).sqrt())
}

/// PPT test of one mode against the other two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptSplit {
    pub mode: Mode,
    pub min_symplectic: f64,
    /// Smallest ordinary eigenvalue of the transposed matrix.
    pub min_eigenvalue: f64,
    pub entangled: bool,
}

pub fn ppt_split(v: &CovarianceMatrix, mode: Mode) -> Result<PptSplit> {
    check_physical(v.matrix())?;
    let v_pt = partial_transpose(v.matrix(), mode.index())?;
    let min_symplectic = symplectic_eigenvalues(&v_pt)[0];
    let min_eigenvalue = SymmetricEigen::new(v_pt).eigenvalues.min();
    Ok(PptSplit { mode, min_symplectic, min_eigenvalue, entangled: min_symplectic < 0.5 - 1e-9 })
}

/// Acoustic | optical split, plus the other two single-mode splits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripartitePpt {
    pub min_symplectic: f64,
    pub entangled_across_acoustic_split: bool,
    pub acoustic: PptSplit,
    pub tem00: PptSplit,
    pub tem01: PptSplit,
}

pub fn tripartite_ppt(v: &CovarianceMatrix) -> Result<TripartitePpt> {
    let acoustic = ppt_split(v, Mode::Acoustic)?;
    Ok(TripartitePpt {
        min_symplectic: acoustic.min_symplectic,
        entangled_across_acoustic_split: acoustic.entangled,
        acoustic,
        tem00: ppt_split(v, Mode::Tem00)?,
        tem01: ppt_split(v, Mode::Tem01)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    /// TEM00 – acoustic.
    pub en_0m: f64,
    /// TEM01 – acoustic.
    pub en_1m: f64,
    /// TEM00 – TEM01.
    pub en_01: f64,
    pub tripartite_min_symplectic: f64,
    pub ppt: TripartitePpt,
}

pub fn entanglement_report(v: &CovarianceMatrix) -> Result<EntanglementReport> {
    let ppt = tripartite_ppt(v)?;
    Ok(EntanglementReport {
        en_0m: pair_log_negativity(v, ModePair::TEM00_ACOUSTIC)?,
        en_1m: pair_log_negativity(v, ModePair::TEM01_ACOUSTIC)?,
        en_01: pair_log_negativity(v, ModePair::OPTICAL)?,
        tripartite_min_symplectic: ppt.min_symplectic,
        ppt,
    })
}

/// Two-mode squeezed vacuum with squeezing parameter `r`.
pub fn two_mode_squeezed(r: f64) -> Matrix4<f64> {
    let a = (2.0 * r).cosh() / 2.0;
    let c = (2.0 * r).sinh() / 2.0;
    #[rustfmt::skip]
    let v = Matrix4::new(
        a,   0.0, c,   0.0,
        0.0, a,   0.0, -c,
        c,   0.0, a,   0.0,
        0.0, -c,  0.0, a,
    );
    v
}
