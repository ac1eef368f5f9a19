// SPDX-License-Identifier: Apache-2.0

//! Single-point evaluation, parameter sweeps and named presets.

mod grid;
mod recipes;

use std::fmt;
use std::str::FromStr;

pub use grid::{run_sweep, run_sweep_sequential, write_csv, Axis, ResultRow, Scale, SweepSpec};
pub use recipes::{recipe, recipes, temperature_scan_optimal_powers, CurveOptimum, Recipe, RecipeOutput};

use crate::cooling::{effective_mode, final_occupation, parametric_gain, quantum_limit, CoolingReport, EffectiveMode};
use crate::dynamics::{
    build_model, stability, steady_covariance_with, CovarianceMatrix, DiffusionMode, LinearModel, Stability,
};
use crate::entanglement::{entanglement_report, EntanglementReport};
use crate::error::{Error, Result};
use crate::model::{derive_params_with, DerivedParams, DriveConvention, PhysicalParams};

/// Everything needed to evaluate one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub params: PhysicalParams,
    pub diffusion: DiffusionMode,
    pub drive: DriveConvention,
}

impl Config {
    pub fn new(params: PhysicalParams) -> Self {
        Config { params, diffusion: DiffusionMode::default(), drive: DriveConvention::default() }
    }

    pub fn with_diffusion(mut self, diffusion: DiffusionMode) -> Self {
        self.diffusion = diffusion;
        self
    }

    pub fn with_drive(mut self, drive: DriveConvention) -> Self {
        self.drive = drive;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointReport {
    pub derived: DerivedParams,
    pub model: LinearModel,
    pub stability: Stability,
    /// `None` when the system is unstable.
    pub covariance: Option<CovarianceMatrix>,
    /// `None` when unstable, or when V violates the uncertainty relation
    /// (possible with [`DiffusionMode::Thermal`] at T → 0).
    pub entanglement: Option<EntanglementReport>,
    /// Signed gain; `None` unless TEM00 is driven on resonance.
    pub gain: Option<f64>,
    pub effective: EffectiveMode,
    pub n_quant: f64,
    /// `None` outside the cooling configuration or when ℛ ≥ 1.
    pub cooling: Option<CoolingReport>,
}

pub fn run_point(config: &Config) -> Result<PointReport> {
    let derived = derive_params_with(&config.params, config.drive)?;
    let model = build_model(&derived, config.diffusion);
    let stability = stability(&model)?;

    let covariance = if stability.stable { Some(steady_covariance_with(&model, &stability)?) } else { None };
    let entanglement = match &covariance {
        Some(v) => match entanglement_report(v) {
            Ok(r) => Some(r),
            Err(Error::Unphysical { .. }) => None,
            Err(e) => return Err(e),
        },
        None => None,
    };

    let gain = parametric_gain(&derived).ok();
    let cooling = final_occupation(&derived).ok();
    Ok(PointReport {
        effective: effective_mode(&derived, derived.mode_gap),
        n_quant: quantum_limit(derived.gamma_1, derived.omega_m),
        derived,
        model,
        stability,
        covariance,
        entanglement,
        gain,
        cooling,
    })
}

/// A named scalar that a sweep can report per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Gain,
    GammaEff,
    OmegaEff,
    GammaEffRsb,
    OmegaEffRsb,
    NQuant,
    NFinal,
    NClassical,
    En0m,
    En1m,
    En01,
    TripartiteMinSymplectic,
    /// Acoustic occupation (V_qq + V_pp − 1)/2 from the covariance matrix.
    NAcoustic,
    MaxRealPart,
}

impl Quantity {
    pub const ALL: [Quantity; 14] = [
        Quantity::Gain,
        Quantity::GammaEff,
        Quantity::OmegaEff,
        Quantity::GammaEffRsb,
        Quantity::OmegaEffRsb,
        Quantity::NQuant,
        Quantity::NFinal,
        Quantity::NClassical,
        Quantity::En0m,
        Quantity::En1m,
        Quantity::En01,
        Quantity::TripartiteMinSymplectic,
        Quantity::NAcoustic,
        Quantity::MaxRealPart,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Gain => "gain",
            Quantity::GammaEff => "gamma_eff",
            Quantity::OmegaEff => "omega_eff",
            Quantity::GammaEffRsb => "gamma_eff_rsb",
            Quantity::OmegaEffRsb => "omega_eff_rsb",
            Quantity::NQuant => "n_quant",
            Quantity::NFinal => "n_final",
            Quantity::NClassical => "n_classical",
            Quantity::En0m => "en_0m",
            Quantity::En1m => "en_1m",
            Quantity::En01 => "en_01",
            Quantity::TripartiteMinSymplectic => "tripartite_min_symplectic",
            Quantity::NAcoustic => "n_acoustic",
            Quantity::MaxRealPart => "max_real_part",
        }
    }

    /// Value at `r`, or `None` where undefined.
    pub fn value(self, r: &PointReport) -> Option<f64> {
        let ent = r.entanglement.as_ref();
        match self {
            Quantity::Gain => r.gain,
            Quantity::GammaEff => Some(r.effective.gamma_eff),
            Quantity::OmegaEff => Some(r.effective.omega_eff),
            Quantity::GammaEffRsb => Some(r.effective.gamma_eff_rsb),
            Quantity::OmegaEffRsb => Some(r.effective.omega_eff_rsb),
            Quantity::NQuant => Some(r.n_quant),
            Quantity::NFinal => r.cooling.map(|c| c.n_final),
            Quantity::NClassical => r.cooling.map(|c| c.n_classical),
            Quantity::En0m => ent.map(|e| e.en_0m),
            Quantity::En1m => ent.map(|e| e.en_1m),
            Quantity::En01 => ent.map(|e| e.en_01),
            Quantity::TripartiteMinSymplectic => ent.map(|e| e.tripartite_min_symplectic),
            Quantity::NAcoustic => r.covariance.map(|v| v.acoustic_occupation()),
            Quantity::MaxRealPart => Some(r.stability.max_real_part),
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Quantity>> {
        s.split(',').map(str::trim).filter(|q| !q.is_empty()).map(str::parse).collect()
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL.into_iter().find(|q| q.name() == s).ok_or_else(|| Error::UnknownQuantity(s.to_string()))
    }
}

/// `key = value` rendering of a point report.
pub fn format_report(r: &PointReport) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "stability = {}", r.stability.stable);
    for q in Quantity::ALL {
        match q.value(r) {
            Some(v) => {
                let _ = writeln!(out, "{} = {v}", q.name());
            }
            None => {
                let _ = writeln!(out, "{} =", q.name());
            }
        }
    }
    out
}

/// `key = value` rendering of the derived constants.
pub fn format_derived(d: &DerivedParams) -> String {
    let fields = [
        ("g0", d.g0),
        ("gamma_m", d.gamma_m),
        ("gamma_0", d.gamma_0),
        ("gamma_1", d.gamma_1),
        ("omega_m", d.omega_m),
        ("omega_0", d.omega_0),
        ("omega_1", d.omega_1),
        ("n_th", d.n_th),
        ("thermal_quanta", d.thermal_quanta),
        ("a_bar", d.a_bar),
        ("q_bar_0", d.q_bar_0),
        ("q_bar_1", d.q_bar_1),
        ("delta_0", d.delta_0),
        ("delta_1", d.delta_1),
    ];
    fields.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}
