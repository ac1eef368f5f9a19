// SPDX-License-Identifier: Apache-2.0

//! Physical inputs of the three-mode system and the constants derived from them.
//!
//! Frequencies in [`DerivedParams`] are angular (rad/s); decay rates are
//! amplitude half-linewidths. Mode 0 is the TEM00 carrier, mode 1 the TEM01
//! sideband mode, and `m` the acoustic mode.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::constants::{C, HBAR, K_B};
use crate::error::{Error, Result};

/// Default carrier wavelength (Nd:YAG), m.
pub const DEFAULT_WAVELENGTH: f64 = 1064e-9;
/// Default geometrical overlap factor Λ.
pub const DEFAULT_OVERLAP: f64 = 1.0;

/// Raw experimental inputs, SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Effective mass of the oscillator, kg.
    pub mass: f64,
    /// Cavity length, m.
    pub cavity_length: f64,
    /// Acoustic eigenfrequency ω_m/2π, Hz.
    pub mech_freq: f64,
    /// Acoustic quality factor ω_m/γ_m.
    pub mech_q: f64,
    /// Optical finesse; sets γ0 = γ1 = πc/(2Lℱ) unless overridden.
    pub finesse: f64,
    /// Carrier wavelength of the TEM00 mode, m.
    pub wavelength: f64,
    /// Geometrical overlap factor Λ ∈ (0, 1].
    pub overlap: f64,
    /// Input power into TEM00, W.
    pub power_00: f64,
    /// Input power into TEM01, W.
    pub power_01: f64,
    /// Environment temperature, K.
    pub temperature: f64,
    /// Mode gap Δ = ω1 − ω0, rad/s. Negative puts the Stokes sideband on resonance.
    pub mode_gap: f64,
    /// Laser detuning Δ0 = ω0 − ω_L, rad/s.
    pub detuning_00: f64,
    /// Optional TEM00 half-linewidth override, rad/s.
    pub gamma_00: Option<f64>,
    /// Optional TEM01 half-linewidth override, rad/s.
    pub gamma_01: Option<f64>,
}

impl PhysicalParams {
    /// Ground-state cooling benchmark: 0.1 mg oscillator at 1 MHz,
    /// 2 cm cavity of finesse 1e4, 50 mW into TEM00, 4 K, mode gap = +ω_m.
    pub fn cooling_benchmark() -> Self {
        let mech_freq = 1e6;
        PhysicalParams {
            mass: 1e-7,
            cavity_length: 0.02,
            mech_freq,
            mech_q: 1e7,
            finesse: 1e4,
            wavelength: DEFAULT_WAVELENGTH,
            overlap: DEFAULT_OVERLAP,
            power_00: 0.05,
            power_01: 0.0,
            temperature: 4.0,
            mode_gap: 2.0 * PI * mech_freq,
            detuning_00: 0.0,
            gamma_00: None,
            gamma_01: None,
        }
    }

    pub fn omega_m(&self) -> f64 {
        2.0 * PI * self.mech_freq
    }

    /// Free spectral range πc/L in rad/s.
    pub fn free_spectral_range(&self) -> f64 {
        PI * C / self.cavity_length
    }

    pub fn get(&self, p: Param) -> Option<f64> {
        Some(match p {
            Param::Mass => self.mass,
            Param::CavityLength => self.cavity_length,
            Param::MechFreq => self.mech_freq,
            Param::MechQ => self.mech_q,
            Param::Finesse => self.finesse,
            Param::Wavelength => self.wavelength,
            Param::Overlap => self.overlap,
            Param::Power00 => self.power_00,
            Param::Power01 => self.power_01,
            Param::Temperature => self.temperature,
            Param::ModeGap => self.mode_gap,
            Param::Detuning00 => self.detuning_00,
            Param::Gamma00 => return self.gamma_00,
            Param::Gamma01 => return self.gamma_01,
        })
    }

    pub fn set(&mut self, p: Param, value: f64) {
        match p {
            Param::Mass => self.mass = value,
            Param::CavityLength => self.cavity_length = value,
            Param::MechFreq => self.mech_freq = value,
            Param::MechQ => self.mech_q = value,
            Param::Finesse => self.finesse = value,
            Param::Wavelength => self.wavelength = value,
            Param::Overlap => self.overlap = value,
            Param::Power00 => self.power_00 = value,
            Param::Power01 => self.power_01 = value,
            Param::Temperature => self.temperature = value,
            Param::ModeGap => self.mode_gap = value,
            Param::Detuning00 => self.detuning_00 = value,
            Param::Gamma00 => self.gamma_00 = Some(value),
            Param::Gamma01 => self.gamma_01 = Some(value),
        }
    }

    /// Checks every invariant and returns the violations; empty iff valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut positive = |p: Param, v: f64| {
            if !(v.is_finite() && v > 0.0) {
                out.push(Violation::new(p, v, "must be finite and > 0"));
            }
        };
        positive(Param::Mass, self.mass);
        positive(Param::CavityLength, self.cavity_length);
        positive(Param::MechFreq, self.mech_freq);
        positive(Param::MechQ, self.mech_q);
        positive(Param::Finesse, self.finesse);
        positive(Param::Wavelength, self.wavelength);
        if let Some(g) = self.gamma_00 {
            positive(Param::Gamma00, g);
        }
        if let Some(g) = self.gamma_01 {
            positive(Param::Gamma01, g);
        }

        if !(self.overlap.is_finite() && self.overlap > 0.0 && self.overlap <= 1.0) {
            out.push(Violation::new(Param::Overlap, self.overlap, "must lie in (0, 1]"));
        }
        for (p, v) in
            [(Param::Power00, self.power_00), (Param::Power01, self.power_01), (Param::Temperature, self.temperature)]
        {
            if !(v.is_finite() && v >= 0.0) {
                out.push(Violation::new(p, v, "must be finite and >= 0"));
            }
        }

        let fsr = self.free_spectral_range();
        for (p, v) in [(Param::ModeGap, self.mode_gap), (Param::Detuning00, self.detuning_00)] {
            if !v.is_finite() {
                out.push(Violation::new(p, v, "must be finite"));
            } else if fsr.is_finite() && v.abs() >= fsr {
                out.push(Violation::new(p, v, "magnitude must be below the free spectral range πc/L"));
            }
        }
        out
    }
}

/// Names of the [`PhysicalParams`] fields, as used in parameter files and sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Mass,
    CavityLength,
    MechFreq,
    MechQ,
    Finesse,
    Wavelength,
    Overlap,
    Power00,
    Power01,
    Temperature,
    ModeGap,
    Detuning00,
    Gamma00,
    Gamma01,
}

impl Param {
    pub const ALL: [Param; 14] = [
        Param::Mass,
        Param::CavityLength,
        Param::MechFreq,
        Param::MechQ,
        Param::Finesse,
        Param::Wavelength,
        Param::Overlap,
        Param::Power00,
        Param::Power01,
        Param::Temperature,
        Param::ModeGap,
        Param::Detuning00,
        Param::Gamma00,
        Param::Gamma01,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::Mass => "mass",
            Param::CavityLength => "cavity_length",
            Param::MechFreq => "mech_freq",
            Param::MechQ => "mech_q",
            Param::Finesse => "finesse",
            Param::Wavelength => "wavelength",
            Param::Overlap => "overlap",
            Param::Power00 => "power_00",
            Param::Power01 => "power_01",
            Param::Temperature => "temperature",
            Param::ModeGap => "mode_gap",
            Param::Detuning00 => "detuning_00",
            Param::Gamma00 => "gamma_00",
            Param::Gamma01 => "gamma_01",
        }
    }

    /// Value used when a parameter file omits the key, if any.
    pub fn default_value(self) -> Option<f64> {
        match self {
            Param::Wavelength => Some(DEFAULT_WAVELENGTH),
            Param::Overlap => Some(DEFAULT_OVERLAP),
            _ => None,
        }
    }

    /// Optional keys have neither a value nor a default when absent.
    pub fn is_optional(self) -> bool {
        matches!(self, Param::Gamma00 | Param::Gamma01)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Param::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::Usage(format!("unknown parameter `{s}`")))
    }
}

/// One violated invariant of [`PhysicalParams`].
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub field: Param,
    pub value: f64,
    pub bound: &'static str,
}

impl Violation {
    fn new(field: Param, value: f64, bound: &'static str) -> Self {
        Violation { field, value, bound }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} {}", self.field, self.value, self.bound)
    }
}

/// Normalization of the steady quadrature amplitudes q̄_i fed into the drift matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DriveConvention {
    /// q̄_i = √(2I_i/(ħω_iγ_i)), numerically equal to the field amplitude ā.
    /// The figure presets use this normalization. CLI name `paper`.
    #[default]
    Amplitude,
    /// q̄_i = √2·√(2I_i/(ħω_iγ_i)), i.e. q̄ = √2·ā as implied by a = (q + ip)/√2.
    /// With this choice the drift matrix and the analytic cooling formulas
    /// describe the same coupling strength G0·ā.
    Quadrature,
}

impl FromStr for DriveConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" | "amplitude" => Ok(DriveConvention::Amplitude),
            "quadrature" => Ok(DriveConvention::Quadrature),
            _ => Err(Error::Usage(format!("unknown drive convention `{s}` (expected paper|quadrature)"))),
        }
    }
}

/// Constants derived from [`PhysicalParams`]. All rates in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub g0: f64,
    pub gamma_m: f64,
    pub gamma_0: f64,
    pub gamma_1: f64,
    pub omega_m: f64,
    pub omega_0: f64,
    pub omega_1: f64,
    /// Bose occupation 1/(exp(ħω_m/k_BT) − 1).
    pub n_th: f64,
    /// High-temperature occupation k_BT/(ħω_m).
    pub thermal_quanta: f64,
    /// Steady TEM00 field amplitude √(2I0/(γ0ħω0)).
    pub a_bar: f64,
    pub q_bar_0: f64,
    pub q_bar_1: f64,
    /// Laser detuning of TEM00, Δ0.
    pub delta_0: f64,
    /// Laser detuning of TEM01, Δ1 = Δ0 + Δ.
    pub delta_1: f64,
    /// Mode gap Δ.
    pub mode_gap: f64,
    pub drive: DriveConvention,
    pub inputs: PhysicalParams,
}

/// Derives every constant used downstream, with [`DriveConvention::Amplitude`].
pub fn derive_params(p: &PhysicalParams) -> Result<DerivedParams> {
    derive_params_with(p, DriveConvention::Amplitude)
}

pub fn derive_params_with(p: &PhysicalParams, drive: DriveConvention) -> Result<DerivedParams> {
    let violations = p.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidParams(violations));
    }

    let omega_m = p.omega_m();
    let gamma_m = omega_m / p.mech_q;
    let gamma_finesse = PI * C / (2.0 * p.cavity_length * p.finesse);
    let gamma_0 = p.gamma_00.unwrap_or(gamma_finesse);
    let gamma_1 = p.gamma_01.unwrap_or(gamma_finesse);
    let omega_0 = 2.0 * PI * C / p.wavelength;
    let omega_1 = omega_0 + p.mode_gap;

    let g0 = (p.overlap * HBAR * omega_0 * omega_1 / (p.mass * omega_m * p.cavity_length * p.cavity_length)).sqrt();

    let (n_th, thermal_quanta) = if p.temperature == 0.0 {
        (0.0, 0.0)
    } else {
        let x = HBAR * omega_m / (K_B * p.temperature);
        (1.0 / x.exp_m1(), 1.0 / x)
    };

    let a_bar = (2.0 * p.power_00 / (gamma_0 * HBAR * omega_0)).sqrt();
    let scale = match drive {
        DriveConvention::Amplitude => 1.0,
        DriveConvention::Quadrature => std::f64::consts::SQRT_2,
    };
    let q_bar_0 = scale * (2.0 * p.power_00 / (HBAR * omega_0 * gamma_0)).sqrt();
    let q_bar_1 = scale * (2.0 * p.power_01 / (HBAR * omega_1 * gamma_1)).sqrt();

    Ok(DerivedParams {
        g0,
        gamma_m,
        gamma_0,
        gamma_1,
        omega_m,
        omega_0,
        omega_1,
        n_th,
        thermal_quanta,
        a_bar,
        q_bar_0,
        q_bar_1,
        delta_0: p.detuning_00,
        delta_1: p.detuning_00 + p.mode_gap,
        mode_gap: p.mode_gap,
        drive,
        inputs: *p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn benchmark_values() {
        // Frozen from an independent evaluation with the same CODATA constants.
        let d = derive_params(&PhysicalParams::cooling_benchmark()).unwrap();
        assert!(rel(d.gamma_1, 2_354_564.459_136_066_5) < 1e-12);
        assert!(rel(d.n_th, 83_345.976_545_378_14) < 1e-10);
        assert!(rel(d.g0, 1.146_772_037_353_343_4) < 1e-12);
        assert!(rel(d.a_bar, 476_954.725_283_937_35) < 1e-12);
        assert!((d.gamma_1 - 2.355e6).abs() < 1e3);
        assert!((d.n_th - 8.34e4).abs() < 1e2);
    }

    #[test]
    fn zero_temperature_has_no_thermal_occupation() {
        let mut p = PhysicalParams::cooling_benchmark();
        p.temperature = 0.0;
        let d = derive_params(&p).unwrap();
        assert_eq!(d.n_th, 0.0);
        assert_eq!(d.thermal_quanta, 0.0);
    }

    #[test]
    fn drive_conventions() {
        let p = PhysicalParams::cooling_benchmark();
        let amp = derive_params(&p).unwrap();
        assert_eq!(amp.a_bar * amp.a_bar, amp.q_bar_0 * amp.q_bar_0);
        let quad = derive_params_with(&p, DriveConvention::Quadrature).unwrap();
        assert!(rel(quad.q_bar_0, std::f64::consts::SQRT_2 * quad.a_bar) < 1e-15);
        assert_eq!(quad.a_bar, amp.a_bar);
    }

    #[test]
    fn validation_names_fields() {
        assert!(PhysicalParams::cooling_benchmark().validate().is_empty());

        let mut p = PhysicalParams::cooling_benchmark();
        p.mass = -1.0;
        let v = p.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].field, Param::Mass);

        let mut p = PhysicalParams::cooling_benchmark();
        p.mode_gap = 10.0 * p.free_spectral_range();
        let v = p.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].field, Param::ModeGap);

        let mut p = PhysicalParams::cooling_benchmark();
        p.overlap = 1.5;
        p.temperature = f64::NAN;
        let fields: Vec<_> = p.validate().into_iter().map(|v| v.field).collect();
        assert_eq!(fields, vec![Param::Overlap, Param::Temperature]);
        assert!(matches!(derive_params(&p), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn per_mode_linewidth_override() {
        let mut p = PhysicalParams::cooling_benchmark();
        p.gamma_01 = Some(1e5);
        let d = derive_params(&p).unwrap();
        assert_eq!(d.gamma_1, 1e5);
        assert!(rel(d.gamma_0, 2_354_564.459_136_066_5) < 1e-12);
    }

    #[test]
    fn param_names_round_trip() {
        for p in Param::ALL {
            assert_eq!(p.name().parse::<Param>().unwrap(), p);
        }
        assert!("nonsense".parse::<Param>().is_err());
    }
}
