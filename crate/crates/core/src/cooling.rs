// SPDX-License-Identifier: Apache-2.0

//! Analytic cooling and back-action: parametric gain, optical spring,
//! sideband spectrum and the resulting phonon occupation.
//!
//! These formulas use the TEM00 field amplitude ā and eliminate TEM00 from
//! the dynamics, so they describe the configuration Δ0 = 0, I1 = 0 with the
//! TEM01 sideband mode a distance Δ (the mode gap) from the carrier.

use nalgebra::Complex;

use crate::error::{Error, Result};
use crate::model::DerivedParams;

/// The three equivalent closed forms of the resonant parametric gain magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainForms {
    /// G0²ā²/(γ1γ_m).
    pub coupling: f64,
    /// 2ΛI0ω1/(mω_mL²γ0γ1γ_m).
    pub power: f64,
    /// 2ΛI0Q0Q1Q_m/(mω0ω_m²L²).
    pub quality_factor: f64,
}

fn require_resonant_carrier(d: &DerivedParams) -> Result<()> {
    if d.delta_0 != 0.0 {
        return Err(Error::NotCoolingConfiguration { detuning_00: d.delta_0 });
    }
    Ok(())
}

pub fn gain_forms(d: &DerivedParams) -> GainForms {
    let p = &d.inputs;
    let l2 = p.cavity_length * p.cavity_length;
    let coupling = d.g0 * d.g0 * d.a_bar * d.a_bar / (d.gamma_1 * d.gamma_m);
    let power =
        2.0 * p.overlap * p.power_00 * d.omega_1 / (p.mass * d.omega_m * l2 * d.gamma_0 * d.gamma_1 * d.gamma_m);
    let (q0, q1, qm) = (d.omega_0 / d.gamma_0, d.omega_1 / d.gamma_1, d.omega_m / d.gamma_m);
    let quality_factor =
        2.0 * p.overlap * p.power_00 * q0 * q1 * qm / (p.mass * d.omega_0 * d.omega_m * d.omega_m * l2);
    GainForms { coupling, power, quality_factor }
}

/// Signed parametric gain ℛ: negative (cooling) when the anti-Stokes
/// sideband resonates (Δ > 0), positive when the Stokes sideband does.
pub fn parametric_gain(d: &DerivedParams) -> Result<f64> {
    require_resonant_carrier(d)?;
    let forms = gain_forms(d);
    debug_assert!(
        forms.coupling == forms.power || ((forms.coupling - forms.power) / forms.power).abs() < 1e-9,
        "gain forms disagree: {forms:?}"
    );
    let sign = if d.mode_gap > 0.0 {
        -1.0
    } else if d.mode_gap < 0.0 {
        1.0
    } else {
        0.0
    };
    Ok(sign * forms.coupling)
}

/// Optical-spring-modified damping and frequency of the acoustic mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveMode {
    /// γ′_m, full two-Lorentzian expression.
    pub gamma_eff: f64,
    /// ω′_m, full two-Lorentzian expression.
    pub omega_eff: f64,
    /// γ_m + sgn(Δ)·G0²ā²/γ1.
    pub gamma_eff_rsb: f64,
    /// ω_m − sgn(Δ)·G0²ā²/(4ω_m).
    pub omega_eff_rsb: f64,
    /// ω_m ≥ 10 γ_m; the effective-mode picture assumes a high-Q oscillator.
    pub high_q: bool,
}

pub fn effective_mode(d: &DerivedParams, delta: f64) -> EffectiveMode {
    let k2 = d.g0 * d.g0 * d.a_bar * d.a_bar;
    let (wm, g1) = (d.omega_m, d.gamma_1);
    let lorentz = ((wm - delta).powi(2) + g1 * g1) * ((wm + delta).powi(2) + g1 * g1);
    let gamma_eff = d.gamma_m + 4.0 * k2 * delta * wm * g1 / lorentz;
    let omega_eff = wm + k2 * delta * (wm * wm - delta * delta - g1 * g1) / lorentz;

    let sign = if delta == 0.0 { 0.0 } else { delta.signum() };
    EffectiveMode {
        gamma_eff,
        omega_eff,
        gamma_eff_rsb: d.gamma_m + sign * k2 / g1,
        omega_eff_rsb: wm - sign * k2 / (4.0 * wm),
        high_q: wm >= 10.0 * d.gamma_m,
    }
}

/// Coefficient K(Ω) of δq̃_m in the radiation-pressure force,
/// 2G0²ā²Δ / ([(Ω−Δ) + iγ1][(Ω+Δ) + iγ1]).
///
/// At Ω = ω_m it reproduces [`effective_mode`]: γ′_m = γ_m − Im K and
/// ω′_m = ω_m + Re K / 2.
pub fn rp_response(omega: f64, d: &DerivedParams, delta: f64) -> Complex<f64> {
    let k2 = d.g0 * d.g0 * d.a_bar * d.a_bar;
    let g1 = d.gamma_1;
    let den = Complex::new(omega - delta, g1) * Complex::new(omega + delta, g1);
    Complex::new(2.0 * k2 * delta, 0.0) / den
}

/// n̄_quant = (γ1 / 2ω_m)².
pub fn quantum_limit(gamma_1: f64, omega_m: f64) -> f64 {
    let x = gamma_1 / (2.0 * omega_m);
    x * x
}

/// Vacuum-driven spectral density of the TEM01 amplitude, 2γ1/((Ω−Δ)² + γ1²).
pub fn sideband_spectrum(omega: f64, delta: f64, gamma_1: f64) -> f64 {
    2.0 * gamma_1 / ((omega - delta).powi(2) + gamma_1 * gamma_1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdtOccupation {
    pub n_eff: f64,
    /// The Stokes side dominates: the optical bath has negative temperature.
    pub heating: bool,
}

/// Effective bath occupation S(−Ω) / (S(Ω) − S(−Ω)).
pub fn fdt_occupation(omega: f64, delta: f64, gamma_1: f64) -> Result<FdtOccupation> {
    let s_plus = sideband_spectrum(omega, delta, gamma_1);
    let s_minus = sideband_spectrum(-omega, delta, gamma_1);
    if s_plus == s_minus {
        return Err(Error::UndefinedOccupation);
    }
    let n_eff = s_minus / (s_plus - s_minus);
    Ok(FdtOccupation { n_eff, heating: n_eff < 0.0 })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoolingReport {
    pub gain: f64,
    pub gamma_eff: f64,
    pub omega_eff: f64,
    pub gamma_eff_rsb: f64,
    pub omega_eff_rsb: f64,
    pub n_quant: f64,
    /// n̄_th/(1 − ℛ) + n̄_quant.
    pub n_final: f64,
    /// Classical estimate n̄_th/(1 − ℛ), without the vacuum contribution.
    pub n_classical: f64,
}

pub fn final_occupation(d: &DerivedParams) -> Result<CoolingReport> {
    let gain = parametric_gain(d)?;
    if gain >= 1.0 {
        return Err(Error::GainInstability { gain });
    }
    let eff = effective_mode(d, d.mode_gap);
    let n_quant = quantum_limit(d.gamma_1, d.omega_m);
    let n_classical = d.n_th / (1.0 - gain);
    Ok(CoolingReport {
        gain,
        gamma_eff: eff.gamma_eff,
        omega_eff: eff.omega_eff,
        gamma_eff_rsb: eff.gamma_eff_rsb,
        omega_eff_rsb: eff.omega_eff_rsb,
        n_quant,
        n_final: n_classical + n_quant,
        n_classical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{derive_params, PhysicalParams};
    use proptest::prelude::*;

    fn bench() -> DerivedParams {
        derive_params(&PhysicalParams::cooling_benchmark()).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn benchmark_gain() {
        let d = bench();
        let r = parametric_gain(&d).unwrap();
        // Independent evaluation of −2ΛI0ω1/(mω_mL²γ0γ1γ_m).
        assert!(rel(r, -202_217.179_326_006_07) < 1e-10);
        assert!((r + 2.0e5).abs() < 0.05e5);
    }

    #[test]
    fn gain_scales_with_power() {
        let mut p = PhysicalParams::cooling_benchmark();
        p.power_00 = 0.0;
        assert_eq!(parametric_gain(&derive_params(&p).unwrap()).unwrap(), 0.0);
        p.power_00 = 0.05;
        let r1 = parametric_gain(&derive_params(&p).unwrap()).unwrap();
        p.power_00 = 0.1;
        let r2 = parametric_gain(&derive_params(&p).unwrap()).unwrap();
        assert!(rel(r2, 2.0 * r1) < 1e-12);
    }

    #[test]
    fn gain_sign_follows_resonant_sideband() {
        let mut p = PhysicalParams::cooling_benchmark();
        p.mode_gap = -p.omega_m();
        assert!(parametric_gain(&derive_params(&p).unwrap()).unwrap() > 0.0);
        p.detuning_00 = 1.0;
        assert!(matches!(parametric_gain(&derive_params(&p).unwrap()), Err(Error::NotCoolingConfiguration { .. })));
    }

    #[test]
    fn benchmark_effective_mode() {
        let d = bench();
        let e = effective_mode(&d, d.omega_m);
        assert!(rel(e.gamma_eff, 122_748.058_666_171_3) < 1e-9);
        assert!(rel(e.gamma_eff_rsb, 127_057.429_318_576_75) < 1e-9);
        assert!(rel(e.omega_eff, 6_271_685.696_599_241) < 1e-12);
        assert!(rel(e.omega_eff_rsb, 6_271_281.972_592_892) < 1e-12);
        let gap = (e.gamma_eff_rsb - e.gamma_eff) / e.gamma_eff;
        assert!((gap - 0.0351).abs() < 1e-3);
        assert!(e.high_q);
    }

    #[test]
    fn zero_mode_gap_leaves_oscillator_unchanged() {
        let d = bench();
        let e = effective_mode(&d, 0.0);
        assert_eq!(e.gamma_eff, d.gamma_m);
        assert_eq!(e.omega_eff, d.omega_m);
        assert_eq!(rp_response(d.omega_m, &d, 0.0), Complex::new(0.0, 0.0));
    }

    #[test]
    fn stokes_side_anti_damps() {
        let d = bench();
        let cool = effective_mode(&d, d.omega_m);
        let heat = effective_mode(&d, -d.omega_m);
        assert!(heat.gamma_eff < d.gamma_m);
        assert!(rel(heat.gamma_eff - d.gamma_m, -(cool.gamma_eff - d.gamma_m)) < 1e-12);
    }

    #[test]
    fn spring_coefficient_matches_effective_mode() {
        let d = bench();
        for delta in [d.omega_m, -d.omega_m, 0.3 * d.omega_m, 2.5 * d.omega_m] {
            let k = rp_response(d.omega_m, &d, delta);
            let e = effective_mode(&d, delta);
            assert!(rel(d.gamma_m - k.im, e.gamma_eff) < 1e-9);
            assert!(rel(d.omega_m + k.re / 2.0, e.omega_eff) < 1e-9);
        }
        // |K(ω_m)| at Δ = ω_m: 2G0²ā²ω_m / (γ1·√(4ω_m² + γ1²)).
        let k2 = d.g0 * d.g0 * d.a_bar * d.a_bar;
        let expected = 2.0 * k2 * d.omega_m / (d.gamma_1 * (4.0 * d.omega_m.powi(2) + d.gamma_1.powi(2)).sqrt());
        assert!(rel(rp_response(d.omega_m, &d, d.omega_m).norm(), expected) < 1e-12);
    }

    #[test]
    fn quantum_limit_values() {
        assert!((quantum_limit(0.2, 1.0) - 0.01).abs() < 1e-17);
        assert_eq!(quantum_limit(0.0, 1.0), 0.0);
        let d = bench();
        assert!(rel(quantum_limit(d.gamma_1, d.omega_m), 0.035_107_624_169_406_944) < 1e-12);
    }

    #[test]
    fn fdt_reduces_to_quantum_limit() {
        let n = fdt_occupation(1.0, 1.0, 0.2).unwrap();
        assert!((n.n_eff - 0.01).abs() < 1e-15);
        assert!(!n.heating);
        let d = bench();
        let n = fdt_occupation(d.omega_m, d.omega_m, d.gamma_1).unwrap();
        assert!(rel(n.n_eff, quantum_limit(d.gamma_1, d.omega_m)) < 1e-12);
    }

    #[test]
    fn fdt_heating_and_degenerate_cases() {
        let n = fdt_occupation(1.0, -1.0, 0.2).unwrap();
        assert!(n.heating);
        assert!(n.n_eff < 0.0);
        assert!(matches!(fdt_occupation(1.0, 0.0, 0.2), Err(Error::UndefinedOccupation)));
    }

    #[test]
    fn benchmark_final_occupation() {
        let r = final_occupation(&bench()).unwrap();
        assert!(rel(r.n_final, 0.447_266_297_653_515_17) < 1e-9);
        assert!(r.n_final >= r.n_quant);
        assert!(r.gain <= 0.0 && r.gamma_eff >= bench().gamma_m);

        let mut p = PhysicalParams::cooling_benchmark();
        p.overlap = 0.85;
        let r = final_occupation(&derive_params(&p).unwrap()).unwrap();
        assert!((r.n_final - 0.52).abs() < 1e-3);
    }

    #[test]
    fn final_occupation_limits() {
        let mut p = PhysicalParams::cooling_benchmark();
        p.temperature = 0.0;
        let d = derive_params(&p).unwrap();
        let r = final_occupation(&d).unwrap();
        assert_eq!(r.n_final, r.n_quant);

        let mut p = PhysicalParams::cooling_benchmark();
        p.power_00 = 1e9;
        let r = final_occupation(&derive_params(&p).unwrap()).unwrap();
        assert!(rel(r.n_final, r.n_quant) < 1e-6);
    }

    #[test]
    fn final_occupation_rejects_gain_above_threshold() {
        let mut p = PhysicalParams::cooling_benchmark();
        p.mode_gap = -p.omega_m();
        assert!(matches!(final_occupation(&derive_params(&p).unwrap()), Err(Error::GainInstability { .. })));
    }

    #[test]
    fn resolved_sideband_branch_converges() {
        let d0 = bench();
        for k in 0..20 {
            let ratio = 10f64.powf(-3.0 + 3.0 * k as f64 / 19.0);
            let mut d = d0;
            d.gamma_1 = ratio * d.omega_m;
            let e = effective_mode(&d, d.omega_m);
            let bound = 2.0 * ratio * ratio;
            assert!(rel(e.gamma_eff_rsb, e.gamma_eff) <= bound);
            assert!(rel(e.omega_eff_rsb, e.omega_eff) <= bound);
        }
    }

    proptest! {
        #[test]
        fn gain_forms_agree(
            mass in 1e-9f64..1e-3,
            length in 1e-3f64..1.0,
            freq in 1e4f64..1e8,
            q in 1e3f64..1e9,
            finesse in 1e2f64..1e6,
            power in 1e-4f64..10.0,
            overlap in 0.01f64..1.0,
            wavelength in 4e-7f64..2e-6,
        ) {
            let mut p = PhysicalParams::cooling_benchmark();
            p.mass = mass;
            p.cavity_length = length;
            p.mech_freq = freq;
            p.mech_q = q;
            p.finesse = finesse;
            p.power_00 = power;
            p.overlap = overlap;
            p.wavelength = wavelength;
            p.mode_gap = p.omega_m();
            prop_assume!(p.mode_gap < p.free_spectral_range());
            let f = gain_forms(&derive_params(&p).unwrap());
            prop_assert!(rel(f.coupling, f.power) < 1e-9);
            prop_assert!(rel(f.quality_factor, f.power) < 1e-9);
        }

        #[test]
        fn spring_coefficient_conjugation(omega in -1e7f64..1e7, delta in -1e7f64..1e7) {
            let d = bench();
            let a = rp_response(-omega, &d, delta);
            let b = rp_response(omega, &d, delta).conj();
            prop_assert!((a - b).norm() <= 1e-12 * a.norm().max(1e-300));
        }
    }
}
