// SPDX-License-Identifier: Apache-2.0

//! Shared oracles and generators for the integration tests.

#![allow(dead_code)]

use nalgebra::{Matrix6, SMatrix};
use rand::Rng;

use triomode::dynamics::{build_model, stability, DiffusionMode, LinearModel};
use triomode::model::{derive_params, PhysicalParams};

/// Stationary covariance as the time integral ∫₀^∞ e^{Mt} D e^{Mᵀt} dt.
///
/// The integral over one step h comes from Van Loan's block exponential, then
/// the horizon is doubled, V(2t) = V(t) + Φ(t) V(t) Φ(t)ᵀ with Φ(t) = e^{Mt},
/// until Φ has decayed to nothing. Inputs should be in units where ‖M‖ ~ 1.
pub fn lyapunov_by_integration(m: &Matrix6<f64>, d: &Matrix6<f64>) -> Matrix6<f64> {
    let h = 0.5;
    let mut block = SMatrix::<f64, 12, 12>::zeros();
    block.fixed_view_mut::<6, 6>(0, 0).copy_from(&(-m * h));
    block.fixed_view_mut::<6, 6>(0, 6).copy_from(&(d * h));
    block.fixed_view_mut::<6, 6>(6, 6).copy_from(&(m.transpose() * h));
    let e = block.exp();
    let phi_t: Matrix6<f64> = e.fixed_view::<6, 6>(6, 6).into_owned();
    let mut v: Matrix6<f64> = phi_t.transpose() * e.fixed_view::<6, 6>(0, 6);
    let mut phi = phi_t.transpose();

    for _ in 0..200 {
        v += phi * v * phi.transpose();
        v = (v + v.transpose()) * 0.5;
        phi *= phi;
        if phi.amax() < 1e-20 {
            break;
        }
    }
    v
}

/// Oracle covariance for a model, in physical units.
pub fn oracle_covariance(model: &LinearModel) -> Matrix6<f64> {
    lyapunov_by_integration(&(model.drift / model.scale), &(model.diffusion / model.scale))
}

fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// A random parameter point around the benchmark device; may be unstable.
pub fn random_params<R: Rng>(rng: &mut R) -> PhysicalParams {
    let mut p = PhysicalParams::cooling_benchmark();
    let w = p.omega_m();
    p.mass = log_uniform(rng, 1e-8, 1e-6);
    p.mech_q = log_uniform(rng, 1e3, 1e7);
    p.finesse = log_uniform(rng, 3e3, 1e5);
    p.overlap = rng.gen_range(0.3..=1.0);
    p.power_00 = log_uniform(rng, 1e-4, 1.0);
    p.power_01 = if rng.gen_bool(0.5) { log_uniform(rng, 1e-4, 1.0) } else { 0.0 };
    p.temperature = log_uniform(rng, 0.01, 300.0);
    p.mode_gap = w * rng.gen_range(-2.0..2.0);
    p.detuning_00 = if rng.gen_bool(0.5) { w * rng.gen_range(-1.0..1.0) } else { 0.0 };
    p
}

/// `n` random parameter points whose drift matrix is stable.
pub fn random_stable_params<R: Rng>(rng: &mut R, n: usize, mode: DiffusionMode) -> Vec<PhysicalParams> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = random_params(rng);
        let model = build_model(&derive_params(&p).unwrap(), mode);
        if stability(&model).unwrap().stable {
            out.push(p);
        }
    }
    out
}

pub fn rel_frobenius(a: &Matrix6<f64>, b: &Matrix6<f64>) -> f64 {
    (a - b).norm() / b.norm()
}
