// SPDX-License-Identifier: Apache-2.0

// Sideband cooling of the 1 MHz acoustic mode at 4 K.
//
// ```text
// cargo run --example cooling_benchmark
// ```

use triomode::cooling::{final_occupation, gain_forms};
use triomode::model::{derive_params, PhysicalParams};

pub fn run_example() -> triomode::Result<()> {
    let p = PhysicalParams::cooling_benchmark();
    let d = derive_params(&p)?;
    println!("coupling G0          {:.6} 1/s", d.g0);
    println!("intracavity a_bar    {:.6e}", d.a_bar);
    println!("TEM01 half-linewidth {:.6e} rad/s ({:.3} ω_m)", d.gamma_1, d.gamma_1 / d.omega_m);

    let forms = gain_forms(&d);
    println!("gain, three ways     {:.6e} / {:.6e} / {:.6e}", forms.coupling, forms.power, forms.quality_factor);

    let r = final_occupation(&d)?;
    println!("gain                 {:.6e}", r.gain);
    println!("γ'_m (full, rsb)     {:.6e}, {:.6e} rad/s", r.gamma_eff, r.gamma_eff_rsb);
    println!("ω'_m (full, rsb)     {:.6e}, {:.6e} rad/s", r.omega_eff, r.omega_eff_rsb);
    println!("thermal n_th         {:.3}", d.n_th);
    println!("quantum limit        {:.6}", r.n_quant);
    println!("final occupation     {:.6}", r.n_final);

    let mut partial = p;
    partial.overlap = 0.85;
    println!("final occupation, overlap 0.85: {:.6}", final_occupation(&derive_params(&partial)?)?.n_final);
    Ok(())
}

fn main() -> triomode::Result<()> {
    run_example()
}
