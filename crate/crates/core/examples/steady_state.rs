// SPDX-License-Identifier: Apache-2.0

// Drift matrix spectrum and stationary covariance of one operating point.
//
// ```text
// cargo run --example steady_state
// ```

use triomode::dynamics::{build_model, stability, steady_covariance, DiffusionMode};
use triomode::model::{derive_params, PhysicalParams};

pub fn run_example() -> triomode::Result<()> {
    let mut p = PhysicalParams::cooling_benchmark();
    p.power_00 = 1.0;
    p.power_01 = 0.5;
    let d = derive_params(&p)?;

    for mode in [DiffusionMode::Thermal, DiffusionMode::ZeroPoint] {
        let model = build_model(&d, mode);
        let s = stability(&model)?;
        println!("{mode:?} diffusion, stable = {}", s.stable);
        for z in &s.eigenvalues {
            println!("  λ = {:+.6e} {:+.6e}i", z.re, z.im);
        }
        let v = steady_covariance(&model)?;
        println!("  V =");
        for i in 0..6 {
            let row: Vec<String> = (0..6).map(|j| format!("{:+.4e}", v.matrix()[(i, j)])).collect();
            println!("    {}", row.join(" "));
        }
        println!("  acoustic occupation {:.4}", v.acoustic_occupation());
        println!("  physical {} (margin {:.3e})", v.is_physical(), v.physicality_margin());
    }
    Ok(())
}

fn main() -> triomode::Result<()> {
    run_example()
}
