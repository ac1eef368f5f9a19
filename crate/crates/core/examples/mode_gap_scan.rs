// SPDX-License-Identifier: Apache-2.0

//! Acoustic/TEM01 entanglement against the optical mode gap at 4.5 W.
//!
//! ```text
//! cargo run --release --example mode_gap_scan
//! ```

use triomode::sweep::{run_sweep, Config, Recipe};

fn main() -> triomode::Result<()> {
    let recipe = Recipe::ModeGapScan;
    let spec = recipe.sweep_spec()?.expect("grid recipe");
    let params = recipe.base_params();
    let rows = run_sweep(&spec, &Config::new(params))?;

    let w = params.omega_m();
    let mut peak = (0.0, f64::NEG_INFINITY);
    for r in &rows {
        let gap = r.coords[0] / w;
        match r.values[0] {
            Some(e) => {
                println!("{gap:6.3} ω_m  E_N = {e:.4}  {}", "#".repeat((e * 100.0) as usize));
                if e > peak.1 {
                    peak = (gap, e);
                }
            }
            None => println!("{gap:6.3} ω_m  unstable"),
        }
    }
    println!("peak E_N = {:.4} at mode gap {:.3} ω_m", peak.1, peak.0);
    Ok(())
}
