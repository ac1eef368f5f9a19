// SPDX-License-Identifier: Apache-2.0

//! How each pairwise entanglement survives heating, at its own best pump powers.
//!
//! ```text
//! cargo run --release --example temperature_robustness
//! ```

use triomode::sweep::{run_point, temperature_scan_optimal_powers, Config, Recipe};

fn main() -> triomode::Result<()> {
    let base = Config::new(Recipe::TemperatureScan.base_params());
    for opt in temperature_scan_optimal_powers(&base)? {
        let mut c = base;
        c.params.power_00 = opt.power_00;
        c.params.power_01 = opt.power_01;
        print!("{:<6} ({:.2} W, {:.2} W):", opt.quantity.name(), opt.power_00, opt.power_01);
        for t in [0.1, 1.0, 4.0, 10.0, 20.0, 50.0, 80.0] {
            c.params.temperature = t;
            let e = opt.quantity.value(&run_point(&c)?).unwrap_or(f64::NAN);
            print!("  {t} K {e:.4}");
        }
        println!();
    }
    // Full table with the chosen powers in its header comments:
    //   triomode recipe fig5
    Ok(())
}
