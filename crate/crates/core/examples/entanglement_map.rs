// SPDX-License-Identifier: Apache-2.0

//! Pairwise log-negativities over both pump powers (50×50 grid, 0 to 5 W).
//!
//! ```text
//! cargo run --release --example entanglement_map [out.csv]
//! ```

use triomode::dynamics::DiffusionMode;
use triomode::model::DriveConvention;
use triomode::sweep::{run_sweep, write_csv, Config, Recipe};

fn main() -> triomode::Result<()> {
    let recipe = Recipe::PowerMap;
    let spec = recipe.sweep_spec()?.expect("grid recipe");
    let config = Config::new(recipe.base_params());
    let rows = run_sweep(&spec, &config)?;

    for (k, q) in spec.quantities.iter().enumerate().take(3) {
        let best = rows
            .iter()
            .filter_map(|r| r.values[k].map(|v| (v, r.coords[0], r.coords[1])))
            .fold((f64::NEG_INFINITY, 0.0, 0.0), |a, b| if b.0 > a.0 { b } else { a });
        eprintln!("max {q}: {:.4} at power_00 = {:.3} W, power_01 = {:.3} W", best.0, best.1, best.2);
    }

    let csv = write_csv(&spec, &rows, &[]);
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    // The same table, through the preset runner.
    let again = recipe.run(DiffusionMode::Thermal, DriveConvention::Amplitude)?;
    assert_eq!(again.text, write_csv(&spec, &rows, &[]));
    Ok(())
}
