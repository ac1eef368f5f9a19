// SPDX-License-Identifier: Apache-2.0

// A hand-built two-axis sweep: mode gap against TEM00 power, CSV on stdout.
//
// ```text
// cargo run --release --example custom_sweep > sweep.csv
// ```

use triomode::dynamics::DiffusionMode;
use triomode::model::{Param, PhysicalParams};
use triomode::sweep::{run_sweep, write_csv, Axis, Config, Quantity, SweepSpec};

pub fn run_example() -> triomode::Result<()> {
    let p = PhysicalParams::cooling_benchmark();
    let w = p.omega_m();
    let spec = SweepSpec::new(
        vec![Axis::linear(Param::ModeGap, -1.5 * w, 1.5 * w, 7)?, "power_00=0.001:1:4:log".parse()?],
        Quantity::parse_list("gain,max_real_part,n_acoustic,en_0m,en_1m")?,
    )?;
    let config = Config::new(p).with_diffusion(DiffusionMode::ZeroPoint);
    let rows = run_sweep(&spec, &config)?;
    let unstable = rows.iter().filter(|r| !r.stable).count();
    print!("{}", write_csv(&spec, &rows, &[format!("{unstable} of {} points unstable", rows.len())]));
    Ok(())
}

fn main() -> triomode::Result<()> {
    run_example()
}
