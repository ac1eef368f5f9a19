// SPDX-License-Identifier: Apache-2.0

// Reading, editing and writing parameter files, then evaluating the point.
//
// ```text
// cargo run --example parameter_file [path]
// ```

use triomode::model::PhysicalParams;
use triomode::params_file;
use triomode::sweep::{format_report, run_point, Config};

const DEVICE: &str = "\
# 0.1 mg membrane in a 2 cm cavity
mass          = 1e-7
cavity_length = 0.02
mech_freq     = 1e6
mech_q        = 1e7
finesse       = 1e4
power_00      = 0.05     # W
power_01      = 0
temperature   = 4        # K
mode_gap      = 6283185.307179586
detuning_00   = 0
";

pub fn run_example() -> triomode::Result<()> {
    let p = match std::env::args().nth(1) {
        Some(path) => params_file::read(path)?,
        None => params_file::parse(DEVICE)?,
    };
    println!("wavelength defaults to {} m, overlap to {}", p.wavelength, p.overlap);
    assert_eq!(p, PhysicalParams::cooling_benchmark());

    match params_file::parse("mass = 1e-7\nmech_freq = fast\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let mut warmer = p;
    warmer.temperature = 77.0;
    print!("{}", params_file::render(&warmer));
    print!("{}", format_report(&run_point(&Config::new(warmer))?));
    Ok(())
}

fn main() -> triomode::Result<()> {
    run_example()
}
