// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use triomode::dynamics::DiffusionMode;
use triomode::model::{derive_params_with, DriveConvention};
use triomode::sweep::{self, Axis, Config, Quantity, Recipe, SweepSpec};
use triomode::{params_file, Error};

#[derive(Parser)]
#[command(name = "triomode", version, about = "Three-mode optoacoustic steady state, cooling and entanglement")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Parameter file (`key = value` per line).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Thermal noise: paper (k_BT/ħω_m, no zero-point term) | zero-point.
    #[arg(long = "d-mode", global = true, default_value = "paper")]
    d_mode: DiffusionMode,

    /// Steady-state quadrature normalisation: paper (q̄ = ā) | quadrature (q̄ = √2·ā).
    #[arg(long, global = true, default_value = "paper")]
    drive: DriveConvention,

    /// Exit with status 1 if any evaluated point is unstable.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the derived couplings, linewidths and occupations.
    Derive,
    /// Evaluate one parameter point.
    Point,
    /// Sweep one or two parameters and write CSV.
    Sweep {
        /// name=start:stop:count[:log]; at most two.
        #[arg(long = "sweep", required = true)]
        axes: Vec<Axis>,
        /// Comma-separated quantity names.
        #[arg(long, default_value = "en_0m,en_1m,en_01")]
        quantities: String,
    },
    /// Run a named preset: fig3 | fig4 | fig5 | cooling-benchmark.
    Recipe { name: Recipe },
}

struct Outcome {
    /// `None` once the command has written its own output.
    text: Option<String>,
    unstable: bool,
}

fn config(cli: &Cli) -> Result<Config, Error> {
    let path = cli.config.as_ref().ok_or_else(|| Error::Usage("--config FILE is required".into()))?;
    Ok(Config { params: params_file::read(path)?, diffusion: cli.d_mode, drive: cli.drive })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Derive => {
            let c = config(cli)?;
            let d = derive_params_with(&c.params, c.drive)?;
            Ok(Outcome { text: Some(sweep::format_derived(&d)), unstable: false })
        }
        Command::Point => {
            let r = sweep::run_point(&config(cli)?)?;
            let mut text = sweep::format_report(&r);
            if let Some(v) = r.covariance {
                let m = v.matrix();
                for i in 0..6 {
                    let row: Vec<String> = (0..6).map(|j| m[(i, j)].to_string()).collect();
                    let _ = writeln!(text, "covariance[{i}] = {}", row.join(","));
                }
            }
            Ok(Outcome { text: Some(text), unstable: !r.stability.stable })
        }
        Command::Sweep { axes, quantities } => {
            let c = config(cli)?;
            let spec = SweepSpec::new(axes.clone(), Quantity::parse_list(quantities)?)?.with_output(cli.out.clone());
            let rows = sweep::run_sweep(&spec, &c)?;
            spec.emit(&sweep::write_csv(&spec, &rows, &[]))?;
            Ok(Outcome { text: None, unstable: rows.iter().any(|r| !r.stable) })
        }
        Command::Recipe { name } => {
            let out = name.run(cli.d_mode, cli.drive)?;
            Ok(Outcome { text: Some(out.text), unstable: out.unstable_points > 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|o| {
        match (&o.text, &cli.out) {
            (Some(text), Some(path)) => std::fs::write(path, text)?,
            (Some(text), None) => print!("{text}"),
            (None, _) => {}
        }
        Ok(o)
    });
    match outcome {
        Ok(o) if cli.strict && o.unstable => {
            eprintln!("triomode: unstable operating point");
            ExitCode::from(1)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("triomode: {e}");
            ExitCode::from(2)
        }
    }
}
