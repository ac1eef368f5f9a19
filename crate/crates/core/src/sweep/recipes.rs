// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::str::FromStr;

use super::{run_point, run_sweep, write_csv, Axis, Config, Quantity, SweepSpec};
use crate::dynamics::DiffusionMode;
use crate::error::{Error, Result};
use crate::model::{DriveConvention, Param, PhysicalParams};

/// Named presets. The CLI names are `fig3`, `fig4`, `fig5` and `cooling-benchmark`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    /// Pairwise log-negativities over a 50×50 grid of both pump powers, 0 to 5 W.
    PowerMap,
    /// Acoustic/TEM01 log-negativity versus mode gap, 0.2 to 2 ω_m at 4.5 W.
    ModeGapScan,
    /// Pairwise log-negativities versus temperature, 0.1 to 100 K, each curve
    /// at the powers that maximise it at 4 K.
    TemperatureScan,
    /// Cooling figures of merit at the benchmark point.
    CoolingBenchmark,
}

const NAMES: [(&str, Recipe); 4] = [
    ("fig3", Recipe::PowerMap),
    ("fig4", Recipe::ModeGapScan),
    ("fig5", Recipe::TemperatureScan),
    ("cooling-benchmark", Recipe::CoolingBenchmark),
];

pub fn recipes() -> impl Iterator<Item = &'static str> {
    NAMES.iter().map(|(n, _)| *n)
}

pub fn recipe(name: &str) -> Result<Recipe> {
    name.parse()
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NAMES.iter().find(|(n, _)| *n == s).map(|(_, r)| *r).ok_or_else(|| Error::UnknownRecipe(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecipeOutput {
    pub text: String,
    pub unstable_points: usize,
}

/// The power pair that maximises one log-negativity on the power grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveOptimum {
    pub quantity: Quantity,
    pub power_00: f64,
    pub power_01: f64,
    pub value: f64,
}

const PAIRS: [Quantity; 3] = [Quantity::En0m, Quantity::En1m, Quantity::En01];
const REFERENCE_TEMPERATURE: f64 = 4.0;

fn power_grid() -> Result<Vec<Axis>> {
    Ok(vec![Axis::linear(Param::Power00, 0.0, 5.0, 50)?, Axis::linear(Param::Power01, 0.0, 5.0, 50)?])
}

impl Recipe {
    pub fn name(self) -> &'static str {
        NAMES.iter().find(|(_, r)| *r == self).map(|(n, _)| *n).unwrap()
    }

    pub fn base_params(self) -> PhysicalParams {
        let mut p = PhysicalParams::cooling_benchmark();
        if self == Recipe::ModeGapScan {
            p.power_00 = 4.5;
            p.power_01 = 0.0;
        }
        p
    }

    /// The grid a plain sweep recipe evaluates; `None` for the composite ones.
    pub fn sweep_spec(self) -> Result<Option<SweepSpec>> {
        let w = self.base_params().omega_m();
        match self {
            Recipe::PowerMap => {
                let mut q = PAIRS.to_vec();
                q.push(Quantity::TripartiteMinSymplectic);
                SweepSpec::new(power_grid()?, q).map(Some)
            }
            Recipe::ModeGapScan => SweepSpec::new(
                vec![Axis::linear(Param::ModeGap, 0.2 * w, 2.0 * w, 100)?],
                vec![Quantity::En1m, Quantity::Gain, Quantity::MaxRealPart],
            )
            .map(Some),
            Recipe::TemperatureScan | Recipe::CoolingBenchmark => Ok(None),
        }
    }

    pub fn run(self, diffusion: DiffusionMode, drive: DriveConvention) -> Result<RecipeOutput> {
        let config = Config { params: self.base_params(), diffusion, drive };
        match self {
            Recipe::PowerMap | Recipe::ModeGapScan => {
                let spec = self.sweep_spec()?.unwrap();
                let rows = run_sweep(&spec, &config)?;
                Ok(RecipeOutput {
                    unstable_points: rows.iter().filter(|r| !r.stable).count(),
                    text: write_csv(&spec, &rows, &[]),
                })
            }
            Recipe::TemperatureScan => temperature_scan(&config),
            Recipe::CoolingBenchmark => {
                let r = run_point(&config)?;
                let mut text = String::new();
                for q in [
                    Quantity::Gain,
                    Quantity::GammaEff,
                    Quantity::GammaEffRsb,
                    Quantity::OmegaEff,
                    Quantity::OmegaEffRsb,
                    Quantity::NQuant,
                    Quantity::NFinal,
                ] {
                    let v = q.value(&r).map(|v| v.to_string()).unwrap_or_default();
                    let _ = writeln!(text, "{q} = {v}");
                }
                Ok(RecipeOutput { text, unstable_points: usize::from(!r.stability.stable) })
            }
        }
    }
}

/// Grid search over both pump powers at 4 K; ties go to the first point in
/// row-major order.
pub fn temperature_scan_optimal_powers(base: &Config) -> Result<[CurveOptimum; 3]> {
    let mut config = *base;
    config.params.temperature = REFERENCE_TEMPERATURE;
    let spec = SweepSpec::new(power_grid()?, PAIRS.to_vec())?;
    let rows = run_sweep(&spec, &config)?;

    let mut best =
        PAIRS.map(|quantity| CurveOptimum { quantity, power_00: 0.0, power_01: 0.0, value: f64::NEG_INFINITY });
    for row in &rows {
        for (b, v) in best.iter_mut().zip(&row.values) {
            if let Some(v) = *v {
                if v > b.value {
                    *b = CurveOptimum {
                        quantity: b.quantity,
                        power_00: row.coords[0],
                        power_01: row.coords[1],
                        value: v,
                    };
                }
            }
        }
    }
    Ok(best)
}

fn temperature_scan(base: &Config) -> Result<RecipeOutput> {
    let optima = temperature_scan_optimal_powers(base)?;
    let axis = Axis::log(Param::Temperature, 0.1, 100.0, 61)?;

    let mut columns = Vec::new();
    for opt in &optima {
        let mut config = *base;
        config.params.power_00 = opt.power_00;
        config.params.power_01 = opt.power_01;
        let spec = SweepSpec::new(vec![axis], vec![opt.quantity])?;
        columns.push(run_sweep(&spec, &config)?);
    }

    let mut text = String::new();
    for opt in &optima {
        let _ = writeln!(
            text,
            "# {}: power_00 = {}, power_01 = {} (value at {} K: {})",
            opt.quantity, opt.power_00, opt.power_01, REFERENCE_TEMPERATURE, opt.value
        );
    }
    let _ = writeln!(text, "temperature,stability,{},{},{}", PAIRS[0], PAIRS[1], PAIRS[2]);
    let mut unstable_points = 0;
    for (i, t) in axis.values().into_iter().enumerate() {
        let stable = columns.iter().all(|c| c[i].stable);
        unstable_points += usize::from(!stable);
        let cells: Vec<String> =
            columns.iter().map(|c| c[i].values[0].map(|v| v.to_string()).unwrap_or_default()).collect();
        let _ = writeln!(text, "{t},{stable},{}", cells.join(","));
    }
    Ok(RecipeOutput { text, unstable_points })
}
