// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;

use super::{run_point, Config, Quantity};
use crate::error::{Error, Result};
use crate::model::Param;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

/// One swept parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub param: Param,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub scale: Scale,
}

impl Axis {
    pub fn new(param: Param, start: f64, stop: f64, count: usize, scale: Scale) -> Result<Self> {
        let axis = Axis { param, start, stop, count, scale };
        axis.check()?;
        Ok(axis)
    }

    pub fn linear(param: Param, start: f64, stop: f64, count: usize) -> Result<Self> {
        Axis::new(param, start, stop, count, Scale::Linear)
    }

    pub fn log(param: Param, start: f64, stop: f64, count: usize) -> Result<Self> {
        Axis::new(param, start, stop, count, Scale::Log)
    }

    fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Usage(format!("axis `{}`: {m}", self.param)));
        if self.count < 2 {
            return bad(format!("count must be >= 2, got {}", self.count));
        }
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return bad(format!("need finite start < stop, got {}:{}", self.start, self.stop));
        }
        if self.scale == Scale::Log && self.start <= 0.0 {
            return bad("log scale needs start > 0".to_string());
        }
        Ok(())
    }

    /// Grid values; the endpoints are exact.
    pub fn values(&self) -> Vec<f64> {
        let n = self.count - 1;
        (0..=n)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == n {
                    return self.stop;
                }
                let t = i as f64 / n as f64;
                match self.scale {
                    Scale::Linear => self.start + (self.stop - self.start) * t,
                    Scale::Log => 10f64.powf(self.start.log10() + (self.stop.log10() - self.start.log10()) * t),
                }
            })
            .collect()
    }
}

/// Parses `name=start:stop:count[:log]`.
impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let usage = || Error::Usage(format!("bad sweep `{s}`: expected name=start:stop:count[:log]"));
        let (name, range) = s.split_once('=').ok_or_else(usage)?;
        let param: Param = name.trim().parse()?;
        let parts: Vec<&str> = range.split(':').map(str::trim).collect();
        let scale = match parts.len() {
            3 => Scale::Linear,
            4 if parts[3] == "log" => Scale::Log,
            4 if parts[3] == "lin" => Scale::Linear,
            _ => return Err(usage()),
        };
        let start = parts[0].parse().map_err(|_| usage())?;
        let stop = parts[1].parse().map_err(|_| usage())?;
        let count = parts[2].parse().map_err(|_| usage())?;
        Axis::new(param, start, stop, count, scale)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// One or two axes; the first is the outer loop.
    pub axes: Vec<Axis>,
    pub quantities: Vec<Quantity>,
    /// Destination for [`SweepSpec::emit`]; stdout when `None`.
    pub output: Option<PathBuf>,
}

impl SweepSpec {
    pub fn new(axes: Vec<Axis>, quantities: Vec<Quantity>) -> Result<Self> {
        let spec = SweepSpec { axes, quantities, output: None };
        spec.check()?;
        Ok(spec)
    }

    pub fn with_output(mut self, path: Option<PathBuf>) -> Self {
        self.output = path;
        self
    }

    /// Writes `text` to the output path, or to stdout.
    pub fn emit(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn check(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(Error::Usage(format!("a sweep needs one or two axes, got {}", self.axes.len())));
        }
        if self.axes.len() == 2 && self.axes[0].param == self.axes[1].param {
            return Err(Error::Usage(format!("parameter `{}` swept twice", self.axes[0].param)));
        }
        for a in &self.axes {
            a.check()?;
        }
        Ok(())
    }

    /// Grid points in row-major order, first axis outermost.
    pub fn points(&self) -> Vec<Vec<f64>> {
        let mut points: Vec<Vec<f64>> = vec![Vec::new()];
        for axis in &self.axes {
            let values = axis.values();
            points = points
                .into_iter()
                .flat_map(|prefix| {
                    values.iter().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(*v);
                        p
                    })
                })
                .collect();
        }
        points
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub coords: Vec<f64>,
    pub stable: bool,
    /// `None` for undefined cells, including every cell of an unstable point.
    pub values: Vec<Option<f64>>,
}

fn evaluate(spec: &SweepSpec, base: &Config, coords: Vec<f64>) -> Result<ResultRow> {
    let mut config = *base;
    for (axis, v) in spec.axes.iter().zip(&coords) {
        config.params.set(axis.param, *v);
    }
    let report = run_point(&config)?;
    let stable = report.stability.stable;
    let values = spec.quantities.iter().map(|q| if stable { q.value(&report) } else { None }).collect();
    Ok(ResultRow { coords, stable, values })
}

/// Evaluates the grid in parallel; rows come back in grid order.
pub fn run_sweep(spec: &SweepSpec, config: &Config) -> Result<Vec<ResultRow>> {
    spec.check()?;
    spec.points().into_par_iter().map(|c| evaluate(spec, config, c)).collect()
}

pub fn run_sweep_sequential(spec: &SweepSpec, config: &Config) -> Result<Vec<ResultRow>> {
    spec.check()?;
    spec.points().into_iter().map(|c| evaluate(spec, config, c)).collect()
}

/// CSV with a header row. Floats use the shortest representation that
/// round-trips; undefined cells are empty. `comments` become leading `# ` lines.
pub fn write_csv(spec: &SweepSpec, rows: &[ResultRow], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let header: Vec<&str> = spec
        .axes
        .iter()
        .map(|a| a.param.name())
        .chain(std::iter::once("stability"))
        .chain(spec.quantities.iter().map(|q| q.name()))
        .collect();
    let _ = writeln!(out, "{}", header.join(","));
    for row in rows {
        let mut cells: Vec<String> = row.coords.iter().map(|v| v.to_string()).collect();
        cells.push(row.stable.to_string());
        cells.extend(row.values.iter().map(|v| v.map(|x| x.to_string()).unwrap_or_default()));
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}
