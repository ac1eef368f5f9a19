// SPDX-License-Identifier: Apache-2.0

//! Plain-text parameter files.
//!
//! One `key = value` per line, keys named exactly as the [`PhysicalParams`]
//! fields, values in SI units. `#` starts a comment anywhere on a line.
//!
//! ```text
//! # cooling benchmark
//! mass          = 1e-7
//! cavity_length = 0.02
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{Param, PhysicalParams};

pub fn parse(text: &str) -> Result<PhysicalParams> {
    let mut values: [Option<f64>; Param::ALL.len()] = [None; Param::ALL.len()];

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| Error::Config { line, message: format!("expected `key = value`, got `{content}`") })?;
        let key = key.trim();
        let param =
            key.parse::<Param>().map_err(|_| Error::Config { line, message: format!("unknown key `{key}`") })?;
        let value = value.trim();
        let parsed: f64 = value
            .parse()
            .map_err(|_| Error::Config { line, message: format!("`{key}`: cannot parse `{value}` as a number") })?;
        let slot = &mut values[Param::ALL.iter().position(|p| *p == param).unwrap()];
        if slot.is_some() {
            return Err(Error::Config { line, message: format!("duplicate key `{key}`") });
        }
        *slot = Some(parsed);
    }

    let get = |p: Param| -> Result<f64> {
        let i = Param::ALL.iter().position(|q| *q == p).unwrap();
        values[i].or(p.default_value()).ok_or(Error::MissingKey(p.name()))
    };
    let opt = |p: Param| values[Param::ALL.iter().position(|q| *q == p).unwrap()];

    Ok(PhysicalParams {
        mass: get(Param::Mass)?,
        cavity_length: get(Param::CavityLength)?,
        mech_freq: get(Param::MechFreq)?,
        mech_q: get(Param::MechQ)?,
        finesse: get(Param::Finesse)?,
        wavelength: get(Param::Wavelength)?,
        overlap: get(Param::Overlap)?,
        power_00: get(Param::Power00)?,
        power_01: get(Param::Power01)?,
        temperature: get(Param::Temperature)?,
        mode_gap: get(Param::ModeGap)?,
        detuning_00: get(Param::Detuning00)?,
        gamma_00: opt(Param::Gamma00),
        gamma_01: opt(Param::Gamma01),
    })
}

pub fn read(path: impl AsRef<Path>) -> Result<PhysicalParams> {
    parse(&std::fs::read_to_string(path)?)
}

/// Renders `p` in the parameter-file format; `parse(&render(p)) == p`.
pub fn render(p: &PhysicalParams) -> String {
    let mut out = String::new();
    for param in Param::ALL {
        if let Some(v) = p.get(param) {
            let _ = writeln!(out, "{} = {v:?}", param.name());
        }
    }
    out
}
