// SPDX-License-Identifier: Apache-2.0

//! Stationary quantum state, cooling performance and tripartite entanglement
//! of a three-mode optoacoustic cavity: two transverse optical modes (TEM00,
//! TEM01) coupled to one acoustic mode by radiation pressure.
//!
//! The pipeline is [`model`] → [`dynamics`] → [`entanglement`], with the
//! analytic formulas in [`cooling`] and batch evaluation in [`sweep`].

pub mod constants;
pub mod cooling;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod model;
pub mod params_file;
pub mod sweep;

pub use error::{Error, Result};
