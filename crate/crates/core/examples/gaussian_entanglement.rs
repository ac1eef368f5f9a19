// SPDX-License-Identifier: Apache-2.0

// Gaussian-state toolkit on a two-mode squeezed vacuum and on a cavity steady state.
//
// ```text
// cargo run --example gaussian_entanglement
// ```

use triomode::dynamics::{build_model, steady_covariance, DiffusionMode};
use triomode::entanglement::{
    log_negativity, min_pt_symplectic_eigenvalue, pair_log_negativity, partial_transpose, symplectic_eigenvalues,
    tripartite_ppt, two_mode_squeezed, ModePair,
};
use triomode::model::{derive_params, PhysicalParams};

pub fn run_example() -> triomode::Result<()> {
    for r in [0.1, 1.0, 3.0] {
        let v = two_mode_squeezed(r);
        println!(
            "squeezing r = {r}: σ₋ = {:.6e}, E_N = {:.9} (2r = {})",
            min_pt_symplectic_eigenvalue(&v)?,
            log_negativity(&v)?,
            2.0 * r
        );
    }
    let v = two_mode_squeezed(1.0);
    let flipped = partial_transpose(&v, 1)?;
    println!("p-p correlation {:+.4}, after partial transpose {:+.4}", v[(1, 3)], flipped[(1, 3)]);

    let mut p = PhysicalParams::cooling_benchmark();
    p.power_00 = 2.0;
    p.power_01 = 2.0;
    let v = steady_covariance(&build_model(&derive_params(&p)?, DiffusionMode::Thermal))?;
    println!("steady state at 2 W + 2 W, 4 K");
    println!("  symplectic spectrum {:?}", symplectic_eigenvalues(v.matrix()));
    for (name, pair) in [
        ("TEM00/acoustic", ModePair::TEM00_ACOUSTIC),
        ("TEM01/acoustic", ModePair::TEM01_ACOUSTIC),
        ("TEM00/TEM01", ModePair::OPTICAL),
    ] {
        println!("  E_N {name:<15} {:.6}", pair_log_negativity(&v, pair)?);
    }
    let t = tripartite_ppt(&v)?;
    for split in [t.acoustic, t.tem00, t.tem01] {
        println!(
            "  {:?} | rest: min PT symplectic {:.6}, entangled {}",
            split.mode, split.min_symplectic, split.entangled
        );
    }
    Ok(())
}

fn main() -> triomode::Result<()> {
    run_example()
}
