//! Ground states restricted to a symmetry sector.
//!
//! Run with `cargo run --release --example symmetric_ground_state`.

use spt_core::hamiltonian::{build, sector_generators, symmetry_generators};
use spt_core::spectra::{lowest_eigenpairs, symmetric_ground_state};
use spt_core::transforms::cluster_state;
use spt_core::{Boundary, Model, ModelSpec, Result, Sector, SolverOptions};

fn main() -> Result<()> {
    let opts = SolverOptions::default();

    // The symmetric ground state of the Ising-like chain is an equal
    // superposition of the four domain patterns.
    let spec = ModelSpec::open(Model::SymmetryBreaking, 4, 0.0)?;
    let g = symmetric_ground_state(&build(&spec)?, &symmetry_generators(&spec)?, &opts)?;
    println!("syb N=4 symmetric ground state (global phase removed):");
    let amps = g.state.amplitudes();
    let phase = amps.iter().find(|a| a.norm() > 1e-9).map(|a| a / a.norm()).unwrap_or_default();
    for (index, amp) in amps.iter().enumerate() {
        if amp.norm() > 1e-9 {
            // Qubit 0 is the rightmost digit.
            println!("  |{index:04b}> {:+.6}", (amp / phase).re);
        }
    }

    // At zero field the open cluster chain's symmetric state is the ring's.
    let spec = ModelSpec::open(Model::Cluster, 10, 0.0)?;
    let g = symmetric_ground_state(&build(&spec)?, &symmetry_generators(&spec)?, &opts)?;
    let f = g.state.fidelity(&cluster_state(10, Boundary::Periodic)?)?;
    println!("\nclu N=10: fidelity with the periodic cluster state = {f:.12}");

    // With a field the sector matters: the field picks X̄ = (−1)^{N/2}.
    println!("\nclu N=10, B=0.8:");
    let spec = ModelSpec::open(Model::Cluster, 10, 0.8)?;
    let h = build(&spec)?;
    let e0 = lowest_eigenpairs(&h, 1, &opts)?.ground_energy();
    for sector in [Sector::Plus, Sector::Field] {
        let syms = sector_generators(&spec, sector)?;
        let g = symmetric_ground_state(&h, &syms, &opts)?;
        println!("  {sector:>5} sector {} : E = {:.10} (global {e0:.10})", syms.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "), g.energy);
    }
    Ok(())
}
