//! Quantized topological entanglement entropies at zero field, with the
//! stabilizer rank formula as an exact reference.
//!
//! Run with `cargo run --release --example topo_entropy`.

use spt_core::entropy::{stabilizer_topo_entropy, topo_entropy, CutKind, CutLayout};
use spt_core::hamiltonian::{build, symmetric_state_group, symmetry_generators};
use spt_core::spectra::symmetric_ground_state;
use spt_core::{Model, ModelSpec, Result, SolverOptions};

fn main() -> Result<()> {
    let n = 12;
    for model in Model::ALL {
        let spec = ModelSpec::open(model, n, 0.0)?;
        let state = symmetric_ground_state(&build(&spec)?, &symmetry_generators(&spec)?, &SolverOptions::default())?.state;
        let group = symmetric_state_group(&spec)?;
        for kind in [CutKind::Tripartite, CutKind::Quadripartite] {
            let layout = CutLayout::equal(n, kind)?;
            let r = topo_entropy(&state, &layout)?;
            let exact = stabilizer_topo_entropy(&group, &layout)?;
            println!(
                "{model:>4} {kind}: S_topo = {:.9} (rank formula {})  [{layout}]",
                r.s_topo, exact.s_topo
            );
        }
    }

    let spec = ModelSpec::open(Model::Zxxz, 6, 0.0)?;
    let group = symmetric_state_group(&spec)?;
    let r = stabilizer_topo_entropy(&group, &CutLayout::equal(6, CutKind::Tripartite)?)?;
    println!("\nzxxz N=6 t: S_topo = {} (blocks of two qubits cap it below 3)", r.s_topo);
    Ok(())
}
