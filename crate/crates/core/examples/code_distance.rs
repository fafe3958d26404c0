//! The open chains as classical codes: logical operators and distances.
//!
//! Run with `cargo run --example code_distance`.

use spt_core::commands::cmd_distance;
use spt_core::hamiltonian::{stabilizer_group, ModelSpec};
use spt_core::{Boundary, Model, PauliString, Result};

fn main() -> Result<()> {
    println!("{:>5} {:>4} {:>9} {:>8}", "model", "N", "distance", "floor");
    for model in [Model::Cluster, Model::Zxxz] {
        for n in model.min_qubits().max(6)..=15 {
            let r = cmd_distance(model, n, Boundary::Open)?;
            let d = r.classical_distance.map_or("-".into(), |d| d.to_string());
            println!("{:>5} {n:>4} {d:>9} {:>8}", model.name(), r.expected.unwrap_or(0));
        }
    }

    print!("\n{}", cmd_distance(Model::Cluster, 10, Boundary::Open)?);

    // A single Z on the first site commutes with every generator without
    // being one: the quantum distance is 1.
    let group = stabilizer_group(&ModelSpec::open(Model::Cluster, 10, 0.0)?)?;
    let z1 = PauliString::z_on(10, [0])?;
    println!(
        "\n{z1}: commutes with the code = {}, stabilizer = {}",
        group.centralizes(&z1)?,
        group.contains_up_to_sign(&z1)?
    );
    Ok(())
}
