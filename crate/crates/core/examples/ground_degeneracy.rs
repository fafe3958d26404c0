//! Zero-field ground-space degeneracy from the Lanczos solver, checked
//! against dense diagonalization.
//!
//! Run with `cargo run --release --example ground_degeneracy`.

use spt_core::hamiltonian::build;
use spt_core::spectra::{dense_spectrum, lowest_eigenpairs};
use spt_core::{Boundary, Model, ModelSpec, Result, SolverOptions};

fn main() -> Result<()> {
    let opts = SolverOptions::default();
    let cases = [
        (Model::Cluster, 8, Boundary::Open),
        (Model::Cluster, 12, Boundary::Open),
        (Model::SymmetryBreaking, 10, Boundary::Open),
        (Model::Zxxz, 9, Boundary::Open),
        (Model::Zxxz, 12, Boundary::Open),
        (Model::Cluster, 10, Boundary::Periodic),
    ];
    for (model, n, boundary) in cases {
        let h = build(&ModelSpec::new(model, n, 0.0, boundary)?)?;
        let s = lowest_eigenpairs(&h, 10, &opts)?;
        let gap = s.eigenvalues[s.degeneracy] - s.ground_energy();
        println!(
            "{model:>4} N={n:<2} {boundary:<8} E0 = {:>8.4}  degeneracy {}  gap {gap:.4}",
            s.ground_energy(),
            s.degeneracy
        );
    }

    let h = build(&ModelSpec::open(Model::Zxxz, 8, 0.5)?)?;
    let lanczos = lowest_eigenpairs(&h, 6, &opts)?;
    let dense = dense_spectrum(&h)?;
    let worst = lanczos
        .eigenvalues
        .iter()
        .zip(&dense.eigenvalues)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("\nzxxz N=8 B=0.5: six lowest levels, Lanczos vs dense max deviation {worst:.1e}");
    Ok(())
}
