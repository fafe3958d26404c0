//! Pauli-string arithmetic and Clifford conjugation.
//!
//! Run with `cargo run --example pauli_algebra`.

use spt_core::transforms::{onsite_circuit, SiteChain};
use spt_core::{Boundary, PauliString, Result};

fn main() -> Result<()> {
    let x: PauliString = "X".parse()?;
    let z: PauliString = "Z".parse()?;
    println!("X * Z = {}", x.multiply(&z)?);
    println!("Z * X = {}", z.multiply(&x)?);

    let a: PauliString = "ZXZI".parse()?;
    let b: PauliString = "IZXZ".parse()?;
    let c: PauliString = "IXII".parse()?;
    println!("{a} and {b} commute: {}", a.commutes(&b)?);
    println!("{a} and {c} commute: {}", a.commutes(&c)?);

    // Three sites of two qubits each, ring closed.
    let chain = SiteChain::new(3, Boundary::Periodic)?;
    let n = chain.n_qubits();
    let u = onsite_circuit(&chain)?;
    println!("\nonsite circuit: {} gates on {n} qubits", u.gates().len());
    for i in 0..chain.n_sites() {
        let j = (i + 1) % chain.n_sites();
        let xx = PauliString::x_on(n, [chain.right(i), chain.left(j)])?;
        let zz = PauliString::z_on(n, [chain.right(i), chain.left(j)])?;
        println!("{xx} -> {}", xx.conjugate(&u)?);
        println!("{zz} -> {}", zz.conjugate(&u)?);
    }
    Ok(())
}
