//! Bond states on a two-qubit-per-site chain and the onsite circuit that
//! maps them to the cluster state and to a product state.
//!
//! Run with `cargo run --example isometric_forms`.

use spt_core::entropy::region_entropy;
use spt_core::transforms::{apply_circuit, build_psi_a, build_psi_b, cluster_state, onsite_circuit, SiteChain};
use spt_core::{Boundary, Result, StateVector};

fn main() -> Result<()> {
    for sites in [4, 5, 6] {
        let chain = SiteChain::new(sites, Boundary::Periodic)?;
        let u = onsite_circuit(&chain)?;
        let a = build_psi_a(&chain)?;
        let b = build_psi_b(&chain)?;
        let first_site = [chain.left(0), chain.right(0)];
        println!(
            "{sites} sites: S(site 1) = {:.3} for inter-site bonds, {:.3} for onsite bonds",
            region_entropy(&a, &first_site)?,
            region_entropy(&b, &first_site)?
        );
        let fa = apply_circuit(&a, &u)?.fidelity(&cluster_state(2 * sites, Boundary::Periodic)?)?;
        let fb = apply_circuit(&b, &u)?.fidelity(&StateVector::plus(2 * sites)?)?;
        println!("  U|psi_a> vs cluster state: fidelity {fa:.15}");
        println!("  U|psi_b> vs |+...+>:       fidelity {fb:.15}");
    }
    Ok(())
}
