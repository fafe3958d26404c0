//! Topological entanglement entropy of the cluster chain as the transverse
//! field grows, for several chain lengths.
//!
//! Run with `cargo run --release --example field_sweep [N...]` (default 6 9 12).

use spt_core::commands::{cmd_sweep, SweepConfig};
use spt_core::entropy::CutKind;
use spt_core::{Model, Result};

fn main() -> Result<()> {
    let sizes: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes = if sizes.is_empty() { vec![6, 9, 12] } else { sizes };
    for n in sizes {
        let config = SweepConfig {
            b_steps: 21,
            cuts: vec![CutKind::Tripartite],
            ..SweepConfig::new(Model::Cluster, n)
        };
        let rows = cmd_sweep(&config)?;
        println!("N = {n}");
        for r in &rows {
            let bar = "#".repeat((r.s_topo.max(0.0) * 20.0).round() as usize);
            println!("  B={:4.2}  S_topo={:6.4}  {bar}", r.b, r.s_topo);
        }
        // First grid point below half height, refined linearly.
        if let Some(w) = rows.windows(2).find(|w| w[0].s_topo >= 1.0 && w[1].s_topo < 1.0) {
            let t = (w[0].s_topo - 1.0) / (w[0].s_topo - w[1].s_topo);
            println!("  half height near B = {:.3}", w[0].b + t * (w[1].b - w[0].b));
        }
    }
    Ok(())
}
