//! Acceptance criteria, one line per criterion. Exits 1 if any fails.

use std::process::ExitCode;
use std::time::Instant;

use spt_core::commands::{cmd_sweep, SweepConfig, SweepRow};
use spt_core::entropy::{region_entropy, stabilizer_topo_entropy, topo_entropy, CutKind, CutLayout};
use spt_core::hamiltonian::{build, sector_generators, stabilizer_group, symmetric_state_group, symmetry_generators};
use spt_core::spectra::{dense_spectrum, lowest_eigenpairs, symmetric_ground_state};
use spt_core::transforms::{apply_circuit, build_psi_a, build_psi_b, cluster_state, onsite_circuit, SiteChain};
use spt_core::{Boundary, Model, ModelSpec, PauliString, Sector, SolverOptions, StabilizerGroup, StateVector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn degeneracy() -> Outcome {
    let start = Instant::now();
    let opts = SolverOptions::default();
    let mut found = Vec::new();
    let mut ok = true;
    for (model, n, want) in [
        (Model::Cluster, 8, 4),
        (Model::Cluster, 10, 4),
        (Model::Cluster, 12, 4),
        (Model::Zxxz, 9, 8),
        (Model::Zxxz, 12, 8),
    ] {
        let h = build(&ModelSpec::open(model, n, 0.0).unwrap()).unwrap();
        // Two more levels than the expected multiplet exposes the gap.
        let s = lowest_eigenpairs(&h, want + 2, &opts).unwrap();
        let gap = s.eigenvalues[want] - s.eigenvalues[want - 1];
        ok &= s.converged && s.degeneracy == want && gap > 1e-3;
        found.push(format!("{model} N={n}: {}-fold, gap {gap:.3}", s.degeneracy));
    }
    let secs = start.elapsed().as_secs_f64();
    check(ok && secs < 10.0, format!("{}; {secs:.2} s", found.join(", ")))
}

fn classical_distance() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (model, range, div) in [(Model::Cluster, 4..=15, 2), (Model::Zxxz, 6..=15, 3)] {
        for n in range {
            let group = stabilizer_group(&ModelSpec::open(model, n, 0.0).unwrap()).unwrap();
            let fast = group.classical_distance().unwrap();
            let brute = group.classical_distance_exhaustive().unwrap();
            if fast != Some(n / div) || brute != fast {
                bad.push(format!("{model} N={n}: {fast:?} vs brute {brute:?}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if bad.is_empty() && secs < 5.0 {
        Ok(format!("clu N=4..15 floor(N/2), zxxz N=6..15 floor(N/3), brute-force confirmed; {secs:.2} s"))
    } else {
        Err(format!("{}; {secs:.2} s", bad.join(", ")))
    }
}

fn z1_witness() -> Outcome {
    let mut ok = true;
    for n in 4..=16 {
        let group = stabilizer_group(&ModelSpec::open(Model::Cluster, n, 0.0).unwrap()).unwrap();
        let z1 = PauliString::z_on(n, [0]).unwrap();
        ok &= group.centralizes(&z1).unwrap() && !group.contains_up_to_sign(&z1).unwrap();
    }
    check(ok, "Z1 commutes with every open-cluster generator and lies outside the group, N=4..16".into())
}

fn conjugation_lines() -> Outcome {
    let mut lines = 0;
    let mut bad = Vec::new();
    for (sites, boundary) in [(2, Boundary::Open), (4, Boundary::Open), (3, Boundary::Periodic), (6, Boundary::Periodic)] {
        let chain = SiteChain::new(sites, boundary).unwrap();
        let n = chain.n_qubits();
        let u = onsite_circuit(&chain).unwrap();
        for (ir, jl) in chain.inter_site_bonds() {
            let (il, jr) = (chain.left(ir / 2), chain.right(jl / 2));
            let xx = PauliString::x_on(n, [ir, jl]).unwrap().conjugate(&u).unwrap();
            let zz = PauliString::z_on(n, [ir, jl]).unwrap().conjugate(&u).unwrap();
            let want_xx = PauliString::from_sparse(n, &[(ir, 'Z'), (jl, 'X'), (jr, 'Z')]).unwrap();
            let want_zz = PauliString::from_sparse(n, &[(il, 'Z'), (ir, 'X'), (jl, 'Z')]).unwrap();
            for (got, want) in [(xx, want_xx), (zz, want_zz)] {
                lines += 1;
                if got != want {
                    bad.push(format!("{got} != {want}"));
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("X_ir X_jl -> Z_ir X_jl Z_jr and Z_ir Z_jl -> Z_il X_ir Z_jl, {lines} images exact with phase"))
    } else {
        Err(bad.join(", "))
    }
}

fn periodic_equivalence() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for n in [8, 10, 12] {
        let open = ModelSpec::open(Model::Cluster, n, 0.0).unwrap();
        let with_logicals = symmetric_state_group(&open).unwrap();
        let ring = stabilizer_group(&ModelSpec::new(Model::Cluster, n, 0.0, Boundary::Periodic).unwrap()).unwrap();
        let equal = with_logicals.groups_equal(&ring).unwrap();
        let h = build(&open).unwrap();
        let syms = symmetry_generators(&open).unwrap();
        let g = symmetric_ground_state(&h, &syms, &SolverOptions::default()).unwrap();
        let f = g.state.fidelity(&cluster_state(n, Boundary::Periodic).unwrap()).unwrap();
        ok &= equal && g.converged && f > 1.0 - 1e-10;
        details.push(format!("N={n}: groups_equal={equal}, 1-F={:.1e}", 1.0 - f));
    }
    check(ok, details.join(", "))
}

struct Quantized {
    model: Model,
    n: usize,
    kind: CutKind,
    want: f64,
}

const QUANTIZED: [Quantized; 7] = [
    Quantized { model: Model::Cluster, n: 12, kind: CutKind::Tripartite, want: 2.0 },
    Quantized { model: Model::Cluster, n: 12, kind: CutKind::Quadripartite, want: 2.0 },
    Quantized { model: Model::SymmetryBreaking, n: 12, kind: CutKind::Tripartite, want: 2.0 },
    Quantized { model: Model::SymmetryBreaking, n: 12, kind: CutKind::Quadripartite, want: 0.0 },
    Quantized { model: Model::Zxxz, n: 12, kind: CutKind::Tripartite, want: 3.0 },
    Quantized { model: Model::Zxxz, n: 12, kind: CutKind::Quadripartite, want: 2.0 },
    Quantized { model: Model::Zxxz, n: 6, kind: CutKind::Tripartite, want: 2.0 },
];

/// Zero-field symmetric ground state with its exact stabilizer group.
fn zero_field(model: Model, n: usize) -> (StateVector, StabilizerGroup) {
    let spec = ModelSpec::open(model, n, 0.0).unwrap();
    let h = build(&spec).unwrap();
    let syms = sector_generators(&spec, Sector::Field).unwrap();
    let g = symmetric_ground_state(&h, &syms, &SolverOptions::default()).unwrap();
    assert!(g.converged, "{model} N={n} sector solve did not converge");
    (g.state, symmetric_state_group(&spec).unwrap())
}

fn quantized_entropies() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for q in &QUANTIZED {
        let (state, _) = zero_field(q.model, q.n);
        let r = topo_entropy(&state, &CutLayout::equal(q.n, q.kind).unwrap()).unwrap();
        let err = (r.s_topo - q.want).abs();
        ok &= err < 1e-6;
        details.push(format!("{} N={} {}={:.9}", q.model, q.n, q.kind.label(), r.s_topo));
    }
    check(ok, details.join(", "))
}

fn oracle_agreement() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut regions = 0;
    for q in &QUANTIZED {
        let (state, group) = zero_field(q.model, q.n);
        let layout = CutLayout::equal(q.n, q.kind).unwrap();
        let oracle = stabilizer_topo_entropy(&group, &layout).unwrap();
        for (region, exact) in [
            (layout.ab(), oracle.s_ab),
            (layout.bc(), oracle.s_bc),
            (layout.b.clone(), oracle.s_b),
            (layout.abc(), oracle.s_abc),
        ] {
            worst = worst.max((region_entropy(&state, &region).unwrap() - exact).abs());
            regions += 1;
        }
    }
    check(worst < 1e-9, format!("{regions} region entropies, max deviation from GF(2) rank {worst:.1e}"))
}

/// First downward crossing of `level`, linearly interpolated.
fn crossing(rows: &[SweepRow], level: f64) -> Option<f64> {
    rows.windows(2).find_map(|w| {
        let (a, b) = (&w[0], &w[1]);
        (a.s_topo >= level && b.s_topo < level).then(|| a.b + (a.s_topo - level) * (b.b - a.b) / (a.s_topo - b.s_topo))
    })
}

fn transition_signal() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    let mut distances = Vec::new();
    for n in [6, 12, 18] {
        let mut config = SweepConfig::new(Model::Cluster, n);
        config.cuts = vec![CutKind::Tripartite];
        let start = Instant::now();
        let rows = cmd_sweep(&config).unwrap();
        let secs = start.elapsed().as_secs_f64();
        let plateau = rows.iter().filter(|r| r.b <= 0.3 + 1e-12);
        let worst = plateau.map(|r| (r.s_topo - 2.0).abs()).fold(0.0, f64::max);
        let low = rows.iter().filter(|r| r.b <= 0.3 + 1e-12).map(|r| r.s_topo).fold(f64::INFINITY, f64::min);
        let plateau_ok = worst <= 0.05;
        let end = rows.last().unwrap().s_topo;
        let star = crossing(&rows, 1.0);
        let converged = rows.iter().all(|r| r.converged);
        ok &= plateau_ok && converged;
        lines.push(format!(
            "    N={n}: plateau B<=0.3 min S={low:.4} max|S-2|={worst:.4} {}; S(B=2)={end:.4}; B*={}; converged={converged}; {secs:.1} s",
            if plateau_ok { "ok" } else { "FAIL" },
            star.map_or("none".into(), |b| format!("{b:.4}")),
        ));
        distances.push(star.map(|b| (b - 1.0).abs()));
        if n == 18 {
            let end_ok = end < 0.3;
            let time_ok = secs < 600.0;
            ok &= end_ok && time_ok;
            lines.push(format!(
                "    N=18: S(B=2)<0.3 {}; runtime<600 s {}",
                if end_ok { "ok" } else { "FAIL" },
                if time_ok { "ok" } else { "FAIL" }
            ));
        }
    }
    let monotone = distances.iter().all(Option::is_some)
        && distances.windows(2).all(|w| w[1].unwrap() < w[0].unwrap());
    ok &= monotone;
    lines.push(format!(
        "    |B*-1| decreasing with N {}: {}",
        if monotone { "ok" } else { "FAIL" },
        distances
            .iter()
            .map(|d| d.map_or("none".into(), |d| format!("{d:.4}")))
            .collect::<Vec<_>>()
            .join(" > ")
    ));
    check(ok, format!("cluster t-cut sweeps, 41 points on [0, 2]\n{}", lines.join("\n")))
}

fn transform_pipeline() -> Outcome {
    let mut worst: f64 = 0.0;
    for sites in 4..=6 {
        let chain = SiteChain::new(sites, Boundary::Periodic).unwrap();
        let u = onsite_circuit(&chain).unwrap();
        let n = chain.n_qubits();
        let a = apply_circuit(&build_psi_a(&chain).unwrap(), &u).unwrap();
        let b = apply_circuit(&build_psi_b(&chain).unwrap(), &u).unwrap();
        worst = worst.max(1.0 - a.fidelity(&cluster_state(n, Boundary::Periodic).unwrap()).unwrap());
        worst = worst.max(1.0 - b.fidelity(&StateVector::plus(n).unwrap()).unwrap());
    }
    check(worst < 1e-12, format!("2n=8..12: psi_a -> ring cluster, psi_b -> |+>, max 1-F {worst:.1e}"))
}

fn solver_cross_validation() -> Outcome {
    let start = Instant::now();
    let opts = SolverOptions::default();
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for model in [Model::Cluster, Model::SymmetryBreaking, Model::Zxxz] {
        for n in model.min_qubits()..=10 {
            for b in [0.0, 0.5, 1.0, 1.5] {
                let h = build(&ModelSpec::open(model, n, b).unwrap()).unwrap();
                let dense = dense_spectrum(&h).unwrap();
                let k = 4;
                let lanczos = lowest_eigenpairs(&h, k, &opts).unwrap();
                for (x, y) in lanczos.eigenvalues.iter().zip(&dense.eigenvalues) {
                    worst = worst.max((x - y).abs());
                }
                cases += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        worst < 1e-10 && secs < 60.0,
        format!("{cases} cases, lowest 4 eigenvalues, max deviation {worst:.1e}; {secs:.1} s"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("ground degeneracy", degeneracy),
        ("classical distance", classical_distance),
        ("quantum distance witness", z1_witness),
        ("bond stabilizer conjugation", conjugation_lines),
        ("periodic equivalence", periodic_equivalence),
        ("quantized zero-field entropies", quantized_entropies),
        ("stabilizer oracle agreement", oracle_agreement),
        ("transition signal", transition_signal),
        ("transform pipeline", transform_pipeline),
        ("solver cross-validation", solver_cross_validation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (verdict, detail) = match run() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {}: {verdict} {name}: {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
