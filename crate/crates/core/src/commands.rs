//! The operations behind the `spt` binary: field sweeps, code-distance
//! reports, single-point entropy queries and the self-check suite.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entropy::{stabilizer_topo_entropy, topo_entropy, CutKind, CutLayout, TopoEntropyRecord};
use crate::error::{Error, Result};
use crate::hamiltonian::{self, Boundary, Model, ModelSpec, Sector};
use crate::pauli::{PauliString, StabilizerGroup};
use crate::spectra::{self, SolverOptions};
use crate::state::StateVector;
use crate::transforms::{self, SiteChain};

/// Which cut layouts a sweep evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutChoice {
    T,
    Q,
    Both,
}

impl CutChoice {
    pub fn kinds(self) -> Vec<CutKind> {
        match self {
            CutChoice::T => vec![CutKind::Tripartite],
            CutChoice::Q => vec![CutKind::Quadripartite],
            CutChoice::Both => vec![CutKind::Tripartite, CutKind::Quadripartite],
        }
    }
}

impl FromStr for CutChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(CutChoice::T),
            "q" => Ok(CutChoice::Q),
            "both" => Ok(CutChoice::Both),
            other => Err(Error::InvalidArgument(format!("unknown cut choice {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Layouts for `n` qubits: explicit block ends (kind inferred from their
/// count) or equal blocks of every requested kind.
pub fn resolve_layouts(n: usize, kinds: &[CutKind], ends: Option<&[usize]>) -> Result<Vec<CutLayout>> {
    match ends {
        Some(ends) => {
            let kind = match ends.len() {
                2 => CutKind::Tripartite,
                3 => CutKind::Quadripartite,
                k => {
                    return Err(Error::Layout(format!(
                        "expected 2 (tripartite) or 3 (quadripartite) block ends, got {k}"
                    )))
                }
            };
            Ok(vec![CutLayout::from_ends(n, kind, ends)?])
        }
        None => kinds.iter().map(|&k| CutLayout::equal(n, k)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub model: Model,
    pub n: usize,
    pub boundary: Boundary,
    pub b_min: f64,
    pub b_max: f64,
    /// Number of grid points, endpoints included.
    pub b_steps: usize,
    pub cuts: Vec<CutKind>,
    /// Explicit 1-based block ends; replaces `cuts` when present.
    pub cut_ends: Option<Vec<usize>>,
    pub sector: Sector,
    pub solver: SolverOptions,
    /// Concurrent grid points; `0` uses every available core.
    pub workers: usize,
}

impl SweepConfig {
    /// Open chain, `B ∈ [0, 2]` on 41 points, both cuts where they fit.
    pub fn new(model: Model, n: usize) -> Self {
        let cuts = [CutKind::Tripartite, CutKind::Quadripartite]
            .into_iter()
            .filter(|k| n >= k.min_qubits())
            .collect();
        Self {
            model,
            n,
            boundary: Boundary::Open,
            b_min: 0.0,
            b_max: 2.0,
            b_steps: 41,
            cuts,
            cut_ends: None,
            sector: Sector::default(),
            solver: SolverOptions::default(),
            workers: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        ModelSpec::new(self.model, self.n, self.b_min, self.boundary)?;
        if !(self.b_min.is_finite() && self.b_max.is_finite()) || self.b_min > self.b_max || self.b_min < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "field range [{}, {}] must satisfy 0 <= b-min <= b-max",
                self.b_min, self.b_max
            )));
        }
        if self.b_steps == 0 {
            return Err(Error::TooSmall {
                what: "b-steps",
                value: 0,
                min: 1,
            });
        }
        if self.cut_ends.is_none() && self.cuts.is_empty() {
            return Err(Error::InvalidArgument("no cut requested".into()));
        }
        self.layouts().map(|_| ())
    }

    pub fn layouts(&self) -> Result<Vec<CutLayout>> {
        resolve_layouts(self.n, &self.cuts, self.cut_ends.as_deref())
    }

    /// Uniform grid from `b_min` to `b_max`.
    pub fn grid(&self) -> Vec<f64> {
        if self.b_steps == 1 {
            return vec![self.b_min];
        }
        let step = (self.b_max - self.b_min) / (self.b_steps - 1) as f64;
        (0..self.b_steps)
            .map(|i| {
                if i + 1 == self.b_steps {
                    self.b_max
                } else {
                    self.b_min + step * i as f64
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub model: Model,
    pub n: usize,
    pub boundary: Boundary,
    pub b: f64,
    pub cut_kind: CutKind,
    pub s_topo: f64,
    pub s_ab: f64,
    pub s_bc: f64,
    pub s_b: f64,
    pub s_abc: f64,
    pub ground_energy: f64,
    pub symmetric_energy: f64,
    pub converged: bool,
}

fn sweep_point(config: &SweepConfig, layouts: &[CutLayout], b: f64) -> Result<Vec<SweepRow>> {
    let spec = ModelSpec::new(config.model, config.n, b, config.boundary)?;
    let h = hamiltonian::build(&spec)?;
    let syms = hamiltonian::sector_generators(&spec, config.sector)?;
    let global = spectra::lowest_eigenpairs(&h, 1, &config.solver)?;
    let sector = spectra::symmetric_ground_state(&h, &syms, &config.solver)?;
    layouts
        .iter()
        .map(|layout| {
            let r = topo_entropy(&sector.state, layout)?;
            Ok(SweepRow {
                model: config.model,
                n: config.n,
                boundary: config.boundary,
                b,
                cut_kind: layout.kind,
                s_topo: r.s_topo,
                s_ab: r.s_ab,
                s_bc: r.s_bc,
                s_b: r.s_b,
                s_abc: r.s_abc,
                ground_energy: global.ground_energy(),
                symmetric_energy: sector.energy,
                converged: global.converged && sector.converged,
            })
        })
        .collect()
}

/// Symmetric-sector entropies along the field grid, in `(b, cut)` order.
pub fn cmd_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let layouts = config.layouts()?;
    let grid = config.grid();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    let per_point: Vec<Vec<SweepRow>> = pool.install(|| {
        grid.par_iter()
            .map(|&b| sweep_point(config, &layouts, b))
            .collect::<Result<_>>()
    })?;
    Ok(per_point.into_iter().flatten().collect())
}

/// `%.12g`-style formatting: 12 significant digits, trailing zeros dropped.
pub fn format_sig12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        return format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub const CSV_HEADER: &str =
    "model,n,boundary,b,cut_kind,s_topo,s_ab,s_bc,s_b,s_abc,ground_energy,symmetric_energy,converged";

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        let floats = [r.s_topo, r.s_ab, r.s_bc, r.s_b, r.s_abc, r.ground_energy, r.symmetric_energy]
            .map(format_sig12)
            .join(",");
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.model,
            r.n,
            r.boundary,
            format_sig12(r.b),
            r.cut_kind,
            floats,
            r.converged
        )?;
    }
    Ok(())
}

pub fn write_rows<W: Write>(rows: &[SweepRow], format: OutputFormat, mut out: W) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(rows, out),
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub model: Model,
    pub n: usize,
    pub boundary: Boundary,
    pub generators: usize,
    /// `2^{n − generators}`.
    pub ground_space_dim: u128,
    /// X-type logical operators, one per independent class.
    pub logicals: Vec<String>,
    pub classical_distance: Option<usize>,
    /// `⌊N/2⌋` (clu, syb) or `⌊N/3⌋` (zxxz) for open chains.
    pub expected: Option<usize>,
}

impl DistanceReport {
    pub fn matches_expected(&self) -> bool {
        self.expected.is_none() || self.expected == self.classical_distance
    }
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model: {} (N = {}, {})", self.model, self.n, self.boundary)?;
        writeln!(f, "stabilizer generators: {}", self.generators)?;
        writeln!(f, "ground-space dimension: {}", self.ground_space_dim)?;
        writeln!(f, "x-type logicals:")?;
        for l in &self.logicals {
            writeln!(f, "  {l}")?;
        }
        match self.classical_distance {
            Some(d) => writeln!(f, "classical distance: {d}")?,
            None => writeln!(f, "classical distance: none (no x-type logical)")?,
        }
        if let Some(e) = self.expected {
            let verdict = if self.matches_expected() { "match" } else { "MISMATCH" };
            let rule = if self.model == Model::Zxxz { "floor(N/3)" } else { "floor(N/2)" };
            writeln!(f, "{rule} = {e}: {verdict}")?;
        }
        Ok(())
    }
}

pub fn cmd_distance(model: Model, n: usize, boundary: Boundary) -> Result<DistanceReport> {
    let spec = ModelSpec::new(model, n, 0.0, boundary)?;
    let group = hamiltonian::stabilizer_group(&spec)?;
    let mut classes = group.clone();
    let mut logicals = Vec::new();
    for p in group.x_type_centralizer() {
        if !classes.contains_up_to_sign(&p)? {
            classes = classes.extended([p])?;
            logicals.push(p.to_string());
        }
    }
    let expected = (boundary == Boundary::Open).then_some(match model {
        Model::Zxxz => n / 3,
        Model::Cluster | Model::SymmetryBreaking => n / 2,
    });
    Ok(DistanceReport {
        model,
        n,
        boundary,
        generators: group.len(),
        ground_space_dim: 1u128 << (n - group.len()),
        logicals,
        classical_distance: group.classical_distance()?,
        expected,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyQuery {
    pub model: Model,
    pub n: usize,
    pub boundary: Boundary,
    pub b: f64,
    pub cuts: Vec<CutKind>,
    pub cut_ends: Option<Vec<usize>>,
    pub sector: Sector,
    pub solver: SolverOptions,
}

impl EntropyQuery {
    pub fn new(model: Model, n: usize, b: f64, cut: CutKind) -> Self {
        Self {
            model,
            n,
            boundary: Boundary::Open,
            b,
            cuts: vec![cut],
            cut_ends: None,
            sector: Sector::default(),
            solver: SolverOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub model: Model,
    pub n: usize,
    pub boundary: Boundary,
    pub b: f64,
    pub symmetric_energy: f64,
    pub residual: f64,
    pub converged: bool,
    pub records: Vec<TopoEntropyRecord>,
}

impl fmt::Display for EntropyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} N={} {} B={}: E_sym = {:.12} (residual {:.1e}{})",
            self.model,
            self.n,
            self.boundary,
            self.b,
            self.symmetric_energy,
            self.residual,
            if self.converged { "" } else { ", NOT converged" }
        )?;
        for r in &self.records {
            writeln!(f, "{} cut  {}", r.layout.kind, r.layout)?;
            writeln!(
                f,
                "  S_AB = {:.9}  S_BC = {:.9}  S_B = {:.9}  S_ABC = {:.9}",
                r.s_ab, r.s_bc, r.s_b, r.s_abc
            )?;
            writeln!(f, "  S_topo = {:.9}", r.s_topo)?;
        }
        Ok(())
    }
}

pub fn cmd_entropy(query: &EntropyQuery) -> Result<EntropyReport> {
    let spec = ModelSpec::new(query.model, query.n, query.b, query.boundary)?;
    let layouts = resolve_layouts(query.n, &query.cuts, query.cut_ends.as_deref())?;
    let h = hamiltonian::build(&spec)?;
    let syms = hamiltonian::sector_generators(&spec, query.sector)?;
    let ground = spectra::symmetric_ground_state(&h, &syms, &query.solver)?;
    let records = layouts
        .iter()
        .map(|l| topo_entropy(&ground.state, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyReport {
        model: query.model,
        n: query.n,
        boundary: query.boundary,
        b: query.b,
        symmetric_energy: ground.energy,
        residual: ground.residual,
        converged: ground.converged,
        records,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Pauli,
    Spectra,
    Entropy,
    Transforms,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pauli" => Ok(Suite::Pauli),
            "spectra" => Ok(Suite::Spectra),
            "entropy" => Ok(Suite::Entropy),
            "transforms" => Ok(Suite::Transforms),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    fn run(&mut self, suite: &str, name: &str, check: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(Check {
            suite: suite.into(),
            name: name.into(),
            passed,
            detail,
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} [{}] {}: {}", c.suite, c.name, c.detail)?;
        }
        writeln!(
            f,
            "{} checks, {} failed",
            self.checks.len(),
            self.failures()
        )
    }
}

/// Runs the requested self-checks; failures are reported, never raised.
pub fn cmd_verify(suite: Suite) -> VerifyReport {
    let mut report = VerifyReport::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Pauli {
        verify_pauli(&mut report);
    }
    if all || suite == Suite::Spectra {
        verify_spectra(&mut report);
    }
    if all || suite == Suite::Entropy {
        verify_entropy(&mut report);
    }
    if all || suite == Suite::Transforms {
        verify_transforms(&mut report);
    }
    report
}

fn verify_pauli(report: &mut VerifyReport) {
    const S: &str = "pauli";
    report.run(S, "products act like matrix products on basis states", || {
        let letters = ["I", "X", "Y", "Z"];
        let mut worst = 0.0f64;
        for a in letters {
            for b in letters {
                let (pa, pb): (PauliString, PauliString) = (a.parse()?, b.parse()?);
                let ab = pa.multiply(&pb)?;
                for basis in 0..2 {
                    let v = StateVector::basis(1, basis)?;
                    let seq = v.apply_pauli(&pb)?.apply_pauli(&pa)?;
                    worst = worst.max(v.apply_pauli(&ab)?.max_abs_diff(&seq)?);
                }
            }
        }
        Ok((worst < 1e-15, format!("max deviation {worst:.1e}")))
    });
    report.run(S, "open cluster with logicals equals periodic cluster", || {
        let mut detail = Vec::new();
        let mut ok = true;
        for n in [8, 10, 12] {
            let open = hamiltonian::symmetric_state_group(&ModelSpec::open(Model::Cluster, n, 0.0)?)?;
            let periodic = hamiltonian::stabilizer_group(&ModelSpec::new(Model::Cluster, n, 0.0, Boundary::Periodic)?)?;
            let eq = open.groups_equal(&periodic)?;
            ok &= eq;
            detail.push(format!("N={n}: {eq}"));
        }
        Ok((ok, detail.join(", ")))
    });
    report.run(S, "Z on the first qubit is an undetectable error", || {
        let group = hamiltonian::stabilizer_group(&ModelSpec::open(Model::Cluster, 8, 0.0)?)?;
        let z1 = PauliString::z_on(8, [0])?;
        let commutes = group.centralizes(&z1)?;
        let member = group.contains_up_to_sign(&z1)?;
        Ok((commutes && !member, format!("commutes={commutes} member={member}")))
    });
    report.run(S, "classical distances of open chains", || {
        let mut bad = Vec::new();
        for (model, lo, div) in [(Model::Cluster, 4, 2), (Model::Zxxz, 6, 3)] {
            for n in lo..=15 {
                let group = hamiltonian::stabilizer_group(&ModelSpec::open(model, n, 0.0)?)?;
                let d = group.classical_distance()?;
                let brute = group.classical_distance_exhaustive()?;
                if d != Some(n / div) || brute != d {
                    bad.push(format!("{model} N={n}: {d:?} brute {brute:?}"));
                }
            }
        }
        let ok = bad.is_empty();
        Ok((ok, if ok { "clu floor(N/2), zxxz floor(N/3) for N<=15".into() } else { bad.join("; ") }))
    });
}

fn verify_spectra(report: &mut VerifyReport) {
    const S: &str = "spectra";
    let opts = SolverOptions::default();
    report.run(S, "ground degeneracies at zero field", || {
        let cases = [
            (Model::Cluster, 8, Boundary::Open, 4),
            (Model::SymmetryBreaking, 8, Boundary::Open, 4),
            (Model::Zxxz, 9, Boundary::Open, 8),
            (Model::Cluster, 8, Boundary::Periodic, 1),
        ];
        let mut ok = true;
        let mut detail = Vec::new();
        for (model, n, boundary, want) in cases {
            let h = hamiltonian::build(&ModelSpec::new(model, n, 0.0, boundary)?)?;
            let got = spectra::lowest_eigenpairs(&h, 10, &opts)?.degeneracy;
            ok &= got == want;
            detail.push(format!("{model} N={n} {boundary}: {got}"));
        }
        Ok((ok, detail.join(", ")))
    });
    report.run(S, "Lanczos agrees with dense diagonalization", || {
        let mut worst = 0.0f64;
        for model in Model::ALL {
            let h = hamiltonian::build(&ModelSpec::open(model, 8, 0.7)?)?;
            let l = spectra::lowest_eigenpairs(&h, 6, &opts)?;
            let d = spectra::dense_spectrum(&h)?;
            for (a, b) in l.eigenvalues.iter().zip(&d.eigenvalues) {
                worst = worst.max((a - b).abs());
            }
        }
        Ok((worst < 1e-10, format!("N=8, B=0.7: max deviation {worst:.1e}")))
    });
    report.run(S, "zero-field symmetric state is the periodic cluster state", || {
        let spec = ModelSpec::open(Model::Cluster, 8, 0.0)?;
        let h = hamiltonian::build(&spec)?;
        let g = spectra::symmetric_ground_state(&h, &hamiltonian::symmetry_generators(&spec)?, &opts)?;
        let f = g.state.fidelity(&transforms::cluster_state(8, Boundary::Periodic)?)?;
        Ok((f > 1.0 - 1e-10, format!("fidelity 1 - {:.1e}", 1.0 - f)))
    });
    report.run(S, "symmetric states are symmetric and variationally bounded", || {
        let mut ok = true;
        let mut detail = Vec::new();
        for model in Model::ALL {
            let spec = ModelSpec::open(model, 9, 0.7)?;
            let h = hamiltonian::build(&spec)?;
            let syms = hamiltonian::sector_generators(&spec, Sector::Field)?;
            let g = spectra::symmetric_ground_state(&h, &syms, &opts)?;
            let e0 = spectra::lowest_eigenpairs(&h, 1, &opts)?.ground_energy();
            let purity = syms
                .iter()
                .map(|s| Ok((g.state.expectation(s)?.re - 1.0).abs()))
                .collect::<Result<Vec<f64>>>()?
                .into_iter()
                .fold(0.0, f64::max);
            ok &= purity < 1e-8 && g.energy >= e0 - 1e-9;
            detail.push(format!("{model}: |<g>-1| {purity:.1e}, E_sym - E_0 = {:.1e}", g.energy - e0));
        }
        Ok((ok, detail.join("; ")))
    });
}

fn verify_entropy(report: &mut VerifyReport) {
    const S: &str = "entropy";
    let opts = SolverOptions::default();
    let cases = [
        (Model::Cluster, 12, CutKind::Tripartite, 2.0),
        (Model::Cluster, 12, CutKind::Quadripartite, 2.0),
        (Model::SymmetryBreaking, 12, CutKind::Tripartite, 2.0),
        (Model::SymmetryBreaking, 12, CutKind::Quadripartite, 0.0),
        (Model::Zxxz, 12, CutKind::Tripartite, 3.0),
        (Model::Zxxz, 12, CutKind::Quadripartite, 2.0),
        (Model::Zxxz, 6, CutKind::Tripartite, 2.0),
    ];
    for (model, n, kind, want) in cases {
        report.run(S, &format!("{model} N={n} {kind}-cut at zero field"), || {
            let spec = ModelSpec::open(model, n, 0.0)?;
            let h = hamiltonian::build(&spec)?;
            let g = spectra::symmetric_ground_state(&h, &hamiltonian::symmetry_generators(&spec)?, &opts)?;
            let layout = CutLayout::equal(n, kind)?;
            let dense = topo_entropy(&g.state, &layout)?;
            let exact = stabilizer_topo_entropy(&hamiltonian::symmetric_state_group(&spec)?, &layout)?;
            let oracle_gap = [
                dense.s_ab - exact.s_ab,
                dense.s_bc - exact.s_bc,
                dense.s_b - exact.s_b,
                dense.s_abc - exact.s_abc,
            ]
            .into_iter()
            .map(f64::abs)
            .fold(0.0, f64::max);
            let ok = (dense.s_topo - want).abs() < 1e-6 && oracle_gap < 1e-9;
            Ok((ok, format!("S_topo = {:.9} (expected {want}), oracle gap {oracle_gap:.1e}", dense.s_topo)))
        });
    }
}

fn verify_transforms(report: &mut VerifyReport) {
    const S: &str = "transforms";
    report.run(S, "bond stabilizers map to cluster stabilizers", || {
        let chain = SiteChain::new(3, Boundary::Periodic)?;
        let n = chain.n_qubits();
        let circuit = transforms::onsite_circuit(&chain)?;
        let mut ok = true;
        for i in 0..3 {
            let j = (i + 1) % 3;
            let (ir, il, jl, jr) = (chain.right(i), chain.left(i), chain.left(j), chain.right(j));
            let xx = PauliString::x_on(n, [ir, jl])?.conjugate(&circuit)?;
            let want_xx = PauliString::from_sparse(n, &[(ir, 'Z'), (jl, 'X'), (jr, 'Z')])?;
            let zz = PauliString::z_on(n, [ir, jl])?.conjugate(&circuit)?;
            let want_zz = PauliString::from_sparse(n, &[(il, 'Z'), (ir, 'X'), (jl, 'Z')])?;
            ok &= xx == want_xx && zz == want_zz;
        }
        Ok((ok, "XX -> ZXZ and ZZ -> ZXZ on every bond, phases included".into()))
    });
    report.run(S, "inter-site bonds become the periodic cluster state", || {
        let mut worst = 0.0f64;
        for sites in [4, 5, 6] {
            let chain = SiteChain::new(sites, Boundary::Periodic)?;
            let out = transforms::apply_circuit(&transforms::build_psi_a(&chain)?, &transforms::onsite_circuit(&chain)?)?;
            let f = out.fidelity(&transforms::cluster_state(2 * sites, Boundary::Periodic)?)?;
            worst = worst.max(1.0 - f);
        }
        Ok((worst < 1e-12, format!("2n = 8..12: fidelity deficit {worst:.1e}")))
    });
    report.run(S, "onsite bonds become the all-plus product state", || {
        let mut worst = 0.0f64;
        for sites in [4, 5, 6] {
            let chain = SiteChain::new(sites, Boundary::Periodic)?;
            let out = transforms::apply_circuit(&transforms::build_psi_b(&chain)?, &transforms::onsite_circuit(&chain)?)?;
            worst = worst.max(1.0 - out.fidelity(&StateVector::plus(2 * sites)?)?);
        }
        Ok((worst < 1e-12, format!("2n = 8..12: fidelity deficit {worst:.1e}")))
    });
    report.run(S, "operator and state pictures agree", || {
        let chain = SiteChain::new(4, Boundary::Periodic)?;
        let circuit = transforms::onsite_circuit(&chain)?;
        let state = transforms::apply_circuit(&transforms::build_psi_a(&chain)?, &circuit)?;
        let group: StabilizerGroup = transforms::psi_a_stabilizers(&chain)?;
        let mut worst = 0.0f64;
        for g in group.generators() {
            let e = state.expectation(&g.conjugate(&circuit)?)?;
            worst = worst.max((e.re - 1.0).abs() + e.im.abs());
        }
        Ok((worst < 1e-10, format!("max |<U g U^dag> - 1| = {worst:.1e}")))
    });
    report.run(S, "the onsite circuit is not an involution", || {
        let chain = SiteChain::new(2, Boundary::Open)?;
        let circuit = transforms::onsite_circuit(&chain)?;
        let psi = transforms::build_psi_b(&chain)?;
        let twice = transforms::apply_circuit(&transforms::apply_circuit(&psi, &circuit)?, &circuit)?;
        let f = twice.fidelity(&psi)?;
        let norm_drift = (twice.norm() - 1.0).abs();
        Ok((f < 1.0 - 1e-6 && norm_drift < 1e-12, format!("fidelity after two passes {f:.6}")))
    });
}
