//! Ground states and low spectra.
//!
//! The iterative solver is a thick-restart Lanczos method (Krylov–Schur for
//! Hermitian operators) with full reorthogonalization. Eigenpairs are found
//! one at a time and locked; every later search runs in the orthogonal
//! complement of the locked vectors, which is what lets a single-vector
//! Krylov method see every copy of a degenerate level.
//!
//! The symmetric ground state is the lowest eigenvector of `P·H`, with
//! `P = 2^{−s} Σ_g g` the group-averaging projector onto the joint `+1`
//! eigenspace of the symmetry generators.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::{apply_kernels, PauliSumOperator};
use crate::pauli::PauliString;
use crate::state::{PauliKernel, StateVector};

type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);

/// Knobs for the iterative solver.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverOptions {
    /// Residual bound `‖Hv − λv‖` for accepting an eigenpair.
    pub tol: f64,
    /// Largest Krylov basis kept in memory.
    pub krylov_dim: usize,
    /// Restart cap per eigenpair.
    pub max_restarts: usize,
    /// Seed of the pseudo-random start vectors.
    pub seed: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            krylov_dim: 20,
            max_restarts: 2000,
            seed: 0x5eed,
        }
    }
}

/// Ascending eigenvalues with their eigenvectors.
#[derive(Clone, Debug)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<StateVector>,
    /// Number of eigenvalues within `1e−8·max(1, |E₀|)` of the minimum.
    pub degeneracy: usize,
    pub converged: bool,
    /// Operator applications used (zero for the dense path).
    pub iterations: usize,
}

impl SpectrumResult {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Lowest state of the symmetric sector.
#[derive(Clone, Debug)]
pub struct SectorGround {
    pub state: StateVector,
    pub energy: f64,
    pub residual: f64,
    pub converged: bool,
    pub iterations: usize,
}

/// Counts eigenvalues degenerate with the smallest one.
pub fn degeneracy(eigenvalues: &[f64]) -> usize {
    let Some(min) = eigenvalues.iter().copied().reduce(f64::min) else {
        return 0;
    };
    let tol = 1e-8 * min.abs().max(1.0);
    eigenvalues.iter().filter(|&&e| e - min <= tol).count()
}

trait Operator: Sync {
    fn dim(&self) -> usize;
    fn apply(&self, v: &[C64], out: &mut [C64]);
}

struct Plain {
    dim: usize,
    kernels: Vec<PauliKernel>,
}

impl Operator for Plain {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, v: &[C64], out: &mut [C64]) {
        apply_kernels(&self.kernels, v, out);
    }
}

/// `P·H` for the projector `P` over the given group elements.
struct Projected {
    dim: usize,
    kernels: Vec<PauliKernel>,
    projector: Vec<PauliKernel>,
}

impl Operator for Projected {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, v: &[C64], out: &mut [C64]) {
        let mut hv = vec![ZERO; self.dim];
        apply_kernels(&self.kernels, v, &mut hv);
        apply_kernels(&self.projector, &hv, out);
    }
}

const CHUNK: usize = 4096;

/// `⟨a|b⟩`, summed in fixed chunks so the result is reproducible.
fn dot(a: &[C64], b: &[C64]) -> C64 {
    if a.len() < 4 * CHUNK {
        return crate::state::dot(a, b);
    }
    let partial: Vec<C64> = a
        .par_chunks(CHUNK)
        .zip(b.par_chunks(CHUNK))
        .map(|(x, y)| crate::state::dot(x, y))
        .collect();
    partial.into_iter().sum()
}

/// `y += alpha · x`.
fn axpy(alpha: C64, x: &[C64], y: &mut [C64]) {
    if y.len() < 4 * CHUNK {
        y.iter_mut().zip(x).for_each(|(yi, xi)| *yi += alpha * xi);
    } else {
        y.par_chunks_mut(CHUNK)
            .zip(x.par_chunks(CHUNK))
            .for_each(|(yc, xc)| yc.iter_mut().zip(xc).for_each(|(yi, xi)| *yi += alpha * xi));
    }
}

fn norm(v: &[C64]) -> f64 {
    dot(v, v).re.max(0.0).sqrt()
}

fn scale(v: &mut [C64], s: f64) {
    v.iter_mut().for_each(|x| *x *= s);
}

/// `⟨bᵢ|w⟩` for every basis vector in one blocked pass over `w`.
fn project(basis: &[Vec<C64>], w: &[C64]) -> Vec<C64> {
    let k = basis.len();
    let block = |c: usize| -> Vec<C64> {
        let range = c * CHUNK..((c + 1) * CHUNK).min(w.len());
        basis
            .iter()
            .map(|b| crate::state::dot(&b[range.clone()], &w[range.clone()]))
            .collect()
    };
    let chunks = w.len().div_ceil(CHUNK);
    let partial: Vec<Vec<C64>> = if w.len() < 4 * CHUNK {
        (0..chunks).map(block).collect()
    } else {
        (0..chunks).into_par_iter().map(block).collect()
    };
    partial.into_iter().fold(vec![ZERO; k], |mut acc, p| {
        acc.iter_mut().zip(p).for_each(|(a, x)| *a += x);
        acc
    })
}

/// `w −= Σ cᵢ bᵢ`, blocked so each chunk of `w` is touched once.
fn subtract(basis: &[Vec<C64>], coeffs: &[C64], w: &mut [C64]) {
    let update = |c: usize, wc: &mut [C64]| {
        let off = c * CHUNK;
        for (b, &h) in basis.iter().zip(coeffs) {
            let len = wc.len();
            wc.iter_mut().zip(&b[off..off + len]).for_each(|(x, y)| *x -= h * y);
        }
    };
    if w.len() < 4 * CHUNK {
        w.chunks_mut(CHUNK).enumerate().for_each(|(c, wc)| update(c, wc));
    } else {
        w.par_chunks_mut(CHUNK).enumerate().for_each(|(c, wc)| update(c, wc));
    }
}

/// Classical Gram–Schmidt with a second pass whenever the first one removed
/// more than `1 − 1/√2` of the norm; returns the projection coefficients.
fn orthogonalize(w: &mut [C64], basis: &[Vec<C64>]) -> Vec<C64> {
    let mut coeffs = vec![ZERO; basis.len()];
    if basis.is_empty() {
        return coeffs;
    }
    let mut before = norm(w);
    for _ in 0..2 {
        let h = project(basis, w);
        subtract(basis, &h, w);
        coeffs.iter_mut().zip(&h).for_each(|(acc, c)| *acc += c);
        let after = norm(w);
        if after > std::f64::consts::FRAC_1_SQRT_2 * before {
            break;
        }
        before = after;
    }
    coeffs
}

fn random_vector(dim: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
    use rand::Rng;
    use rand_distr::StandardNormal;
    (0..dim)
        .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect()
}

/// Ascending eigen-decomposition of a small Hermitian matrix.
fn hermitian_eigen(t: &DMatrix<C64>) -> (Vec<f64>, DMatrix<C64>) {
    let eig = SymmetricEigen::new(t.clone());
    let mut order: Vec<usize> = (0..t.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(t.nrows(), t.nrows(), |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

struct Pair {
    value: f64,
    vector: Vec<C64>,
    residual: f64,
    converged: bool,
    matvecs: usize,
}

/// Lowest eigenpair of `op` restricted to the complement of `locked`.
fn lowest_in_complement(
    op: &dyn Operator,
    locked: &[Vec<C64>],
    start: Vec<C64>,
    opts: &SolverOptions,
) -> Result<Pair> {
    let dim = op.dim();
    let available = dim - locked.len();
    let m = opts.krylov_dim.max(3).min(available);
    let keep = (m / 2).max(1);

    let mut v0 = start;
    orthogonalize(&mut v0, locked);
    let n0 = norm(&v0);
    if n0 == 0.0 {
        return Err(Error::EmptySector);
    }
    scale(&mut v0, 1.0 / n0);

    let mut basis: Vec<Vec<C64>> = vec![v0];
    let mut t = DMatrix::<C64>::zeros(m, m);
    let mut matvecs = 0;
    let mut best = Pair {
        value: f64::NAN,
        vector: Vec::new(),
        residual: f64::INFINITY,
        converged: false,
        matvecs: 0,
    };
    // Index of the first basis vector whose column of `t` is still unknown.
    let mut next = 0;
    let mut w = vec![ZERO; dim];
    let mut op_scale = f64::MIN_POSITIVE;

    for _restart in 0..=opts.max_restarts {
        let mut beta = 0.0;
        let mut invariant = false;
        while next < basis.len() {
            let j = next;
            op.apply(&basis[j], &mut w);
            matvecs += 1;
            orthogonalize(&mut w, locked);
            let w0 = norm(&w);
            op_scale = op_scale.max(w0);
            let mut h = orthogonalize(&mut w, &basis);
            beta = norm(&w);
            if beta < 0.5 * w0 {
                // Heavy cancellation: one more sweep keeps the basis orthonormal.
                orthogonalize(&mut w, locked);
                let extra = orthogonalize(&mut w, &basis);
                h.iter_mut().zip(extra).for_each(|(a, b)| *a += b);
                beta = norm(&w);
            }
            for (i, hi) in h.iter().enumerate() {
                t[(i, j)] = *hi;
                t[(j, i)] = hi.conj();
            }
            t[(j, j)] = C64::new(h[j].re, 0.0);
            next += 1;
            // A basis spanning the whole complement is invariant by construction.
            if beta <= 1e-12 * op_scale || next == available {
                invariant = true;
                break;
            }
            if basis.len() < m {
                let mut v = w.clone();
                scale(&mut v, 1.0 / beta);
                basis.push(v);
            }
        }

        let size = basis.len();
        let tk = t.view((0, 0), (size, size)).into_owned();
        let (theta, s) = hermitian_eigen(&tk);
        let estimate = if invariant { 0.0 } else { beta * s[(size - 1, 0)].norm() };

        if estimate < opts.tol || invariant {
            let y = combine(&basis, &s, 1).swap_remove(0);
            let mut hy = vec![ZERO; dim];
            op.apply(&y, &mut hy);
            matvecs += 1;
            orthogonalize(&mut hy, locked);
            axpy(C64::new(-theta[0], 0.0), &y, &mut hy);
            let residual = norm(&hy);
            best = Pair {
                value: theta[0],
                vector: y,
                residual,
                converged: residual < opts.tol,
                matvecs,
            };
            if best.converged || invariant {
                return Ok(best);
            }
        }

        // Thick restart: keep the lowest Ritz vectors, continue from the residual.
        let kept = keep.min(size.saturating_sub(1)).max(1);
        let mut fresh = combine(&basis, &s, kept);
        t.fill(ZERO);
        for (i, th) in theta.iter().take(kept).enumerate() {
            t[(i, i)] = C64::new(*th, 0.0);
        }
        // Its couplings to the kept vectors are filled in by the next column.
        orthogonalize(&mut w, locked);
        orthogonalize(&mut w, &fresh);
        let wn = norm(&w);
        if wn == 0.0 {
            break;
        }
        scale(&mut w, 1.0 / wn);
        fresh.push(w.clone());
        basis = fresh;
        next = kept;
        best.value = theta[0];
        best.residual = estimate;
    }
    if best.vector.is_empty() {
        best.vector = basis.swap_remove(0);
    }
    best.matvecs = matvecs;
    Ok(best)
}

/// Normalized Ritz vectors `Σₖ s[k, col] bₖ` for each requested column.
fn combine(basis: &[Vec<C64>], s: &DMatrix<C64>, cols: usize) -> Vec<Vec<C64>> {
    let dim = basis[0].len();
    let mut out = vec![vec![ZERO; dim]; cols];
    let fill = |c: usize, targets: &mut [&mut [C64]]| {
        let off = c * CHUNK;
        for (col, y) in targets.iter_mut().enumerate() {
            for (k, b) in basis.iter().enumerate() {
                let coeff = s[(k, col)];
                let len = y.len();
                y.iter_mut().zip(&b[off..off + len]).for_each(|(yi, bi)| *yi += coeff * bi);
            }
        }
    };
    let mut blocks: Vec<Vec<&mut [C64]>> = (0..dim.div_ceil(CHUNK)).map(|_| Vec::new()).collect();
    for y in out.iter_mut() {
        for (c, chunk) in y.chunks_mut(CHUNK).enumerate() {
            blocks[c].push(chunk);
        }
    }
    if dim < 4 * CHUNK {
        blocks.iter_mut().enumerate().for_each(|(c, t)| fill(c, t));
    } else {
        blocks.par_iter_mut().enumerate().for_each(|(c, t)| fill(c, t));
    }
    for y in out.iter_mut() {
        let n = norm(y);
        scale(y, 1.0 / n);
    }
    out
}

/// The `k` lowest eigenpairs of `h` by locked thick-restart Lanczos.
pub fn lowest_eigenpairs(h: &PauliSumOperator, k: usize, opts: &SolverOptions) -> Result<SpectrumResult> {
    let dim = 1usize << h.n();
    if k == 0 || k > dim {
        return Err(Error::InvalidArgument(format!(
            "requested {k} eigenpairs of a {dim}-dimensional operator"
        )));
    }
    let op = Plain {
        dim,
        kernels: h.kernels(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut locked: Vec<Vec<C64>> = Vec::with_capacity(k);
    let mut values = Vec::with_capacity(k);
    let mut converged = true;
    let mut iterations = 0;
    for _ in 0..k {
        let start = random_vector(dim, &mut rng);
        let pair = lowest_in_complement(&op, &locked, start, opts)?;
        converged &= pair.converged;
        iterations += pair.matvecs;
        values.push(pair.value);
        locked.push(pair.vector);
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let eigenvectors = order
        .iter()
        .map(|&i| StateVector::from_amplitudes(h.n(), locked[i].clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumResult {
        degeneracy: degeneracy(&eigenvalues),
        eigenvalues,
        eigenvectors,
        converged,
        iterations,
    })
}

/// Full spectrum by dense diagonalization; `n ≤ 12`.
pub fn dense_spectrum(h: &PauliSumOperator) -> Result<SpectrumResult> {
    let m = h.to_dense()?;
    let dim = m.nrows();
    let real = m.iter().all(|z| z.im == 0.0);
    let (values, vectors): (Vec<f64>, Vec<Vec<C64>>) = if real {
        let eig = SymmetricEigen::new(m.map(|z| z.re));
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        (
            order.iter().map(|&i| eig.eigenvalues[i]).collect(),
            order
                .iter()
                .map(|&i| eig.eigenvectors.column(i).iter().map(|&x| C64::new(x, 0.0)).collect())
                .collect(),
        )
    } else {
        let (values, s) = hermitian_eigen(&m);
        (values, (0..dim).map(|i| s.column(i).iter().copied().collect()).collect())
    };
    let eigenvectors = vectors
        .into_iter()
        .map(|v| StateVector::from_amplitudes(h.n(), v))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumResult {
        degeneracy: degeneracy(&values),
        eigenvalues: values,
        eigenvectors,
        converged: true,
        iterations: 0,
    })
}

/// Every element of the group generated by `syms` (all `2^s` products).
pub fn group_elements(syms: &[PauliString]) -> Result<Vec<PauliString>> {
    let Some(first) = syms.first() else {
        return Err(Error::InvalidArgument("no symmetry generators".into()));
    };
    let mut elements = vec![PauliString::identity(first.n())?];
    for g in syms {
        let with_g = elements
            .iter()
            .map(|e| e.multiply(g))
            .collect::<Result<Vec<_>>>()?;
        elements.extend(with_g);
    }
    Ok(elements)
}

fn check_symmetries(h: &PauliSumOperator, syms: &[PauliString]) -> Result<()> {
    for (i, g) in syms.iter().enumerate() {
        if g.n() != h.n() {
            return Err(Error::SizeMismatch(h.n(), g.n()));
        }
        if !g.is_hermitian() {
            return Err(Error::NonHermitian(i));
        }
        for other in &syms[..i] {
            if !g.commutes(other)? {
                return Err(Error::SymmetryViolation(format!("{g} anticommutes with {other}")));
            }
        }
        if !h.commutes_termwise(g)? {
            return Err(Error::SymmetryViolation(g.to_string()));
        }
    }
    Ok(())
}

/// Projects `v` onto the joint `+1` eigenspace of `syms`.
pub fn project_symmetric(v: &StateVector, syms: &[PauliString]) -> Result<StateVector> {
    let elements = group_elements(syms)?;
    let weight = 1.0 / elements.len() as f64;
    let kernels: Vec<PauliKernel> = elements.iter().map(|g| PauliKernel::new(g, weight)).collect();
    let mut out = vec![ZERO; v.dim()];
    if elements[0].n() != v.n() {
        return Err(Error::SizeMismatch(v.n(), elements[0].n()));
    }
    apply_kernels(&kernels, v.amplitudes(), &mut out);
    StateVector::from_amplitudes(v.n(), out)
}

/// Lowest-energy state in the simultaneous `+1` eigenspace of `syms`.
pub fn symmetric_ground_state(
    h: &PauliSumOperator,
    syms: &[PauliString],
    opts: &SolverOptions,
) -> Result<SectorGround> {
    check_symmetries(h, syms)?;
    let elements = group_elements(syms)?;
    let weight = 1.0 / elements.len() as f64;
    let dim = 1usize << h.n();
    let op = Projected {
        dim,
        kernels: h.kernels(),
        projector: elements.iter().map(|g| PauliKernel::new(g, weight)).collect(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _attempt in 0..8 {
        let raw = random_vector(dim, &mut rng);
        let mut start = vec![ZERO; dim];
        apply_kernels(&op.projector, &raw, &mut start);
        if norm(&start) < 1e-8 * norm(&raw) {
            continue;
        }
        let pair = lowest_in_complement(&op, &[], start, opts)?;
        let mut amps = vec![ZERO; dim];
        apply_kernels(&op.projector, &pair.vector, &mut amps);
        let mut state = StateVector::from_amplitudes(h.n(), amps)?;
        state.normalize();
        let energy = h.energy(&state)?;
        return Ok(SectorGround {
            state,
            energy,
            residual: pair.residual,
            converged: pair.converged,
            iterations: pair.matvecs,
        });
    }
    Err(Error::EmptySector)
}
