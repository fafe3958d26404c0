//! The three chain models as Pauli sums, plus their protecting symmetries.
//!
//! * `clu`:  `−Σ Z_{j−1} X_j Z_{j+1} + B Σ X_j`
//! * `syb`:  `−Σ Z_{j−1} Z_{j+1} + B Σ X_j`
//! * `zxxz`: `−Σ Z_{j−1} X_j X_{j+1} Z_{j+2} + B Σ X_j`
//!
//! Open chains keep only the terms that fit inside the chain (centres
//! `2..=N−1` for the three-body models, `2..=N−2` for ZXXZ, 1-based);
//! periodic chains take every `j` with indices wrapped mod `N`.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{PauliString, StabilizerGroup};
use crate::state::{PauliKernel, StateVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "clu")]
    Cluster,
    #[serde(rename = "syb")]
    SymmetryBreaking,
    #[serde(rename = "zxxz")]
    Zxxz,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::Cluster, Model::SymmetryBreaking, Model::Zxxz];

    pub fn min_qubits(self) -> usize {
        match self {
            Model::Cluster | Model::SymmetryBreaking => 4,
            Model::Zxxz => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::Cluster => "clu",
            Model::SymmetryBreaking => "syb",
            Model::Zxxz => "zxxz",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clu" => Ok(Model::Cluster),
            "syb" => Ok(Model::SymmetryBreaking),
            "zxxz" => Ok(Model::Zxxz),
            other => Err(Error::InvalidArgument(format!("unknown model {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Open,
    Periodic,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Open => "open",
            Boundary::Periodic => "periodic",
        })
    }
}

impl FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(Boundary::Open),
            "periodic" => Ok(Boundary::Periodic),
            other => Err(Error::InvalidArgument(format!("unknown boundary {other:?}"))),
        }
    }
}

/// Which Hamiltonian to build.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub model: Model,
    pub n: usize,
    pub field_b: f64,
    pub boundary: Boundary,
}

impl ModelSpec {
    pub fn new(model: Model, n: usize, field_b: f64, boundary: Boundary) -> Result<Self> {
        let spec = Self {
            model,
            n,
            field_b,
            boundary,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn open(model: Model, n: usize, field_b: f64) -> Result<Self> {
        Self::new(model, n, field_b, Boundary::Open)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < self.model.min_qubits() {
            return Err(Error::TooSmall {
                what: "qubit count",
                value: self.n,
                min: self.model.min_qubits(),
            });
        }
        if self.n > 64 {
            return Err(Error::UnsupportedQubitCount(self.n));
        }
        if !self.field_b.is_finite() || self.field_b < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "field strength must be finite and non-negative, got {}",
                self.field_b
            )));
        }
        Ok(())
    }

    pub fn with_field(mut self, field_b: f64) -> Self {
        self.field_b = field_b;
        self
    }
}

/// Real-weighted sum of Hermitian Pauli strings.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSumOperator {
    n: usize,
    terms: Vec<(f64, PauliString)>,
}

impl PauliSumOperator {
    pub fn new(n: usize, terms: Vec<(f64, PauliString)>) -> Result<Self> {
        for (i, (c, p)) in terms.iter().enumerate() {
            if p.n() != n {
                return Err(Error::SizeMismatch(n, p.n()));
            }
            if !c.is_finite() {
                return Err(Error::InvalidArgument(format!("term {i} has coefficient {c}")));
            }
            if !p.is_hermitian() {
                return Err(Error::NonHermitian(i));
            }
        }
        Ok(Self { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every term commutes with `p`; sufficient for `[H, p] = 0`.
    pub fn commutes_termwise(&self, p: &PauliString) -> Result<bool> {
        for (_, t) in &self.terms {
            if !t.commutes(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn kernels(&self) -> Vec<PauliKernel> {
        self.terms
            .iter()
            .map(|(c, p)| PauliKernel::new(p, *c))
            .collect()
    }

    /// `out = H · v`, partitioned over output indices.
    pub fn apply_into(&self, v: &[Complex64], out: &mut [Complex64]) -> Result<()> {
        let dim = 1usize << self.n;
        if v.len() != dim || out.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: if v.len() != dim { v.len() } else { out.len() },
            });
        }
        let kernels = self.kernels();
        apply_kernels(&kernels, v, out);
        Ok(())
    }

    /// `H · v` as a new state (not normalized).
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: 1 << self.n,
                found: v.dim(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); v.dim()];
        self.apply_into(v.amplitudes(), &mut out)?;
        StateVector::from_amplitudes(self.n, out)
    }

    /// `⟨v|H|v⟩` (real part).
    pub fn energy(&self, v: &StateVector) -> Result<f64> {
        let hv = self.apply(v)?;
        Ok(v.inner(&hv)?.re)
    }

    /// Explicit `2^n × 2^n` matrix; `n ≤ 12`.
    pub fn to_dense(&self) -> Result<DMatrix<Complex64>> {
        const MAX: usize = 12;
        if self.n > MAX {
            return Err(Error::TooLarge {
                what: "qubits for a dense matrix",
                value: self.n,
                max: MAX,
            });
        }
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        for k in self.kernels() {
            for col in 0..dim {
                let sign = if (k.z & col).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
                m[(col ^ k.x, col)] += k.factor * sign;
            }
        }
        Ok(m)
    }
}

const PARALLEL_MIN_DIM: usize = 1 << 12;

pub(crate) fn apply_kernels(kernels: &[PauliKernel], v: &[Complex64], out: &mut [Complex64]) {
    let last = v.len() - 1;
    // Term-by-term over a block keeps the reads of `v` contiguous.
    let fill = |base: usize, chunk: &mut [Complex64]| {
        chunk.fill(Complex64::new(0.0, 0.0));
        for k in kernels {
            if k.factor.im == 0.0 {
                let c = k.factor.re;
                for (i, o) in chunk.iter_mut().enumerate() {
                    let b = ((base + i) ^ k.x) & last;
                    let s = if (k.z & b).count_ones() & 1 == 0 { c } else { -c };
                    *o += v[b] * s;
                }
            } else {
                for (i, o) in chunk.iter_mut().enumerate() {
                    *o += k.entry(v, base + i);
                }
            }
        }
    };
    if out.len() >= PARALLEL_MIN_DIM {
        out.par_chunks_mut(1024)
            .enumerate()
            .for_each(|(c, chunk)| fill(c * 1024, chunk));
    } else {
        fill(0, out);
    }
}

fn wrap(j: isize, n: usize) -> usize {
    j.rem_euclid(n as isize) as usize
}

/// Unsigned stabilizer terms of the model (the `−1`-weighted part).
pub fn stabilizer_terms(spec: &ModelSpec) -> Result<Vec<PauliString>> {
    spec.validate()?;
    let n = spec.n;
    let centres: Vec<isize> = match (spec.model, spec.boundary) {
        (_, Boundary::Periodic) => (0..n as isize).collect(),
        (Model::Cluster | Model::SymmetryBreaking, Boundary::Open) => (1..n as isize - 1).collect(),
        (Model::Zxxz, Boundary::Open) => (1..n as isize - 2).collect(),
    };
    centres
        .into_iter()
        .map(|j| {
            let ops: Vec<(usize, char)> = match spec.model {
                Model::Cluster => vec![(wrap(j - 1, n), 'Z'), (wrap(j, n), 'X'), (wrap(j + 1, n), 'Z')],
                Model::SymmetryBreaking => vec![(wrap(j - 1, n), 'Z'), (wrap(j + 1, n), 'Z')],
                Model::Zxxz => vec![
                    (wrap(j - 1, n), 'Z'),
                    (wrap(j, n), 'X'),
                    (wrap(j + 1, n), 'X'),
                    (wrap(j + 2, n), 'Z'),
                ],
            };
            PauliString::from_sparse(n, &ops)
        })
        .collect()
}

/// The model Hamiltonian.
pub fn build(spec: &ModelSpec) -> Result<PauliSumOperator> {
    let mut terms: Vec<(f64, PauliString)> = stabilizer_terms(spec)?
        .into_iter()
        .map(|p| (-1.0, p))
        .collect();
    if spec.field_b > 0.0 {
        for j in 0..spec.n {
            terms.push((spec.field_b, PauliString::x_on(spec.n, [j])?));
        }
    }
    PauliSumOperator::new(spec.n, terms)
}

/// Protecting symmetry generators: `X̄₁, X̄₂` (odd and even sites) for `clu`
/// and `syb`; `X̄₁, X̄₂, X̄₃` (sites by residue mod 3) for `zxxz`.
pub fn symmetry_generators(spec: &ModelSpec) -> Result<Vec<PauliString>> {
    spec.validate()?;
    let period = match spec.model {
        Model::Cluster | Model::SymmetryBreaking => 2,
        Model::Zxxz => 3,
    };
    (0..period)
        .map(|r| PauliString::x_on(spec.n, (r..spec.n).step_by(period)))
        .collect()
}

/// Which joint eigenspace of the symmetry generators to target.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    /// Every `X̄ᵢ = +1`.
    Plus,
    /// `X̄ᵢ = (−1)^{|supp X̄ᵢ|}`, the eigenvalues of `|−⟩^⊗N`. The field term
    /// `+B Σ X_j` selects this sector for the exact ground state at `B > 0`.
    #[default]
    Field,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sector::Plus => "plus",
            Sector::Field => "field",
        })
    }
}

impl FromStr for Sector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(Sector::Plus),
            "field" => Ok(Sector::Field),
            other => Err(Error::InvalidArgument(format!("unknown sector {other:?}"))),
        }
    }
}

/// Symmetry generators signed so that the requested sector is their joint
/// `+1` eigenspace.
pub fn sector_generators(spec: &ModelSpec, sector: Sector) -> Result<Vec<PauliString>> {
    let gens = symmetry_generators(spec)?;
    Ok(match sector {
        Sector::Plus => gens,
        Sector::Field => gens
            .into_iter()
            .map(|g| if g.weight() % 2 == 1 { g.negated() } else { g })
            .collect(),
    })
}

/// Stabilizer group spanned by the model's terms (a maximal independent
/// subset when periodic terms are redundant).
pub fn stabilizer_group(spec: &ModelSpec) -> Result<StabilizerGroup> {
    greedy_group(spec.n, stabilizer_terms(spec)?)
}

/// Stabilizer group of the symmetric ground state at `B = 0`: the model's
/// terms together with the symmetry generators, redundant elements dropped.
pub fn symmetric_state_group(spec: &ModelSpec) -> Result<StabilizerGroup> {
    let mut gens = stabilizer_terms(spec)?;
    gens.extend(symmetry_generators(spec)?);
    greedy_group(spec.n, gens)
}

fn greedy_group(n: usize, candidates: Vec<PauliString>) -> Result<StabilizerGroup> {
    let mut group = StabilizerGroup::empty(n)?;
    for g in candidates {
        if group.contains_up_to_sign(&g)? {
            continue;
        }
        group = group.extended([g])?;
    }
    Ok(group)
}
