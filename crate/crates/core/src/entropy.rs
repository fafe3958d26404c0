//! Reduced density matrices, von Neumann entropies and the topological
//! combination `S_topo = S_AB + S_BC − S_B − S_ABC` over chain cuts.
//!
//! All entropies are in bits.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::StabilizerGroup;
use crate::state::StateVector;

/// Default cap on the number of qubits kept by [`reduced_density`].
pub const DEFAULT_SUBSET_CAP: usize = 14;

const CLIP: f64 = 1e-12;

/// `ρ_S = Tr_{S̄} |v⟩⟨v|`, indexed by the subset's qubits in ascending order.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    pub qubits: Vec<usize>,
    pub matrix: DMatrix<Complex64>,
    /// Set when the input state was not normalized and had to be rescaled.
    pub renormalized: bool,
}

fn subset_mask(n: usize, subset: &[usize]) -> Result<u64> {
    let mut mask = 0u64;
    for &q in subset {
        if q >= n {
            return Err(Error::QubitIndex { index: q, n });
        }
        mask |= 1 << q;
    }
    Ok(mask)
}

fn bits_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|q| mask >> q & 1 == 1).collect()
}

/// Packs the bits of `index` at `positions` into a dense integer.
#[inline]
fn gather(index: usize, positions: &[usize]) -> usize {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (k, &p)| acc | (index >> p & 1) << k)
}

fn partial_trace(v: &StateVector, keep: &[usize]) -> DMatrix<Complex64> {
    let n = v.n();
    let keep_mask = keep.iter().fold(0u64, |m, &q| m | 1 << q);
    let rest = bits_of(!keep_mask & ((1u64 << n) - 1));
    let rows = 1usize << keep.len();
    let cols = 1usize << rest.len();
    let mut m = DMatrix::<Complex64>::zeros(rows, cols);
    for (b, a) in v.amplitudes().iter().enumerate() {
        m[(gather(b, keep), gather(b, &rest))] = *a;
    }
    &m * m.adjoint()
}

/// Exact partial trace onto `subset` (any order, duplicates ignored).
pub fn reduced_density(v: &StateVector, subset: &[usize]) -> Result<DensityMatrix> {
    reduced_density_with_cap(v, subset, DEFAULT_SUBSET_CAP)
}

pub fn reduced_density_with_cap(v: &StateVector, subset: &[usize], cap: usize) -> Result<DensityMatrix> {
    let mask = subset_mask(v.n(), subset)?;
    let qubits = bits_of(mask);
    if qubits.len() > cap {
        return Err(Error::TooLarge {
            what: "reduced-density qubits",
            value: qubits.len(),
            max: cap,
        });
    }
    let norm = v.norm();
    let renormalized = (norm - 1.0).abs() > 1e-12;
    let mut matrix = partial_trace(v, &qubits);
    if renormalized {
        if norm == 0.0 {
            return Err(Error::InvalidArgument("zero state vector".into()));
        }
        matrix /= Complex64::new(norm * norm, 0.0);
    }
    Ok(DensityMatrix {
        qubits,
        matrix,
        renormalized,
    })
}

/// Eigenvalues of a Hermitian matrix, using the real solver when possible.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    if m.iter().all(|z| z.im == 0.0) {
        m.map(|z| z.re).symmetric_eigenvalues().iter().copied().collect()
    } else {
        m.symmetric_eigenvalues().iter().copied().collect()
    }
}

/// `−Σ λ log₂ λ` over the spectrum of `rho`, with `λ < 1e−12` dropped.
/// Rounding of a pure spectrum (`λ = 1 + ε`) is clamped to zero.
pub fn von_neumann_bits(rho: &DMatrix<Complex64>) -> Result<f64> {
    let mut s = 0.0;
    for lambda in hermitian_eigenvalues(rho) {
        if lambda < -1e-9 {
            return Err(Error::NegativeEigenvalue(lambda));
        }
        if lambda > CLIP {
            s -= lambda * lambda.log2();
        }
    }
    Ok(s.max(0.0))
}

/// Entropy of `subset` in a pure state, evaluated on whichever of the
/// subset and its complement is smaller.
pub fn region_entropy(v: &StateVector, subset: &[usize]) -> Result<f64> {
    let n = v.n();
    let mask = subset_mask(n, subset)?;
    let complement = !mask & ((1u64 << n) - 1);
    let side = if mask.count_ones() <= complement.count_ones() {
        mask
    } else {
        complement
    };
    if side == 0 {
        return Ok(0.0);
    }
    let rho = reduced_density_with_cap(v, &bits_of(side), n.div_ceil(2).max(DEFAULT_SUBSET_CAP))?;
    von_neumann_bits(&rho.matrix)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CutKind {
    /// `A | B | C`, covering the chain.
    #[serde(rename = "t")]
    Tripartite,
    /// `A | B | D | C` with the bulk block `D` traced out.
    #[serde(rename = "q")]
    Quadripartite,
}

impl CutKind {
    pub fn min_qubits(self) -> usize {
        match self {
            CutKind::Tripartite => 6,
            CutKind::Quadripartite => 8,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CutKind::Tripartite => "t",
            CutKind::Quadripartite => "q",
        }
    }
}

impl fmt::Display for CutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CutKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" | "tripartite" => Ok(CutKind::Tripartite),
            "q" | "quadripartite" => Ok(CutKind::Quadripartite),
            other => Err(Error::InvalidArgument(format!("unknown cut {other:?}"))),
        }
    }
}

/// Contiguous chain regions; `d` is present only for quadripartite cuts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutLayout {
    pub n: usize,
    pub kind: CutKind,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Option<Vec<usize>>,
}

fn block_sizes(n: usize, parts: usize) -> Vec<usize> {
    (0..parts)
        .map(|i| n / parts + usize::from(i < n % parts))
        .collect()
}

impl CutLayout {
    /// As-equal-as-possible blocks, remainder given to the leftmost blocks.
    /// Quadripartite blocks run `A, B, D, C` along the chain.
    pub fn equal(n: usize, kind: CutKind) -> Result<Self> {
        let parts = match kind {
            CutKind::Tripartite => 3,
            CutKind::Quadripartite => 4,
        };
        if n < kind.min_qubits() {
            return Err(Error::TooSmall {
                what: "qubits for this cut",
                value: n,
                min: kind.min_qubits(),
            });
        }
        let mut ends = Vec::new();
        let mut acc = 0;
        for s in block_sizes(n, parts).into_iter().take(parts - 1) {
            acc += s;
            ends.push(acc);
        }
        Self::from_ends(n, kind, &ends)
    }

    /// Blocks from 1-based inclusive right ends: `a_end,b_end` for
    /// tripartite, `a_end,b_end,d_end` for quadripartite.
    pub fn from_ends(n: usize, kind: CutKind, ends: &[usize]) -> Result<Self> {
        let want = match kind {
            CutKind::Tripartite => 2,
            CutKind::Quadripartite => 3,
        };
        if ends.len() != want {
            return Err(Error::Layout(format!(
                "{kind} cut needs {want} block ends, got {}",
                ends.len()
            )));
        }
        let mut bounds = vec![0];
        bounds.extend_from_slice(ends);
        bounds.push(n);
        if bounds.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Layout(format!(
                "block ends {ends:?} must be strictly increasing within 1..{n}"
            )));
        }
        let block = |i: usize| -> Vec<usize> { (bounds[i]..bounds[i + 1]).collect() };
        let layout = match kind {
            CutKind::Tripartite => Self {
                n,
                kind,
                a: block(0),
                b: block(1),
                c: block(2),
                d: None,
            },
            CutKind::Quadripartite => Self {
                n,
                kind,
                a: block(0),
                b: block(1),
                d: Some(block(2)),
                c: block(3),
            },
        };
        Ok(layout)
    }

    /// Parses `--cuts`-style text such as `"3,6,9"`.
    pub fn parse_ends(text: &str) -> Result<Vec<usize>> {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Layout(format!("bad block end {t:?} in {text:?}")))
            })
            .collect()
    }

    fn union(parts: &[&[usize]]) -> Vec<usize> {
        let mut v: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    pub fn ab(&self) -> Vec<usize> {
        Self::union(&[&self.a, &self.b])
    }

    pub fn bc(&self) -> Vec<usize> {
        Self::union(&[&self.b, &self.c])
    }

    pub fn abc(&self) -> Vec<usize> {
        Self::union(&[&self.a, &self.b, &self.c])
    }
}

impl fmt::Display for CutLayout {
    /// 1-based ranges, e.g. `A=1..3 B=4..6 D=7..9 C=10..12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |v: &[usize]| format!("{}..{}", v[0] + 1, v[v.len() - 1] + 1);
        write!(f, "A={} B={}", r(&self.a), r(&self.b))?;
        if let Some(d) = &self.d {
            write!(f, " D={}", r(d))?;
        }
        write!(f, " C={}", r(&self.c))
    }
}

/// The four region entropies and their topological combination.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopoEntropyRecord {
    pub s_ab: f64,
    pub s_bc: f64,
    pub s_b: f64,
    pub s_abc: f64,
    pub s_topo: f64,
    pub layout: CutLayout,
}

impl TopoEntropyRecord {
    fn from_parts(s_ab: f64, s_bc: f64, s_b: f64, s_abc: f64, layout: CutLayout) -> Self {
        Self {
            s_ab,
            s_bc,
            s_b,
            s_abc,
            s_topo: s_ab + s_bc - s_b - s_abc,
            layout,
        }
    }
}

fn check_layout(n: usize, layout: &CutLayout) -> Result<()> {
    if layout.n != n {
        return Err(Error::Layout(format!(
            "layout is for {} qubits, state has {n}",
            layout.n
        )));
    }
    Ok(())
}

/// `S_topo` of a pure state for the given cut.
pub fn topo_entropy(v: &StateVector, layout: &CutLayout) -> Result<TopoEntropyRecord> {
    check_layout(v.n(), layout)?;
    let s_ab = region_entropy(v, &layout.ab())?;
    let s_bc = region_entropy(v, &layout.bc())?;
    let s_b = region_entropy(v, &layout.b)?;
    let s_abc = region_entropy(v, &layout.abc())?;
    Ok(TopoEntropyRecord::from_parts(s_ab, s_bc, s_b, s_abc, layout.clone()))
}

fn mask(qubits: &[usize]) -> u64 {
    qubits.iter().fold(0, |m, &q| m | 1 << q)
}

/// The same combination from exact stabilizer ranks.
pub fn stabilizer_topo_entropy(group: &StabilizerGroup, layout: &CutLayout) -> Result<TopoEntropyRecord> {
    check_layout(group.n(), layout)?;
    let s = |q: &[usize]| group.entropy(mask(q)).map(|e| e as f64);
    Ok(TopoEntropyRecord::from_parts(
        s(&layout.ab())?,
        s(&layout.bc())?,
        s(&layout.b)?,
        s(&layout.abc())?,
        layout.clone(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bell() -> StateVector {
        let a = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = StateVector::zeros(2).unwrap();
        v.amplitudes_mut()[0] = Complex64::new(a, 0.0);
        v.amplitudes_mut()[3] = Complex64::new(a, 0.0);
        v
    }

    fn ghz(n: usize) -> StateVector {
        let a = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = StateVector::zeros(n).unwrap();
        v.amplitudes_mut()[0] = Complex64::new(a, 0.0);
        v.amplitudes_mut()[(1 << n) - 1] = Complex64::new(a, 0.0);
        v
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let rho = reduced_density(&bell(), &[0]).unwrap();
        assert!((rho.matrix[(0, 0)].re - 0.5).abs() < 1e-15);
        assert!((rho.matrix[(1, 1)].re - 0.5).abs() < 1e-15);
        assert!(rho.matrix[(0, 1)].norm() < 1e-15);
        assert!(!rho.renormalized);
    }

    #[test]
    fn ghz_pair_has_one_bit() {
        let rho = reduced_density(&ghz(4), &[0, 1]).unwrap();
        assert!((von_neumann_bits(&rho.matrix).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_endpoints() {
        let pure = reduced_density(&StateVector::plus(3).unwrap(), &[0, 1, 2]).unwrap();
        assert!(von_neumann_bits(&pure.matrix).unwrap().abs() < 1e-12);
        let mixed = DMatrix::from_diagonal_element(4, 4, Complex64::new(0.25, 0.0));
        assert!((von_neumann_bits(&mixed).unwrap() - 2.0).abs() < 1e-12);
        let bad = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(1.1, 0.0),
            Complex64::new(-0.1, 0.0),
        ]));
        assert!(matches!(von_neumann_bits(&bad), Err(Error::NegativeEigenvalue(_))));
    }

    #[test]
    fn unnormalized_input_is_flagged() {
        let mut v = bell();
        v.amplitudes_mut().iter_mut().for_each(|a| *a *= 3.0);
        let rho = reduced_density(&v, &[1]).unwrap();
        assert!(rho.renormalized);
        assert!((rho.matrix.trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn subset_cap_enforced() {
        let v = StateVector::plus(4).unwrap();
        assert!(reduced_density_with_cap(&v, &[0, 1, 2], 2).is_err());
        assert!(reduced_density(&v, &[4]).is_err());
    }

    #[test]
    fn layouts() {
        let t = CutLayout::equal(12, CutKind::Tripartite).unwrap();
        assert_eq!(t.to_string(), "A=1..4 B=5..8 C=9..12");
        let q = CutLayout::equal(12, CutKind::Quadripartite).unwrap();
        assert_eq!(q.to_string(), "A=1..3 B=4..6 D=7..9 C=10..12");
        let t9 = CutLayout::equal(9, CutKind::Tripartite).unwrap();
        assert_eq!((t9.a.len(), t9.b.len(), t9.c.len()), (3, 3, 3));
        let t13 = CutLayout::equal(13, CutKind::Tripartite).unwrap();
        assert_eq!((t13.a.len(), t13.b.len(), t13.c.len()), (5, 4, 4));
        let q18 = CutLayout::equal(18, CutKind::Quadripartite).unwrap();
        assert_eq!(q18.to_string(), "A=1..5 B=6..10 D=11..14 C=15..18");
        assert!(CutLayout::equal(5, CutKind::Tripartite).is_err());
        assert!(CutLayout::equal(7, CutKind::Quadripartite).is_err());
    }

    #[test]
    fn explicit_ends() {
        let q = CutLayout::from_ends(12, CutKind::Quadripartite, &[2, 6, 10]).unwrap();
        assert_eq!(q.to_string(), "A=1..2 B=3..6 D=7..10 C=11..12");
        assert!(CutLayout::from_ends(12, CutKind::Tripartite, &[4, 4]).is_err());
        assert!(CutLayout::from_ends(12, CutKind::Tripartite, &[4, 12]).is_err());
        assert!(CutLayout::from_ends(12, CutKind::Tripartite, &[4]).is_err());
        assert_eq!(CutLayout::parse_ends("3, 6,9").unwrap(), vec![3, 6, 9]);
        assert!(CutLayout::parse_ends("3,x").is_err());
    }

    #[test]
    fn product_state_has_no_topological_entropy() {
        let v = StateVector::plus(8).unwrap();
        for kind in [CutKind::Tripartite, CutKind::Quadripartite] {
            let r = topo_entropy(&v, &CutLayout::equal(8, kind).unwrap()).unwrap();
            assert!(r.s_topo.abs() < 1e-12);
        }
    }

    #[test]
    fn layout_size_must_match_state() {
        let v = StateVector::plus(8).unwrap();
        let l = CutLayout::equal(9, CutKind::Tripartite).unwrap();
        assert!(topo_entropy(&v, &l).is_err());
    }
}
