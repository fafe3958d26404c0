//! Isometric-form states of a two-qubit-per-site chain and the onsite
//! Clifford map that turns them into cluster and product states.
//!
//! Site `i` (0-based) owns qubits `2i` (left, `l`) and `2i + 1` (right, `r`).
//! `|Ψ_a⟩` places a Bell bond `|w⟩ = (|00⟩ + |11⟩)/√2` on every pair
//! `(i_r, (i+1)_l)`; `|Ψ_b⟩` places one on every pair `(i_l, i_r)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hamiltonian::Boundary;
use crate::pauli::{CliffordCircuit, Gate, PauliString, StabilizerGroup};
use crate::state::StateVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SiteChain {
    n_sites: usize,
    boundary: Boundary,
}

impl SiteChain {
    pub fn new(n_sites: usize, boundary: Boundary) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::TooSmall {
                what: "sites",
                value: n_sites,
                min: 2,
            });
        }
        if 2 * n_sites > 64 {
            return Err(Error::UnsupportedQubitCount(2 * n_sites));
        }
        Ok(Self { n_sites, boundary })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn n_qubits(&self) -> usize {
        2 * self.n_sites
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn left(&self, site: usize) -> usize {
        2 * site
    }

    pub fn right(&self, site: usize) -> usize {
        2 * site + 1
    }

    /// Bonds `(i_r, (i+1)_l)`, closing the ring when periodic.
    pub fn inter_site_bonds(&self) -> Vec<(usize, usize)> {
        let count = match self.boundary {
            Boundary::Open => self.n_sites - 1,
            Boundary::Periodic => self.n_sites,
        };
        (0..count)
            .map(|i| (self.right(i), self.left((i + 1) % self.n_sites)))
            .collect()
    }

    pub fn onsite_bonds(&self) -> Vec<(usize, usize)> {
        (0..self.n_sites).map(|i| (self.left(i), self.right(i))).collect()
    }
}

/// Product of Bell pairs on `bonds`; every other qubit is `|0⟩`.
fn bond_state(n: usize, bonds: &[(usize, usize)]) -> Result<StateVector> {
    let mut v = StateVector::zeros(n)?;
    let amp = (0.5f64).powf(bonds.len() as f64 / 2.0);
    for sel in 0usize..1 << bonds.len() {
        let index = bonds
            .iter()
            .enumerate()
            .filter(|(k, _)| sel >> k & 1 == 1)
            .fold(0usize, |acc, (_, &(p, q))| acc | 1 << p | 1 << q);
        v.amplitudes_mut()[index] = Complex64::new(amp, 0.0);
    }
    Ok(v)
}

/// Stabilizers `X_p X_q`, `Z_p Z_q` per bond and `Z` on unpaired qubits.
fn bond_group(n: usize, bonds: &[(usize, usize)]) -> Result<StabilizerGroup> {
    let mut gens = Vec::new();
    let mut paired = 0u64;
    for &(p, q) in bonds {
        gens.push(PauliString::x_on(n, [p, q])?);
        gens.push(PauliString::z_on(n, [p, q])?);
        paired |= 1 << p | 1 << q;
    }
    for q in (0..n).filter(|q| paired >> q & 1 == 0) {
        gens.push(PauliString::z_on(n, [q])?);
    }
    StabilizerGroup::new(n, gens)
}

/// `|Ψ_a⟩`: inter-site bonds. Open chains leave `1_l` and `n_r` in `|0⟩`.
pub fn build_psi_a(chain: &SiteChain) -> Result<StateVector> {
    bond_state(chain.n_qubits(), &chain.inter_site_bonds())
}

/// `|Ψ_b⟩`: onsite bonds, a product state across sites.
pub fn build_psi_b(chain: &SiteChain) -> Result<StateVector> {
    bond_state(chain.n_qubits(), &chain.onsite_bonds())
}

pub fn psi_a_stabilizers(chain: &SiteChain) -> Result<StabilizerGroup> {
    bond_group(chain.n_qubits(), &chain.inter_site_bonds())
}

pub fn psi_b_stabilizers(chain: &SiteChain) -> Result<StabilizerGroup> {
    bond_group(chain.n_qubits(), &chain.onsite_bonds())
}

/// Per site: `CNOT(i_l → i_r)` and then `H(i_r)`.
pub fn onsite_circuit(chain: &SiteChain) -> Result<CliffordCircuit> {
    let mut c = CliffordCircuit::new(chain.n_qubits())?;
    for i in 0..chain.n_sites() {
        c.cnot(chain.left(i), chain.right(i))?;
        c.hadamard(chain.right(i))?;
    }
    Ok(c)
}

/// Gate-by-gate state update, first gate first.
pub fn apply_circuit(v: &StateVector, circuit: &CliffordCircuit) -> Result<StateVector> {
    if v.n() != circuit.n() {
        return Err(Error::SizeMismatch(v.n(), circuit.n()));
    }
    let mut out = v.clone();
    let amps = out.amplitudes_mut();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for gate in circuit.gates() {
        match *gate {
            Gate::Hadamard(q) => {
                let bit = 1usize << q;
                for b in (0..amps.len()).filter(|b| b & bit == 0) {
                    let (a0, a1) = (amps[b], amps[b | bit]);
                    amps[b] = (a0 + a1) * s;
                    amps[b | bit] = (a0 - a1) * s;
                }
            }
            Gate::ControlledNot { control, target } => {
                let (c, t) = (1usize << control, 1usize << target);
                for b in (0..amps.len()).filter(|b| b & c != 0 && b & t == 0) {
                    amps.swap(b, b | t);
                }
            }
            Gate::ControlledPhase(a, b) => {
                let both = (1usize << a) | (1usize << b);
                for (i, amp) in amps.iter_mut().enumerate() {
                    if i & both == both {
                        *amp = -*amp;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `CZ` on every neighbouring pair (closing the ring if periodic) applied
/// to `|+⟩^n`.
pub fn cluster_state(n: usize, boundary: Boundary) -> Result<StateVector> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "cluster-state qubits",
            value: n,
            min: 3,
        });
    }
    let mut c = CliffordCircuit::new(n)?;
    for j in 0..n - 1 {
        c.cz(j, j + 1)?;
    }
    if boundary == Boundary::Periodic {
        c.cz(n - 1, 0)?;
    }
    apply_circuit(&StateVector::plus(n)?, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::region_entropy;

    #[test]
    fn chain_validation() {
        assert!(SiteChain::new(1, Boundary::Open).is_err());
        assert!(SiteChain::new(33, Boundary::Open).is_err());
        let c = SiteChain::new(3, Boundary::Periodic).unwrap();
        assert_eq!(c.inter_site_bonds(), vec![(1, 2), (3, 4), (5, 0)]);
    }

    #[test]
    fn periodic_psi_a_marginals_are_mixed() {
        let chain = SiteChain::new(2, Boundary::Periodic).unwrap();
        let v = build_psi_a(&chain).unwrap();
        for q in 0..4 {
            assert!((region_entropy(&v, &[q]).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn open_psi_a_edges_are_zero() {
        let chain = SiteChain::new(2, Boundary::Open).unwrap();
        let v = build_psi_a(&chain).unwrap();
        assert!(region_entropy(&v, &[0]).unwrap().abs() < 1e-12);
        assert!(region_entropy(&v, &[3]).unwrap().abs() < 1e-12);
        assert!((region_entropy(&v, &[1]).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn psi_b_is_product_across_sites() {
        let chain = SiteChain::new(3, Boundary::Open).unwrap();
        let v = build_psi_b(&chain).unwrap();
        for cut in [vec![0, 1], vec![0, 1, 2, 3]] {
            assert!(region_entropy(&v, &cut).unwrap().abs() < 1e-12);
        }
        let w = bond_state(2, &[(0, 1)]).unwrap();
        let two = SiteChain::new(2, Boundary::Open).unwrap();
        let ww = w.tensor(&w).unwrap();
        assert!(build_psi_b(&two).unwrap().max_abs_diff(&ww).unwrap() < 1e-15);
    }

    #[test]
    fn onsite_circuit_order() {
        let chain = SiteChain::new(2, Boundary::Open).unwrap();
        let c = onsite_circuit(&chain).unwrap();
        assert_eq!(
            c.gates(),
            &[
                Gate::ControlledNot { control: 0, target: 1 },
                Gate::Hadamard(1),
                Gate::ControlledNot { control: 2, target: 3 },
                Gate::Hadamard(3),
            ]
        );
    }

    #[test]
    fn hadamard_makes_plus() {
        let mut c = CliffordCircuit::new(1).unwrap();
        c.hadamard(0).unwrap();
        let v = apply_circuit(&StateVector::basis(1, 0).unwrap(), &c).unwrap();
        assert!(v.max_abs_diff(&StateVector::plus(1).unwrap()).unwrap() < 1e-15);
        assert!(apply_circuit(&StateVector::plus(2).unwrap(), &c).is_err());
    }

    #[test]
    fn cluster_state_stabilizers() {
        let v = cluster_state(8, Boundary::Periodic).unwrap();
        for j in 0..8 {
            let g = PauliString::from_sparse(8, &[((j + 7) % 8, 'Z'), (j, 'X'), ((j + 1) % 8, 'Z')]).unwrap();
            assert!((v.expectation(&g).unwrap().re - 1.0).abs() < 1e-12);
        }
        assert!(cluster_state(2, Boundary::Open).is_err());
    }
}
