//! Symmetry-protected topological order in qubit chains.
//!
//! Stabilizer algebra, model Hamiltonians, a matrix-free Lanczos solver with
//! symmetry-sector projection, entanglement entropies and the isometric
//! matrix-product states the cluster chain is built from.

pub mod commands;
pub mod entropy;
pub mod error;
mod gf2;
pub mod hamiltonian;
pub mod pauli;
pub mod spectra;
pub mod state;
pub mod transforms;

pub use error::{Error, Result};
pub use hamiltonian::{Boundary, Model, ModelSpec, PauliSumOperator, Sector};
pub use pauli::{CliffordCircuit, Gate, PauliString, StabilizerGroup};
pub use spectra::{SectorGround, SolverOptions, SpectrumResult};
pub use state::StateVector;
