use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("qubit count {0} is outside the supported range 1..=64")]
    UnsupportedQubitCount(usize),
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitIndex { index: usize, n: usize },
    #[error("invalid Pauli string {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("generators {0} and {1} anticommute")]
    NonCommuting(usize, usize),
    #[error("generator {0} is dependent on the preceding generators")]
    DependentGenerator(usize),
    #[error("generator {0} is not Hermitian (phase must be +1 or -1)")]
    NonHermitian(usize),
    #[error("{generators} generators on {n} qubits do not describe a pure state")]
    NotFullRank { generators: usize, n: usize },
    #[error("GF(2) subspace of dimension {0} is too large to enumerate")]
    SubspaceTooLarge(usize),
    #[error("{what} = {value} is below the minimum {min}")]
    TooSmall {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("{what} = {value} exceeds the limit {max}")]
    TooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("density matrix has eigenvalue {0:e} below -1e-9")]
    NegativeEigenvalue(f64),
    #[error("symmetry generator {0} does not commute with the operator")]
    SymmetryViolation(String),
    #[error("symmetry projector annihilated every start vector")]
    EmptySector,
    #[error("invalid layout: {0}")]
    Layout(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
