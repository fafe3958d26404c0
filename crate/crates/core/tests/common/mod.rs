#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

use spt_core::{CliffordCircuit, Gate, PauliString, StabilizerGroup, StateVector};

pub type C64 = Complex64;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn sigma(letter: char) -> [[C64; 2]; 2] {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    match letter {
        'I' => [[l, o], [o, l]],
        'X' => [[o, l], [l, o]],
        'Y' => [[o, -i], [i, o]],
        'Z' => [[l, o], [o, -l]],
        _ => unreachable!(),
    }
}

/// Kronecker product of the letters, qubit 0 on the least significant bit,
/// times `i^phase`.
pub fn dense_pauli(p: &PauliString) -> DMatrix<C64> {
    let n = p.n();
    let dim = 1usize << n;
    let scalar = c(0.0, 1.0).powu(p.phase() as u32);
    let mats: Vec<_> = (0..n).map(|q| sigma(p.letter(q))).collect();
    DMatrix::from_fn(dim, dim, |r, col| {
        mats.iter()
            .enumerate()
            .fold(scalar, |acc, (q, m)| acc * m[r >> q & 1][col >> q & 1])
    })
}

pub fn dense_state(v: &StateVector) -> nalgebra::DVector<C64> {
    nalgebra::DVector::from_column_slice(v.amplitudes())
}

pub fn max_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Any Pauli string on `n` qubits with any phase.
pub fn pauli(n: usize) -> impl Strategy<Value = PauliString> {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (any::<u64>(), any::<u64>(), 0u8..4)
        .prop_map(move |(x, z, ph)| PauliString::from_masks(n, x & mask, z & mask, ph).unwrap())
}

pub fn gate(n: usize) -> impl Strategy<Value = Gate> {
    (0usize..3, 0..n, 1..n).prop_map(move |(kind, a, shift)| {
        let b = (a + shift) % n;
        match kind {
            0 => Gate::Hadamard(a),
            1 => Gate::ControlledNot { control: a, target: b },
            _ => Gate::ControlledPhase(a, b),
        }
    })
}

pub fn circuit(n: usize, max_gates: usize) -> impl Strategy<Value = CliffordCircuit> {
    prop::collection::vec(gate(n), 0..max_gates).prop_map(move |gates| {
        let mut c = CliffordCircuit::new(n).unwrap();
        for g in gates {
            c.push(g).unwrap();
        }
        c
    })
}

/// `C|0…0⟩` and its stabilizer group `{C Z_q C†}`.
pub fn clifford_state(c: &CliffordCircuit) -> (StateVector, StabilizerGroup) {
    let n = c.n();
    let state = spt_core::transforms::apply_circuit(&StateVector::basis(n, 0).unwrap(), c).unwrap();
    let gens = (0..n)
        .map(|q| PauliString::z_on(n, [q]).unwrap().conjugate(c).unwrap())
        .collect();
    (state, StabilizerGroup::new(n, gens).unwrap())
}
