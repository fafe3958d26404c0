//! Dense state vectors over the computational basis.
//!
//! Qubit `j` is bit `j` of the amplitude index (qubit 0 least significant),
//! and a set bit means `|1⟩`.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::pauli::PauliString;

/// Largest register a dense state may span.
pub const MAX_STATE_QUBITS: usize = 28;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(n: usize) -> Result<Self> {
        check(n)?;
        Ok(Self {
            n,
            amps: vec![Complex64::new(0.0, 0.0); 1 << n],
        })
    }

    /// The computational basis state `|index⟩`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let mut v = Self::zeros(n)?;
        if index >= v.amps.len() {
            return Err(Error::DimensionMismatch {
                expected: v.amps.len(),
                found: index,
            });
        }
        v.amps[index] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    /// `|+⟩^⊗n`.
    pub fn plus(n: usize) -> Result<Self> {
        check(n)?;
        let a = (1.0 / (1u64 << n) as f64).sqrt();
        Ok(Self {
            n,
            amps: vec![Complex64::new(a, 0.0); 1 << n],
        })
    }

    /// `|−⟩^⊗n`.
    pub fn minus(n: usize) -> Result<Self> {
        check(n)?;
        let a = (1.0 / (1u64 << n) as f64).sqrt();
        let amps = (0..1usize << n)
            .map(|b| {
                let s = if b.count_ones() % 2 == 0 { a } else { -a };
                Complex64::new(s, 0.0)
            })
            .collect();
        Ok(Self { n, amps })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check(n)?;
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: amps.len(),
            });
        }
        Ok(Self { n, amps })
    }

    /// Normalized vector with independent Gaussian real and imaginary parts.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check(n)?;
        let amps = (0..1usize << n)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let mut v = Self { n, amps };
        v.normalize();
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Scales to unit norm; a zero vector is left untouched.
    pub fn normalize(&mut self) -> f64 {
        let norm = self.norm();
        if norm > 0.0 {
            let inv = 1.0 / norm;
            self.amps.iter_mut().for_each(|a| *a *= inv);
        }
        norm
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.same_dim(other)?;
        Ok(dot(&self.amps, &other.amps))
    }

    /// `|⟨self|other⟩|²` for normalized inputs.
    pub fn fidelity(&self, other: &Self) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// `self ⊗ other`, with `self` on the low qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        check(n)?;
        let mut amps = Vec::with_capacity(1 << n);
        for b in &other.amps {
            for a in &self.amps {
                amps.push(a * b);
            }
        }
        Ok(Self { n, amps })
    }

    /// `P|self⟩`.
    pub fn apply_pauli(&self, p: &PauliString) -> Result<Self> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch(self.n, p.n()));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        let kernel = PauliKernel::new(p, 1.0);
        kernel.accumulate(&self.amps, &mut out);
        Ok(Self { n: self.n, amps: out })
    }

    /// `⟨self|P|self⟩`.
    pub fn expectation(&self, p: &PauliString) -> Result<Complex64> {
        let pv = self.apply_pauli(p)?;
        self.inner(&pv)
    }

    /// Largest amplitude-wise distance `max |a_i − b_i|`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_dim(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_STATE_QUBITS {
        return Err(Error::TooLarge {
            what: "state-vector qubits",
            value: n,
            max: MAX_STATE_QUBITS,
        });
    }
    Ok(())
}

pub(crate) fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Precomputed action of `c · P` on amplitude arrays:
/// `(cP v)[b ⊕ x] = c · i^k · (−1)^{popcount(z & b)} · v[b]`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct PauliKernel {
    pub(crate) x: usize,
    pub(crate) z: usize,
    pub(crate) factor: Complex64,
}

impl PauliKernel {
    pub(crate) fn new(p: &PauliString, coeff: f64) -> Self {
        let k = p.xz_phase();
        let unit = match k {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        Self {
            x: p.x_mask() as usize,
            z: p.z_mask() as usize,
            factor: unit * coeff,
        }
    }

    /// Contribution to `out[t]`.
    #[inline]
    pub(crate) fn entry(&self, v: &[Complex64], t: usize) -> Complex64 {
        let b = t ^ self.x;
        let a = v[b] * self.factor;
        if (self.z & b).count_ones().is_multiple_of(2) {
            a
        } else {
            -a
        }
    }

    pub(crate) fn accumulate(&self, v: &[Complex64], out: &mut [Complex64]) {
        for (t, o) in out.iter_mut().enumerate() {
            *o += self.entry(v, t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basis_and_plus_states() {
        let v = StateVector::basis(2, 3).unwrap();
        assert_eq!(v.amplitudes()[3], Complex64::new(1.0, 0.0));
        assert!(StateVector::basis(2, 4).is_err());
        assert!((StateVector::plus(5).unwrap().norm() - 1.0).abs() < 1e-14);
        assert!(StateVector::zeros(0).is_err());
    }

    #[test]
    fn pauli_action_on_basis_state() {
        let v = StateVector::basis(3, 0).unwrap();
        let p: PauliString = "-ZXZ".parse().unwrap();
        let out = v.apply_pauli(&p).unwrap();
        assert_eq!(out.amplitudes()[0b010], Complex64::new(-1.0, 0.0));
        assert!((out.norm() - 1.0).abs() < 1e-15);
        // Y|0⟩ = i|1⟩
        let y = StateVector::basis(1, 0)
            .unwrap()
            .apply_pauli(&"Y".parse().unwrap())
            .unwrap();
        assert_eq!(y.amplitudes()[1], Complex64::new(0.0, 1.0));
    }

    #[test]
    fn plus_and_minus_are_x_eigenstates() {
        let x: PauliString = "XXXX".parse().unwrap();
        let plus = StateVector::plus(4).unwrap();
        let minus = StateVector::minus(4).unwrap();
        for q in 0..4 {
            let xq = PauliString::x_on(4, [q]).unwrap();
            assert!((plus.expectation(&xq).unwrap().re - 1.0).abs() < 1e-14);
            assert!((minus.expectation(&xq).unwrap().re + 1.0).abs() < 1e-14);
        }
        assert!((plus.expectation(&x).unwrap().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn random_state_is_normalized_and_reproducible() {
        let a = StateVector::random(6, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = StateVector::random(6, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
        assert!((a.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tensor_places_first_factor_on_low_qubits() {
        let zero = StateVector::basis(1, 0).unwrap();
        let one = StateVector::basis(1, 1).unwrap();
        let v = one.tensor(&zero).unwrap();
        assert_eq!(v.amplitudes()[0b01], Complex64::new(1.0, 0.0));
    }
}
