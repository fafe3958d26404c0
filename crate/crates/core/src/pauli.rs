//! Binary-symplectic Pauli algebra.
//!
//! A [`PauliString`] on `n ≤ 64` qubits is stored as two bit masks and a
//! power of `i`. Qubit `j` carries `X` when bit `j` of the x mask is set, `Z`
//! when bit `j` of the z mask is set, and `Y` when both are set. The phase
//! multiplies the tensor product of the Hermitian single-qubit operators, so
//! `+Y` really is `Y` and the single-qubit table reads `X·Z = −iY`,
//! `Z·X = +iY`.
//!
//! Stabilizer groups are lists of commuting, independent, Hermitian strings.
//! All group questions (membership, equality, entropies, logical operators)
//! reduce to elimination over GF(2) with exact phase bookkeeping.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2;

/// Largest number of qubits a [`PauliString`] can address.
pub const MAX_QUBITS: usize = 64;

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::UnsupportedQubitCount(n));
    }
    Ok(())
}

/// An `n`-qubit Pauli operator `i^phase · P_0 ⊗ … ⊗ P_{n−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_masks(n, 0, 0, 0)
    }

    pub fn from_masks(n: usize, x: u64, z: u64, phase: u8) -> Result<Self> {
        check_n(n)?;
        let outside = !full_mask(n);
        if (x | z) & outside != 0 {
            let index = (63 - ((x | z) & outside).leading_zeros()) as usize;
            return Err(Error::QubitIndex { index, n });
        }
        Ok(Self {
            n,
            x,
            z,
            phase: phase & 3,
        })
    }

    /// Product of `X` on every listed qubit.
    pub fn x_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mask = mask_of(n, qubits)?;
        Self::from_masks(n, mask, 0, 0)
    }

    /// Product of `Z` on every listed qubit.
    pub fn z_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mask = mask_of(n, qubits)?;
        Self::from_masks(n, 0, mask, 0)
    }

    /// Builds a string from `(qubit, letter)` pairs, letters in `IXYZ`.
    pub fn from_sparse(n: usize, ops: &[(usize, char)]) -> Result<Self> {
        check_n(n)?;
        let (mut x, mut z) = (0u64, 0u64);
        for &(q, c) in ops {
            if q >= n {
                return Err(Error::QubitIndex { index: q, n });
            }
            let (bx, bz) = letter_bits(c).ok_or_else(|| Error::Parse {
                input: c.to_string(),
                reason: "expected one of I, X, Y, Z".into(),
            })?;
            x ^= (bx as u64) << q;
            z ^= (bz as u64) << q;
        }
        Self::from_masks(n, x, z, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    /// Exponent of the overall factor `i^phase`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    pub fn support(&self) -> u64 {
        self.x | self.z
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    /// True when the masks are empty, whatever the phase.
    pub fn is_scalar(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn is_x_type(&self) -> bool {
        self.z == 0
    }

    /// Single-qubit letter at `q`.
    pub fn letter(&self, q: usize) -> char {
        match (self.x >> q & 1, self.z >> q & 1) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (0, 1) => 'Z',
            _ => 'Y',
        }
    }

    pub fn with_phase(mut self, phase: u8) -> Self {
        self.phase = phase & 3;
        self
    }

    /// The same operator with the phase dropped.
    pub fn unsigned(self) -> Self {
        self.with_phase(0)
    }

    pub fn negated(self) -> Self {
        let phase = self.phase + 2;
        self.with_phase(phase)
    }

    /// Exponent `k` with `self = i^k · X^x · Z^z`.
    pub(crate) fn xz_phase(&self) -> u8 {
        ((self.phase as u32 + (self.x & self.z).count_ones()) % 4) as u8
    }

    fn ensure_same_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Operator product `self · other` with exact phase.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.ensure_same_size(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let x = self.x ^ other.x;
        let z = self.z ^ other.z;
        // X^a Z^b X^c Z^d = (−1)^{b·c} X^{a⊕c} Z^{b⊕d}
        let swap = 2 * (self.z & other.x).count_ones();
        let k = self.xz_phase() as u32 + other.xz_phase() as u32 + swap;
        let phase = (k + 4 * 64 - (x & z).count_ones()) % 4;
        Self {
            n: self.n,
            x,
            z,
            phase: phase as u8,
        }
    }

    /// Whether the two operators commute (symplectic form is even).
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.ensure_same_size(other)?;
        Ok(self.commutes_unchecked(other))
    }

    pub(crate) fn commutes_unchecked(&self, other: &Self) -> bool {
        ((self.x & other.z).count_ones() + (other.x & self.z).count_ones()).is_multiple_of(2)
    }

    /// `c · self · c†` for a Clifford circuit whose first gate acts first.
    pub fn conjugate(&self, circuit: &CliffordCircuit) -> Result<Self> {
        if self.n != circuit.n {
            return Err(Error::SizeMismatch(self.n, circuit.n));
        }
        let mut p = *self;
        for gate in &circuit.gates {
            p = gate.conjugate(&p);
        }
        Ok(p)
    }

    /// Packs `[x | z]` into a single symplectic row.
    pub(crate) fn symplectic_row(&self) -> u128 {
        self.x as u128 | (self.z as u128) << 64
    }
}

fn mask_of(n: usize, qubits: impl IntoIterator<Item = usize>) -> Result<u64> {
    check_n(n)?;
    let mut mask = 0u64;
    for q in qubits {
        if q >= n {
            return Err(Error::QubitIndex { index: q, n });
        }
        mask ^= 1 << q;
    }
    Ok(mask)
}

fn letter_bits(c: char) -> Option<(bool, bool)> {
    match c {
        'I' | '_' | '.' => Some((false, false)),
        'X' => Some((true, false)),
        'Z' => Some((false, true)),
        'Y' => Some((true, true)),
        _ => None,
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        f.write_str(sign)?;
        for q in 0..self.n {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses `"+ZXZIIIII"`, `"-iXY"`, `"−Z"` or an unsigned `"XX"`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (phase, body) = if let Some(rest) = t.strip_prefix("+i") {
            (1, rest)
        } else if let Some(rest) = t.strip_prefix("-i").or_else(|| t.strip_prefix("−i")) {
            (3, rest)
        } else if let Some(rest) = t.strip_prefix('+') {
            (0, rest)
        } else if let Some(rest) = t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
            (2, rest)
        } else {
            (0, t)
        };
        let n = body.chars().count();
        if n == 0 {
            return Err(err("no qubits"));
        }
        if n > MAX_QUBITS {
            return Err(err("more than 64 qubits"));
        }
        let (mut x, mut z) = (0u64, 0u64);
        for (q, c) in body.chars().enumerate() {
            let (bx, bz) = letter_bits(c).ok_or_else(|| err("expected letters from IXYZ"))?;
            x |= (bx as u64) << q;
            z |= (bz as u64) << q;
        }
        Self::from_masks(n, x, z, phase)
    }
}

/// One of the three Clifford gates the circuits here are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    Hadamard(usize),
    ControlledNot { control: usize, target: usize },
    ControlledPhase(usize, usize),
}

impl Gate {
    fn qubits(&self) -> [usize; 2] {
        match *self {
            Gate::Hadamard(q) => [q, q],
            Gate::ControlledNot { control, target } => [control, target],
            Gate::ControlledPhase(a, b) => [a, b],
        }
    }

    /// Images `(U X_q U†, U Z_q U†)` as `(x, z)` mask pairs; all have phase +1.
    fn images(&self, q: usize) -> ((u64, u64), (u64, u64)) {
        let b = |i: usize| 1u64 << i;
        let id = ((b(q), 0), (0, b(q)));
        match *self {
            Gate::Hadamard(h) if h == q => ((0, b(q)), (b(q), 0)),
            Gate::ControlledNot { control, target } => {
                if q == control {
                    ((b(control) | b(target), 0), (0, b(control)))
                } else if q == target {
                    ((b(target), 0), (0, b(control) | b(target)))
                } else {
                    id
                }
            }
            Gate::ControlledPhase(a1, a2) => {
                if q == a1 {
                    ((b(a1), b(a2)), (0, b(a1)))
                } else if q == a2 {
                    ((b(a2), b(a1)), (0, b(a2)))
                } else {
                    id
                }
            }
            _ => id,
        }
    }

    fn conjugate(&self, p: &PauliString) -> PauliString {
        let touched = self.qubits();
        let touched_mask = (1u64 << touched[0]) | (1u64 << touched[1]);
        // p = i^k X^x Z^z = i^k (X_U Z_U)(X_T Z_T) with U untouched, T touched.
        let mut out = PauliString {
            n: p.n,
            x: p.x & !touched_mask,
            z: p.z & !touched_mask,
            phase: 0,
        };
        out.phase = out.xz_phase_complement(p.xz_phase());
        let mut qs = vec![touched[0]];
        if touched[1] != touched[0] {
            qs.push(touched[1]);
        }
        let factor = |(x, z): (u64, u64)| PauliString {
            n: p.n,
            x,
            z,
            phase: ((4 - (x & z).count_ones() % 4) % 4) as u8,
        };
        for &q in &qs {
            if p.x >> q & 1 == 1 {
                out = out.mul_unchecked(&factor(self.images(q).0));
            }
        }
        for &q in &qs {
            if p.z >> q & 1 == 1 {
                out = out.mul_unchecked(&factor(self.images(q).1));
            }
        }
        out
    }
}

impl PauliString {
    /// Phase such that `self` with that phase equals `i^k X^x Z^z`.
    fn xz_phase_complement(&self, k: u8) -> u8 {
        ((k as u32 + 4 * 64 - (self.x & self.z).count_ones()) % 4) as u8
    }
}

/// Ordered list of Clifford gates on `n` qubits; the first gate acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordCircuit {
    n: usize,
    gates: Vec<Gate>,
}

impl CliffordCircuit {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            gates: Vec::new(),
        })
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        let [a, b] = gate.qubits();
        for q in [a, b] {
            if q >= self.n {
                return Err(Error::QubitIndex { index: q, n: self.n });
            }
        }
        if !matches!(gate, Gate::Hadamard(_)) && a == b {
            return Err(Error::InvalidArgument(format!(
                "two-qubit gate {gate:?} acts twice on qubit {a}"
            )));
        }
        self.gates.push(gate);
        Ok(self)
    }

    pub fn hadamard(&mut self, q: usize) -> Result<&mut Self> {
        self.push(Gate::Hadamard(q))
    }

    pub fn cnot(&mut self, control: usize, target: usize) -> Result<&mut Self> {
        self.push(Gate::ControlledNot { control, target })
    }

    pub fn cz(&mut self, a: usize, b: usize) -> Result<&mut Self> {
        self.push(Gate::ControlledPhase(a, b))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }
}

/// A stabilizer group: independent, commuting, Hermitian generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliString>,
}

impl StabilizerGroup {
    /// Validates and wraps a generator list.
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<Self> {
        check_n(n)?;
        for (i, g) in generators.iter().enumerate() {
            if g.n != n {
                return Err(Error::SizeMismatch(n, g.n));
            }
            if !g.is_hermitian() {
                return Err(Error::NonHermitian(i));
            }
        }
        for i in 0..generators.len() {
            for j in 0..i {
                if !generators[i].commutes_unchecked(&generators[j]) {
                    return Err(Error::NonCommuting(j, i));
                }
            }
        }
        let mut rows = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            rows.push(g.symplectic_row());
            if gf2::rank(&rows) != rows.len() {
                return Err(Error::DependentGenerator(i));
            }
        }
        // Independent commuting Hermitian generators cannot multiply to −I.
        Ok(Self { n, generators })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Appends generators, re-validating the whole set.
    pub fn extended(&self, extra: impl IntoIterator<Item = PauliString>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Self::new(self.n, gens)
    }

    /// Reduced row-echelon generators of the same group.
    ///
    /// Columns are ordered `x_0 … x_{n−1}, z_0 … z_{n−1}`. Because the RREF of
    /// the symplectic matrix is unique and every group element has a unique
    /// sign, the result depends only on the group, not on the input order.
    pub fn canonicalize(&self) -> Result<Self> {
        let gens = Self::new(self.n, self.generators.clone())?.generators;
        Ok(Self {
            n: self.n,
            generators: rref(gens, self.n).into_iter().map(|(_, g)| g).collect(),
        })
    }

    fn reduce(&self, p: &PauliString) -> PauliString {
        let mut r = *p;
        for (col, g) in rref(self.generators.clone(), self.n) {
            if r.symplectic_row() >> col & 1 == 1 {
                r = r.mul_unchecked(&g);
            }
        }
        r
    }

    /// Whether `p`, including its phase, is an element of the group.
    pub fn contains(&self, p: &PauliString) -> Result<bool> {
        if p.n != self.n {
            return Err(Error::SizeMismatch(self.n, p.n));
        }
        let r = self.reduce(p);
        Ok(r.is_scalar() && r.phase == 0)
    }

    /// Whether `p` or `−p` is an element of the group.
    pub fn contains_up_to_sign(&self, p: &PauliString) -> Result<bool> {
        if p.n != self.n {
            return Err(Error::SizeMismatch(self.n, p.n));
        }
        let r = self.reduce(p);
        Ok(r.is_scalar() && r.phase.is_multiple_of(2))
    }

    /// Same group: equal sizes and mutual containment of generators.
    pub fn groups_equal(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        if self.len() != other.len() {
            return Ok(false);
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `p` commutes with every generator.
    pub fn centralizes(&self, p: &PauliString) -> Result<bool> {
        if p.n != self.n {
            return Err(Error::SizeMismatch(self.n, p.n));
        }
        Ok(self.generators.iter().all(|g| g.commutes_unchecked(p)))
    }

    /// GF(2) basis of the X-type strings commuting with every generator:
    /// the kernel of the generators' z-mask matrix.
    pub fn x_type_centralizer(&self) -> Vec<PauliString> {
        let rows: Vec<u64> = self.generators.iter().map(|g| g.z).collect();
        gf2::nullspace(&rows, self.n)
            .into_iter()
            .map(|x| PauliString {
                n: self.n,
                x,
                z: 0,
                phase: 0,
            })
            .collect()
    }

    /// Minimum weight of an X-type string that commutes with the group but is
    /// not (up to sign) one of its elements. `None` when no such string exists.
    pub fn classical_distance(&self) -> Result<Option<usize>> {
        let kernel: Vec<u64> = self.x_type_centralizer().iter().map(|p| p.x).collect();
        if kernel.len() > 30 {
            return Err(Error::SubspaceTooLarge(kernel.len()));
        }
        let mut best: Option<usize> = None;
        for x in gf2::span(&kernel).filter(|&x| x != 0) {
            let w = x.count_ones() as usize;
            if best.is_some_and(|b| b <= w) {
                continue;
            }
            let p = PauliString {
                n: self.n,
                x,
                z: 0,
                phase: 0,
            };
            if !self.contains_up_to_sign(&p)? {
                best = Some(w);
            }
        }
        Ok(best)
    }

    /// Exhaustive search over all `2^n` X-strings; `n ≤ 16`.
    pub fn classical_distance_exhaustive(&self) -> Result<Option<usize>> {
        if self.n > 16 {
            return Err(Error::TooLarge {
                what: "qubits for exhaustive search",
                value: self.n,
                max: 16,
            });
        }
        let mut best: Option<usize> = None;
        for x in 1u64..1 << self.n {
            let p = PauliString {
                n: self.n,
                x,
                z: 0,
                phase: 0,
            };
            let w = x.count_ones() as usize;
            if best.is_some_and(|b| b <= w) {
                continue;
            }
            if self.centralizes(&p)? && !self.contains_up_to_sign(&p)? {
                best = Some(w);
            }
        }
        Ok(best)
    }

    /// Entanglement entropy in bits of the stabilizer state on `region`
    /// (a qubit bit mask): `|R| − dim(subgroup supported inside R)`.
    pub fn entropy(&self, region: u64) -> Result<usize> {
        if self.len() != self.n {
            return Err(Error::NotFullRank {
                generators: self.len(),
                n: self.n,
            });
        }
        let region = region & full_mask(self.n);
        let outside = !region & full_mask(self.n);
        let restricted: Vec<u128> = self
            .generators
            .iter()
            .map(|g| (g.x & outside) as u128 | ((g.z & outside) as u128) << 64)
            .collect();
        let inside_dim = self.n - gf2::rank(&restricted);
        Ok(region.count_ones() as usize - inside_dim)
    }
}

/// Reduced row-echelon form with phase tracking; returns `(pivot column, row)`.
fn rref(mut rows: Vec<PauliString>, n: usize) -> Vec<(usize, PauliString)> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    let cols = (0..n).chain(64..64 + n);
    for col in cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].symplectic_row() >> col & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.symplectic_row() >> col & 1 == 1 {
                *row = row.mul_unchecked(&pivot);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    pivots.into_iter().zip(rows).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn single_qubit_table() {
        assert_eq!(p("X").multiply(&p("Z")).unwrap(), p("-iY"));
        assert_eq!(p("Z").multiply(&p("X")).unwrap(), p("+iY"));
        assert_eq!(p("X").multiply(&p("Y")).unwrap(), p("+iZ"));
        assert_eq!(p("Y").multiply(&p("Z")).unwrap(), p("+iX"));
        assert_eq!(p("Y").multiply(&p("Y")).unwrap(), p("I"));
    }

    #[test]
    fn strings_square_to_identity() {
        let g = p("ZXZI");
        assert_eq!(g.multiply(&g).unwrap(), PauliString::identity(4).unwrap());
    }

    #[test]
    fn size_mismatch_is_reported() {
        assert!(matches!(
            p("XX").multiply(&p("X")),
            Err(Error::SizeMismatch(2, 1))
        ));
        assert!(p("XX").commutes(&p("X")).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("−iXYZ").to_string(), "-iXYZ");
        assert_eq!(p("ZXZIIIII").to_string(), "+ZXZIIIII");
        assert_eq!(p("+iI").phase(), 1);
        assert!("+XQ".parse::<PauliString>().is_err());
        assert!("+".parse::<PauliString>().is_err());
    }

    #[test]
    fn masks_outside_range_rejected() {
        assert!(PauliString::from_masks(3, 0b1000, 0, 0).is_err());
        assert!(PauliString::identity(0).is_err());
        assert!(PauliString::identity(65).is_err());
        assert!(PauliString::from_masks(64, u64::MAX, 0, 0).is_ok());
    }

    #[test]
    fn anticommuting_pair() {
        assert!(!p("X").commutes(&p("Z")).unwrap());
        assert!(p("XX").commutes(&p("ZZ")).unwrap());
    }

    #[test]
    fn canonical_form_is_order_invariant() {
        let a = StabilizerGroup::new(3, vec![p("ZZI"), p("IZZ")]).unwrap();
        let b = StabilizerGroup::new(3, vec![p("IZZ"), p("ZZI")]).unwrap();
        assert_eq!(a.canonicalize().unwrap(), b.canonicalize().unwrap());
        let z13 = p("ZIZ");
        assert!(a.contains(&z13).unwrap());
        assert!(a.canonicalize().unwrap().contains(&z13).unwrap());
    }

    #[test]
    fn phase_matters_for_membership() {
        let g = StabilizerGroup::new(2, vec![p("ZZ")]).unwrap();
        assert!(g.contains(&p("ZZ")).unwrap());
        assert!(!g.contains(&p("-ZZ")).unwrap());
        assert!(g.contains_up_to_sign(&p("-ZZ")).unwrap());
    }

    #[test]
    fn invalid_groups_rejected() {
        assert!(matches!(
            StabilizerGroup::new(1, vec![p("X"), p("Z")]),
            Err(Error::NonCommuting(0, 1))
        ));
        assert!(matches!(
            StabilizerGroup::new(2, vec![p("ZZ"), p("-ZZ")]),
            Err(Error::DependentGenerator(1))
        ));
        assert!(matches!(
            StabilizerGroup::new(2, vec![p("+iZZ")]),
            Err(Error::NonHermitian(0))
        ));
    }

    #[test]
    fn empty_group_centralizer_is_everything() {
        let g = StabilizerGroup::empty(3).unwrap();
        assert_eq!(g.x_type_centralizer().len(), 3);
        assert_eq!(g.classical_distance().unwrap(), Some(1));
    }

    #[test]
    fn single_generator_distance() {
        let g = StabilizerGroup::new(2, vec![p("ZZ")]).unwrap();
        assert_eq!(g.classical_distance().unwrap(), Some(2));
        assert_eq!(g.classical_distance_exhaustive().unwrap(), Some(2));
    }

    #[test]
    fn no_logical_gives_none() {
        let g = StabilizerGroup::new(2, vec![p("XX"), p("ZZ")]).unwrap();
        assert_eq!(g.classical_distance().unwrap(), None);
        assert_eq!(g.classical_distance_exhaustive().unwrap(), None);
    }

    #[test]
    fn bell_pair_entropy() {
        let g = StabilizerGroup::new(2, vec![p("XX"), p("ZZ")]).unwrap();
        assert_eq!(g.entropy(0b01).unwrap(), 1);
        assert_eq!(g.entropy(0b11).unwrap(), 0);
        let plus = StabilizerGroup::new(3, vec![p("XII"), p("IXI"), p("IIX")]).unwrap();
        for r in 0..8 {
            assert_eq!(plus.entropy(r).unwrap(), 0);
        }
        let code = StabilizerGroup::new(2, vec![p("ZZ")]).unwrap();
        assert!(matches!(code.entropy(1), Err(Error::NotFullRank { .. })));
    }

    #[test]
    fn hadamard_swaps_x_and_z_and_flips_y() {
        let mut c = CliffordCircuit::new(1).unwrap();
        c.hadamard(0).unwrap();
        assert_eq!(p("X").conjugate(&c).unwrap(), p("Z"));
        assert_eq!(p("Z").conjugate(&c).unwrap(), p("X"));
        assert_eq!(p("Y").conjugate(&c).unwrap(), p("-Y"));
    }

    #[test]
    fn cnot_and_cz_rules() {
        let mut cx = CliffordCircuit::new(2).unwrap();
        cx.cnot(0, 1).unwrap();
        assert_eq!(p("XI").conjugate(&cx).unwrap(), p("XX"));
        assert_eq!(p("IZ").conjugate(&cx).unwrap(), p("ZZ"));
        assert_eq!(p("ZI").conjugate(&cx).unwrap(), p("ZI"));
        assert_eq!(p("IX").conjugate(&cx).unwrap(), p("IX"));
        assert_eq!(p("YI").conjugate(&cx).unwrap(), p("YX"));
        let mut cz = CliffordCircuit::new(2).unwrap();
        cz.cz(0, 1).unwrap();
        assert_eq!(p("XI").conjugate(&cz).unwrap(), p("XZ"));
        assert_eq!(p("IX").conjugate(&cz).unwrap(), p("ZX"));
        assert_eq!(p("XX").conjugate(&cz).unwrap(), p("YY"));
    }

    #[test]
    fn circuit_validation() {
        let mut c = CliffordCircuit::new(2).unwrap();
        assert!(c.cnot(0, 0).is_err());
        assert!(c.hadamard(2).is_err());
        assert!(p("XXX").conjugate(&c).is_err());
    }
}
