//! Dense GF(2) elimination on rows packed into machine words.

/// Rank of a set of GF(2) row vectors.
pub(crate) fn rank(rows: &[u128]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for bit in 0..128 {
        let mask = 1u128 << bit;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & mask != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of `{x in GF(2)^n : popcount(x & row) is even for every row}`.
pub(crate) fn nullspace(rows: &[u64], n: usize) -> Vec<u64> {
    let mut rows: Vec<u64> = rows.iter().copied().filter(|&r| r != 0).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let mask = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & mask != 0 {
                *row ^= pivot;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    // One basis vector per free column: set the free bit, then solve each
    // pivot bit from its reduced row.
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = 1u64 << free;
        for (r, &pc) in pivots.iter().enumerate() {
            if rows[r] >> free & 1 == 1 {
                v |= 1u64 << pc;
            }
        }
        basis.push(v);
    }
    basis
}

/// Every element of the span of `basis` (which must be independent).
pub(crate) fn span(basis: &[u64]) -> impl Iterator<Item = u64> + '_ {
    (0u64..1 << basis.len()).map(move |sel| {
        basis
            .iter()
            .enumerate()
            .filter(|(i, _)| sel >> i & 1 == 1)
            .fold(0, |acc, (_, b)| acc ^ b)
    })
}
