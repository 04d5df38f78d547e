use super::{MatroidError, SubsetMask};

/// A `k x n` matrix over the prime field GF(p), stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMatrix {
    p: u64,
    rows: Vec<Vec<u64>>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GfMatrix {
    pub fn new(p: u64, rows: Vec<Vec<u64>>) -> Result<Self, MatroidError> {
        // Products of two residues must fit in u64.
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(MatroidError::NotPrime(p));
        }
        let cols = rows.first().ok_or(MatroidError::MalformedMatrix)?.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MatroidError::MalformedMatrix);
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= p {
                    return Err(MatroidError::MatrixEntry {
                        row: r,
                        col: c,
                        value,
                        p,
                    });
                }
            }
        }
        Ok(GfMatrix { p, rows })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    fn column(&self, c: usize) -> Vec<u64> {
        self.rows.iter().map(|row| row[c]).collect()
    }

    fn inverse(&self, a: u64) -> u64 {
        // Fermat: a^(p-2).
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        result
    }

    /// Reduces `v` against an echelon basis built by [`Self::push_reduced`].
    /// Returns true if `v` is independent of the basis.
    fn reduce(&self, basis: &[(usize, Vec<u64>)], v: &mut [u64]) -> bool {
        let p = self.p;
        for (pivot, b) in basis {
            let f = v[*pivot];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        v.iter().any(|&x| x != 0)
    }

    /// Normalizes an already-reduced nonzero `v` and appends it to `basis`.
    fn push_reduced(&self, basis: &mut Vec<(usize, Vec<u64>)>, mut v: Vec<u64>) {
        let pivot = v.iter().position(|&x| x != 0).expect("nonzero vector");
        let inv = self.inverse(v[pivot]);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        basis.push((pivot, v));
    }

    /// Rank of the columns indexed by `set`, by Gaussian elimination.
    pub fn column_rank(&self, set: SubsetMask) -> usize {
        let mut basis = Vec::new();
        for e in set.elements() {
            let mut v = self.column(e - 1);
            if self.reduce(&basis, &mut v) {
                self.push_reduced(&mut basis, v);
            }
        }
        basis.len()
    }

    /// Fills `ranks[m]` for every mask `m` by walking the subset tree and
    /// extending one echelon basis incrementally.
    pub(crate) fn fill_rank_table(&self, ranks: &mut [u8]) {
        let columns: Vec<Vec<u64>> = (0..self.cols()).map(|c| self.column(c)).collect();
        let mut basis = Vec::with_capacity(self.rows.len());
        self.visit(&columns, 0, 0, &mut basis, ranks);
    }

    fn visit(
        &self,
        columns: &[Vec<u64>],
        mask: usize,
        start: usize,
        basis: &mut Vec<(usize, Vec<u64>)>,
        ranks: &mut [u8],
    ) {
        ranks[mask] = basis.len() as u8;
        for e in start..columns.len() {
            let mut v = columns[e].clone();
            if self.reduce(basis, &mut v) {
                self.push_reduced(basis, v);
                self.visit(columns, mask | 1 << e, e + 1, basis, ranks);
                basis.pop();
            } else {
                self.visit(columns, mask | 1 << e, e + 1, basis, ranks);
            }
        }
    }
}
