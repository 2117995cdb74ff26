//! Exact linear algebra over `GF(p)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// The prime field `GF(p)` for a prime `p < 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const GF2: Self = Self { p: 2 };

    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    /// Multiplicative inverse by Fermat's little theorem; `a` must be nonzero.
    fn inv(self, a: u32) -> u32 {
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::GF2
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix of residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from signed integers, reducing each entry mod `p`.
    pub fn from_rows(field: PrimeField, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Malformed(alloc::format!(
                    "ragged matrix: row of length {} among rows of length {cols}",
                    r.len()
                )));
            }
            entries.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        self.entries[r * self.cols + c] = value;
    }

    /// Rank over `field`. The matrix itself is left untouched.
    pub fn rank(&self, field: PrimeField) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if field.characteristic() == 2 {
            let mut packed = BitMatrix::zeros(self.rows, self.cols);
            for r in 0..self.rows {
                for c in 0..self.cols {
                    if self.get(r, c) & 1 == 1 {
                        packed.set(r, c);
                    }
                }
            }
            return packed.rank();
        }
        dense_rank(self.entries.clone(), self.rows, self.cols, field)
    }
}

fn dense_rank(mut a: Vec<u32>, rows: usize, cols: usize, field: PrimeField) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for k in c..cols {
                a.swap(pivot * cols + k, rank * cols + k);
            }
        }
        let inv = field.inv(a[rank * cols + c]);
        for k in c..cols {
            a[rank * cols + k] = field.mul(a[rank * cols + k], inv);
        }
        for r in rank + 1..rows {
            let factor = a[r * cols + c];
            if factor == 0 {
                continue;
            }
            for k in c..cols {
                let t = field.mul(factor, a[rank * cols + k]);
                a[r * cols + k] = field.sub(a[r * cols + k], t);
            }
        }
        rank += 1;
    }
    rank
}

/// `GF(2)` matrix with rows packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words_per_row + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub fn toggle(&mut self, r: usize, c: usize) {
        self.data[r * self.words_per_row + c / 64] ^= 1 << (c % 64);
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    /// Rank by XOR elimination on a copy.
    pub fn rank(&self) -> usize {
        let w = self.words_per_row;
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let (word, bit) = (c / 64, 1u64 << (c % 64));
            let Some(pivot) = (rank..self.rows).find(|&r| a[r * w + word] & bit != 0) else {
                continue;
            };
            if pivot != rank {
                for k in word..w {
                    a.swap(pivot * w + k, rank * w + k);
                }
            }
            let (head, tail) = a.split_at_mut((rank + 1) * w);
            let pivot_row = &head[rank * w..];
            for row in tail.chunks_exact_mut(w) {
                if row[word] & bit != 0 {
                    for k in word..w {
                        row[k] ^= pivot_row[k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(65521).is_ok());
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(65537), Err(Error::NotPrime(65537)));
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn identity_rank() {
        let m = FieldMatrix::from_rows(PrimeField::GF2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(m.rank(PrimeField::GF2), 2);
    }

    #[test]
    fn hollow_triangle_boundary_rank() {
        // columns: edges 12, 13, 23; rows: vertices 1, 2, 3
        let rows: [&[i64]; 3] = [&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]];
        let m = FieldMatrix::from_rows(PrimeField::GF2, &rows).unwrap();
        assert_eq!(m.rank(PrimeField::GF2), 2);
        let signed: [&[i64]; 3] = [&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]];
        for p in [3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(FieldMatrix::from_rows(f, &signed).unwrap().rank(f), 2);
        }
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(FieldMatrix::zeros(4, 7).rank(PrimeField::GF2), 0);
        assert_eq!(FieldMatrix::zeros(0, 7).rank(PrimeField::GF2), 0);
        assert_eq!(
            FieldMatrix::zeros(3, 0).rank(PrimeField::new(5).unwrap()),
            0
        );
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: singular over GF(2), invertible over GF(3)
        let rows: [&[i64]; 2] = [&[1, 1], &[1, -1]];
        let f2 = PrimeField::GF2;
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(FieldMatrix::from_rows(f2, &rows).unwrap().rank(f2), 1);
        assert_eq!(FieldMatrix::from_rows(f3, &rows).unwrap().rank(f3), 2);
    }

    #[test]
    fn wide_bit_matrix() {
        let mut m = BitMatrix::zeros(3, 200);
        m.set(0, 150);
        m.set(1, 150);
        m.set(1, 3);
        m.set(2, 199);
        assert_eq!(m.rank(), 3);
        m.toggle(2, 199);
        assert!(!m.get(2, 199));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_leaves_input_alone() {
        let f = PrimeField::new(5).unwrap();
        let m = FieldMatrix::from_rows(f, &[&[1, 2, 3], &[2, 4, 6]]).unwrap();
        let before = m.clone();
        assert_eq!(m.rank(f), 1);
        assert_eq!(m, before);
    }
}
