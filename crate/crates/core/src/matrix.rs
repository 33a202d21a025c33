//! Dense matrices over exact rationals: multiplication, rank, determinant,
//! reduced row echelon form, and full-rank factorization. No floating point
//! anywhere.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// `r^e` for a nonzero rational and any integer exponent.
pub fn rational_pow(r: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let base = if e > 0 { r.clone() } else { r.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix with a single nonzero entry.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize, value: Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(i, j, value);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Reduced row echelon form, its pivot columns, and the rank.
    /// Pivoting is deterministic: leftmost nonzero column, rows in the order
    /// given.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &factor * m.get(row, j);
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        (m, pivots, rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact rank: the largest size of an invertible square submatrix,
    /// computed by rational Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Determinant of a square matrix by elimination with sign tracking.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in (col + 1)..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for j in col..n {
                    let v = m.get(r, j) - &factor * m.get(col, j);
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Full-rank factorization: a pair `(C, D)` with `C` of full column rank
    /// `r`, `D` of full row rank `r`, and `C * D == self` exactly.
    ///
    /// An invertible square matrix factors canonically as `(I, self)`; in
    /// general `C` collects the pivot columns and `D` the nonzero rows of
    /// the reduced row echelon form.
    pub fn full_rank_factorization(&self) -> (RationalMatrix, RationalMatrix) {
        let (rref, pivots, rank) = self.rref();
        if self.rows == self.cols && rank == self.rows {
            return (RationalMatrix::identity(self.rows), self.clone());
        }
        let mut c = RationalMatrix::zeros(self.rows, rank);
        for (k, &col) in pivots.iter().enumerate() {
            for i in 0..self.rows {
                c.set(i, k, self.get(i, col).clone());
            }
        }
        let mut d = RationalMatrix::zeros(rank, self.cols);
        for i in 0..rank {
            for j in 0..self.cols {
                d.set(i, j, rref.get(i, j).clone());
            }
        }
        (c, d)
    }

    /// Rows rendered as exact fraction strings (the JSON wire format).
    pub fn row_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix({}x{})\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    pub(crate) fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ints(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
    }

    #[test]
    fn rank_and_det_basics() {
        let m = from_ints(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(m.rank(), 1);
        assert!(m.det().is_zero());
        assert_eq!(RationalMatrix::zeros(3, 3).rank(), 0);
        let id = RationalMatrix::identity(4);
        assert_eq!(id.rank(), 4);
        assert_eq!(id.det(), rat(1));
    }

    #[test]
    fn factorization_of_invertible_is_canonical() {
        let m = from_ints(&[&[2, 1], &[1, 1]]);
        let (c, d) = m.full_rank_factorization();
        assert_eq!(c, RationalMatrix::identity(2));
        assert_eq!(d, m);
        assert_eq!(c.mul(&d), m);
    }

    #[test]
    fn factorization_of_rank_deficient() {
        let m = from_ints(&[&[1, 1, 0], &[1, 0, -1], &[0, -1, -1]]);
        assert_eq!(m.rank(), 2);
        let (c, d) = m.full_rank_factorization();
        assert_eq!(c.cols(), 2);
        assert_eq!(d.rows(), 2);
        assert_eq!(c.mul(&d), m);
    }

    #[test]
    fn factorization_of_zero_is_empty() {
        let m = RationalMatrix::zeros(3, 3);
        let (c, d) = m.full_rank_factorization();
        assert_eq!(c.cols(), 0);
        assert_eq!(d.rows(), 0);
        assert_eq!(c.mul(&d), m);
    }

    #[test]
    fn rational_pow_handles_negative_exponents() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rational_pow(&half, 2), Rational::new(BigInt::from(1), BigInt::from(4)));
        assert_eq!(rational_pow(&half, -2), rat(4));
        assert_eq!(rational_pow(&half, 0), rat(1));
    }

    proptest! {
        #[test]
        fn factorization_multiplies_back(
            rows in 1usize..4,
            cols in 1usize..4,
            entries in proptest::collection::vec(-3i64..=3, 16),
        ) {
            let m = RationalMatrix::from_rows(
                (0..rows)
                    .map(|i| (0..cols).map(|j| rat(entries[i * 4 + j])).collect())
                    .collect(),
            );
            let (c, d) = m.full_rank_factorization();
            prop_assert_eq!(c.mul(&d), m.clone());
            prop_assert_eq!(c.cols(), m.rank());
        }
    }
}
