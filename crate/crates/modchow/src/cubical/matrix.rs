//! Dense integer matrices with arbitrary-precision entries.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>, // row-major
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn neg(&self) -> IntMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn scale(&self, c: i64) -> IntMat {
        let mut out = self.clone();
        let c = BigInt::from(c);
        for a in out.data.iter_mut() {
            *a *= &c;
        }
        out
    }

    /// Columns `lo..hi` as a new matrix.
    pub fn column_block(&self, lo: usize, hi: usize) -> IntMat {
        let mut out = IntMat::zeros(self.rows, hi - lo);
        for i in 0..self.rows {
            for j in lo..hi {
                out.set(i, j - lo, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rows `lo..hi` as a new matrix.
    pub fn row_block(&self, lo: usize, hi: usize) -> IntMat {
        let mut out = IntMat::zeros(hi - lo, self.cols);
        for i in lo..hi {
            for j in 0..self.cols {
                out.set(i - lo, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_a += c * row_b`
    pub fn add_multiple_of_row(&mut self, a: usize, b: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(a, j) + c * self.get(b, j);
            self.set(a, j, v);
        }
    }

    /// `col_a += c * col_b`
    pub fn add_multiple_of_col(&mut self, a: usize, b: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, a) + c * self.get(i, b);
            self.set(i, a, v);
        }
    }

    pub fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j).clone();
            self.set(a, j, v);
        }
    }

    pub fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, a).clone();
            self.set(i, a, v);
        }
    }

    /// Maximum absolute value of the entries (useful in tests).
    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
