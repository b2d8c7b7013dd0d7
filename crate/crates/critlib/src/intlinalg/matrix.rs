use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LinAlgError;

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix::new(r, c, entries)
    }

    pub fn from_vec_rows(rows: Vec<Vec<i64>>) -> Self {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        IntMatrix::from_rows(&refs)
    }

    /// n x n matrix with constant diagonal and super/sub diagonals.
    pub fn tridiagonal(n: usize, diag: i64, sup: i64, sub: i64) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(diag));
            if i + 1 < n {
                m.set(i, i + 1, BigInt::from(sup));
                m.set(i + 1, i, BigInt::from(sub));
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> IntMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            for j in cols.clone() {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix::new(rows.len(), cols.len(), entries)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        let entries = self.entries.iter().map(|a| a * k).collect();
        IntMatrix::new(self.rows, self.cols, entries)
    }

    /// Matrix-vector product A·x.
    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Transposed product Aᵗ·x without materializing the transpose.
    pub fn mul_vec_transposed(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.rows, x.len(), "dimension mismatch in mul_vec_transposed");
        let mut out = vec![BigInt::zero(); self.cols];
        for i in 0..self.rows {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += self.get(i, j) * &x[i];
            }
        }
        out
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == IntMatrix::identity(self.rows)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q * row[src]`
    pub fn sub_scaled_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) - q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// `col[dst] -= q * col[src]`
    pub fn sub_scaled_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) - q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    pub fn add_row_to(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + self.get(src, j);
            self.set(dst, j, v);
        }
    }

    pub fn add_col_to(&mut self, dst: usize, src: usize) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + self.get(i, src);
            self.set(i, dst, v);
        }
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| self.row(i).iter().map(|e| e.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<IntMatrix, LinAlgError> {
        if json.entries.len() != json.rows {
            return Err(LinAlgError::BadData(format!(
                "expected {} rows, found {}",
                json.rows,
                json.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(json.rows * json.cols);
        for row in &json.entries {
            if row.len() != json.cols {
                return Err(LinAlgError::BadData(format!(
                    "expected {} cols, found {}",
                    json.cols,
                    row.len()
                )));
            }
            for s in row {
                let v = BigInt::from_str(s)
                    .map_err(|e| LinAlgError::BadData(format!("bad integer {s:?}: {e}")))?;
                entries.push(v);
            }
        }
        Ok(IntMatrix::new(json.rows, json.cols, entries))
    }
}

/// Wire format: entries are decimal strings so arbitrary precision survives
/// any JSON implementation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.get(i, j).to_string().len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", self.get(i, j).to_string(), w = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Dense matrix of exact rationals in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        RationalMatrix { rows, cols, entries }
    }

    pub fn from_int(a: &IntMatrix) -> Self {
        let entries = (0..a.rows())
            .flat_map(|i| a.row(i).iter().cloned())
            .map(BigRational::from_integer)
            .collect();
        RationalMatrix::new(a.rows(), a.cols(), entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        RationalMatrix::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn scale_row(&mut self, i: usize, k: &BigRational) {
        for j in 0..self.cols {
            let v = self.get(i, j) * k;
            self.set(i, j, v);
        }
    }

    pub fn sub_scaled_row(&mut self, dst: usize, src: usize, q: &BigRational) {
        for j in 0..self.cols {
            let v = self.get(dst, j) - q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &x[j])
                    .sum::<BigRational>()
            })
            .collect()
    }

    pub fn mul_int_vec(&self, x: &[BigInt]) -> Vec<BigRational> {
        let xr: Vec<BigRational> = x.iter().cloned().map(BigRational::from_integer).collect();
        self.mul_vec(&xr)
    }

    /// (integer matrix) * (this matrix), exact.
    pub fn mul_int_left(&self, a: &IntMatrix) -> RationalMatrix {
        assert_eq!(a.cols(), self.rows);
        let mut out = RationalMatrix::new(
            a.rows(),
            self.cols,
            vec![BigRational::zero(); a.rows() * self.cols],
        );
        for i in 0..a.rows() {
            for k in 0..a.cols() {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = BigRational::from_integer(a.get(i, k).clone());
                for j in 0..self.cols {
                    let v = out.get(i, j) + &f * self.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_entrywise_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Integer entries cast back to an `IntMatrix`; None if any denominator > 1.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for e in &self.entries {
            if !e.is_integer() {
                return None;
            }
            entries.push(e.to_integer());
        }
        Some(IntMatrix::new(self.rows, self.cols, entries))
    }
}
