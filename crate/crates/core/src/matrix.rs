//! Dense integer matrices and their `{-1, 0, 1}` restriction.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    /// `alpha * I_n`.
    pub fn scalar(n: usize, alpha: i64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = alpha;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {c}",
                rows[bad].len()
            )));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        })
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.mul_with(other, Execution::default())
    }

    /// Matrix product, rows computed independently under `exec`.
    pub fn mul_with(&self, other: &IntMatrix, exec: Execution) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        let width = other.cols;
        exec.for_each_row(&mut out.data, width, |i, out_row| {
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(other.row(k)) {
                    *o += a * b;
                }
            }
        });
        Ok(out)
    }

    /// `self * self^t`.
    pub fn gram_rows(&self) -> IntMatrix {
        self.mul(&self.transpose()).expect("shapes agree")
    }

    /// `self^t * self`.
    pub fn gram_cols(&self) -> IntMatrix {
        self.transpose().mul(self).expect("shapes agree")
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(i64, i64) -> i64) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a * c).collect(),
        }
    }

    /// Exact division of every entry; `None` if some entry is not divisible.
    pub fn div_exact(&self, d: i64) -> Option<IntMatrix> {
        if d == 0 || self.data.iter().any(|&a| a % d != 0) {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a / d).collect(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    /// True iff the matrix equals `alpha * I`.
    pub fn is_scalar(&self, alpha: i64) -> bool {
        self.first_scalar_violation(alpha).is_none()
    }

    /// First entry where the matrix differs from `alpha * I`.
    pub fn first_scalar_violation(&self, alpha: i64) -> Option<(usize, usize, i64)> {
        if !self.is_square() {
            return Some((0, 0, self.data.first().copied().unwrap_or(0)));
        }
        let n = self.rows;
        self.data.iter().enumerate().find_map(|(idx, &v)| {
            let (i, j) = (idx / n, idx % n);
            let want = if i == j { alpha } else { 0 };
            (v != want).then_some((i, j, v))
        })
    }

    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = IntMatrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(i * other.rows + p, j * other.cols + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }

    /// Assemble a block matrix from a grid of blocks with compatible shapes.
    pub fn block(grid: &[Vec<&IntMatrix>]) -> Result<IntMatrix> {
        let row_heights: Vec<usize> = grid.iter().map(|r| r.first().map_or(0, |b| b.rows)).collect();
        let col_widths: Vec<usize> = grid.first().map_or(vec![], |r| r.iter().map(|b| b.cols).collect());
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != col_widths.len() {
                return Err(Error::DimensionMismatch(format!("block row {bi} has {} blocks", row.len())));
            }
            for (bj, b) in row.iter().enumerate() {
                if b.rows != row_heights[bi] || b.cols != col_widths[bj] {
                    return Err(Error::DimensionMismatch(format!(
                        "block ({bi}, {bj}) is {}x{}, expected {}x{}",
                        b.rows, b.cols, row_heights[bi], col_widths[bj]
                    )));
                }
            }
        }
        let mut out = IntMatrix::zeros(row_heights.iter().sum(), col_widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j));
                    }
                }
                c0 += col_widths[bj];
            }
            r0 += row_heights[bi];
        }
        Ok(out)
    }

    /// Principal-style submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&a| a as f64).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Rectangular matrix with entries in `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedMatrix(IntMatrix);

impl SignedMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if let Some(idx) = m.data.iter().position(|v| !(-1..=1).contains(v)) {
            return Err(Error::InvalidEntry {
                row: idx / m.cols.max(1),
                col: idx % m.cols.max(1),
                value: m.data[idx],
            });
        }
        Ok(SignedMatrix(m))
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SignedMatrix(IntMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        SignedMatrix(IntMatrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.0.rows
    }

    pub fn cols(&self) -> usize {
        self.0.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0.get(i, j)
    }

    pub fn as_int(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_int(self) -> IntMatrix {
        self.0
    }

    pub fn transpose(&self) -> SignedMatrix {
        SignedMatrix(self.0.transpose())
    }

    pub fn neg(&self) -> SignedMatrix {
        SignedMatrix(self.0.scale(-1))
    }

    /// Kronecker product; `{-1, 0, 1}` is closed under multiplication.
    pub fn kronecker(&self, other: &SignedMatrix) -> SignedMatrix {
        SignedMatrix(self.0.kronecker(&other.0))
    }

    /// Stack `top` over `bottom`.
    pub fn vstack(top: &SignedMatrix, bottom: &SignedMatrix) -> Result<SignedMatrix> {
        Ok(SignedMatrix(IntMatrix::block(&[vec![&top.0], vec![&bottom.0]])?))
    }

    /// Number of nonzero entries in row `i`.
    pub fn row_weight(&self, i: usize) -> usize {
        self.0.row(i).iter().filter(|&&v| v != 0).count()
    }
}

impl fmt::Display for SignedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 0], vec![0, -1, 3]]).unwrap();
        let b = a.transpose();
        assert_eq!(b.rows(), 3);
        let g = a.mul(&b).unwrap();
        assert_eq!(g, IntMatrix::from_rows(&[vec![5, -2], vec![-2, 10]]).unwrap());
        assert_eq!(a.gram_rows(), g);
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn sequential_and_parallel_products_match() {
        let data: Vec<i64> = (0..40 * 40).map(|i| ((i * 7919) % 5) as i64 - 2).collect();
        let a = IntMatrix::from_vec(40, 40, data).unwrap();
        let s = a.mul_with(&a, Execution::Sequential).unwrap();
        let p = a.mul_with(&a, Execution::Parallel).unwrap();
        assert_eq!(s, p);
    }

    #[test]
    fn signed_matrix_rejects_out_of_domain() {
        let err = SignedMatrix::from_rows(&[vec![0, 2]]).unwrap_err();
        assert_eq!(err, Error::InvalidEntry { row: 0, col: 1, value: 2 });
    }

    #[test]
    fn block_assembly() {
        let i = IntMatrix::identity(2);
        let z = IntMatrix::zeros(2, 2);
        let b = IntMatrix::block(&[vec![&z, &i], vec![&i, &z]]).unwrap();
        assert_eq!(b.get(0, 2), 1);
        assert_eq!(b.get(2, 0), 1);
        assert_eq!(b.get(0, 0), 0);
        assert!(b.is_symmetric());
    }

    #[test]
    fn kronecker_of_hadamard() {
        let h = SignedMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap();
        let h4 = h.kronecker(&h);
        assert!(h4.as_int().gram_rows().is_scalar(4));
    }

    #[test]
    fn display_is_space_separated() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.to_string(), "0 1\n1 0");
    }
}
