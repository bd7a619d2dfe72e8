use std::fmt;

use malachite::base::num::basic::traits::Zero;
use malachite::Rational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{RingSpec, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact ring. Entries are always canonical
/// for `ring`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Matrix { ring, rows, cols, data: vec![Rational::ZERO; rows * cols] }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_fn(ring: RingSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(ring.reduce(f(i, j)));
            }
        }
        Matrix { ring, rows, cols, data }
    }

    /// Builds from small integer rows (reduced into `ring`).
    pub fn from_i64(ring: RingSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(ring, r, c, |i, j| ring.from_i64(rows[i][j]))
    }

    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::Malformed(format!("row {i} has length {} instead of {c}", row.len())));
            }
            for v in row {
                data.push(ring.normalize(&v)?);
            }
        }
        Ok(Matrix { ring, rows: r, cols: c, data })
    }

    pub fn column_vector(ring: RingSpec, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Self::from_fn(ring, n, 1, |i, _| entries[i].clone())
    }

    pub fn row_vector(ring: RingSpec, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Self::from_fn(ring, 1, n, |_, j| entries[j].clone())
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(ring: RingSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(ring, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = self.ring.reduce(v);
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let idx = i * self.cols + j;
        self.data[idx] = self.ring.add(&self.data[idx], v);
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == 0u32)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Malformed(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = vec![Rational::ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut acc[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if *a == 0u32 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out.iter_mut().zip(brow) {
                    if *b != 0u32 {
                        *o += a * b;
                    }
                }
            }
        }
        let ring = self.ring;
        let data = acc.into_iter().map(|v| ring.reduce(v)).collect();
        Ok(Matrix { ring, rows: self.rows, cols: other.cols, data })
    }

    /// Product; panics on shape or ring mismatch (internal use on data that
    /// was already validated).
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product shape")
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.shape() != other.shape() {
            return Err(Error::Malformed("shape mismatch in sum".into()));
        }
        let ring = self.ring;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect();
        Ok(Matrix { ring, rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix sum shape")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        let ring = self.ring;
        Matrix { ring, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| ring.neg(a)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let ring = self.ring;
        Matrix { ring, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| ring.mul(a, s)).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product; on basis indices `(i, k) -> i * other.rows + k`,
    /// matching the lexicographic tensor convention.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring, "kron ring mismatch");
        let (r1, c1) = self.shape();
        let (r2, c2) = other.shape();
        let mut out = Matrix::zeros(self.ring, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if *a == 0u32 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if *b != 0u32 {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { ring: self.ring, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.ring, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Entrywise image under a canonical ring map.
    pub fn base_change(&self, target: RingSpec) -> Result<Matrix> {
        self.ring.canonical_map_to(target)?;
        let data = self.data.iter().map(|v| target.normalize(v)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { ring: target, rows: self.rows, cols: self.cols, data })
    }

    /// First column in which `self` and `other` differ.
    pub fn first_differing_column(&self, other: &Matrix) -> Option<usize> {
        if self.shape() != other.shape() {
            return Some(0);
        }
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }

    /// Permutation matrix of `x (x) y -> y (x) x` on `X (x) Y` with
    /// `dim X = a`, `dim Y = b`.
    pub fn swap(ring: RingSpec, a: usize, b: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, a * b, a * b);
        for i in 0..a {
            for j in 0..b {
                m.set(j * a + i, i * b + j, ring.one());
            }
        }
        m
    }

    /// Permutation `x (x) y (x) z (x) w -> x (x) z (x) y (x) w` for factor
    /// dimensions `(a, b, c, e)`.
    pub fn middle_swap(ring: RingSpec, a: usize, b: usize, c: usize, e: usize) -> Matrix {
        let n = a * b * c * e;
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    for l in 0..e {
                        let src = ((i * b + j) * c + k) * e + l;
                        let dst = ((i * c + k) * b + j) * e + l;
                        m.set(dst, src, ring.one());
                    }
                }
            }
        }
        m
    }

    /// Reorders the rows of a matrix whose row space is a tensor product
    /// with factor dimensions `dims`: output factor `k` is input factor
    /// `perm[k]`.
    pub fn permute_tensor_rows(&self, dims: &[usize], perm: &[usize]) -> Matrix {
        let n: usize = dims.iter().product();
        assert_eq!(n, self.rows, "tensor dimensions do not match the row count");
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut digits = vec![0usize; dims.len()];
        let mut out = Matrix::zeros(self.ring, self.rows, self.cols);
        for src in 0..n {
            let mut rest = src;
            for k in (0..dims.len()).rev() {
                digits[k] = rest % dims[k];
                rest /= dims[k];
            }
            let dst = perm.iter().zip(&out_dims).fold(0, |acc, (&p, &d)| acc * d + digits[p]);
            out.data[dst * self.cols..(dst + 1) * self.cols].clone_from_slice(self.row(src));
        }
        out
    }

    /// String form of every entry, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_string()).collect()).collect()
    }

    pub fn from_string_rows(ring: RingSpec, rows: &[Vec<String>], cols_if_empty: usize) -> Result<Matrix> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse_scalar(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if parsed.is_empty() {
            return Ok(Matrix::zeros(ring, 0, cols_if_empty));
        }
        Matrix::from_rows(ring, parsed)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { ring: self.ring, rows: self.rows, cols: self.cols, entries: self.to_string_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        let m = Matrix::from_string_rows(r.ring, &r.entries, r.cols).map_err(serde::de::Error::custom)?;
        if m.shape() != (r.rows, r.cols) {
            return Err(serde::de::Error::custom("matrix shape does not match its entries"));
        }
        Ok(m)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Column-compressed sparse matrix used for large cochain differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn new(ring: RingSpec, rows: usize, columns: Vec<Vec<(usize, Scalar)>>) -> Self {
        let cols = columns.len();
        SparseMatrix { ring, rows, cols, columns }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let columns = (0..m.cols())
            .map(|j| (0..m.rows()).filter(|&i| *m.get(i, j) != 0u32).map(|i| (i, m.get(i, j).clone())).collect())
            .collect();
        SparseMatrix { ring: m.ring(), rows: m.rows(), cols: m.cols(), columns }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.ring, self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    /// Rows of the transpose, i.e. one sparse row per column.
    pub fn transpose_rows(&self) -> Vec<Vec<(usize, Scalar)>> {
        self.columns.clone()
    }

    /// Row-wise representation.
    pub fn row_lists(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    /// Applies the matrix to a dense vector.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Rational::ZERO; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            if x[j] == 0u32 {
                continue;
            }
            for (i, v) in col {
                out[*i] += v * &x[j];
            }
        }
        out.into_iter().map(|v| self.ring.reduce(v)).collect()
    }

    /// `self * other` as a sparse matrix.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "sparse compose shape");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: std::collections::BTreeMap<usize, Rational> = Default::default();
                for (k, b) in col {
                    for (i, a) in &self.columns[*k] {
                        *acc.entry(*i).or_insert(Rational::ZERO) += a * b;
                    }
                }
                acc.into_iter()
                    .map(|(i, v)| (i, self.ring.reduce(v)))
                    .filter(|(_, v)| *v != 0u32)
                    .collect()
            })
            .collect();
        SparseMatrix { ring: self.ring, rows: self.rows, cols: other.cols, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|(_, v)| *v == 0u32))
    }
}
