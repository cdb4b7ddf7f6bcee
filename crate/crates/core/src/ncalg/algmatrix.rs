use std::fmt;
use std::sync::Arc;

use super::word::{Alphabet, NcPoly};
use crate::error::{Error, Result};
use crate::exactfield::Qi;
use crate::linalg::QiMatrix;

/// Row-major matrix with entries in a free algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<NcPoly>,
}

impl AlgMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<NcPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for {rows}x{cols}", entries.len())));
        }
        Ok(AlgMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> NcPoly) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        AlgMatrix { rows, cols, entries }
    }

    pub fn zeros(alphabet: &Arc<Alphabet>, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| NcPoly::zero(alphabet))
    }

    /// Scalar matrix embedded as constants.
    pub fn lift(alphabet: &Arc<Alphabet>, m: &QiMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| NcPoly::constant(alphabet, m[(i, j)].clone()))
    }

    pub fn identity(alphabet: &Arc<Alphabet>, n: usize) -> Self {
        Self::lift(alphabet, &QiMatrix::identity(n))
    }

    /// The matrix of generators `prefix{i}{j}`.
    pub fn generators(alphabet: &Arc<Alphabet>, prefix: &str, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| NcPoly::var(alphabet, &entry_label(prefix, n, i, j)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[NcPoly] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &NcPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: NcPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).neg())
    }

    pub fn scale(&self, c: &Qi) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).scale(c))
    }

    /// Product with entries multiplied in order `self[i][k] · other[k][j]`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in AlgMatrix::mul");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = NcPoly::zero(self.get(i, 0).alphabet());
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    /// `m · self` for a scalar matrix `m`.
    pub fn left_scalar(&self, m: &QiMatrix) -> Self {
        assert_eq!(m.cols(), self.rows);
        Self::from_fn(m.rows(), self.cols, |i, j| {
            let mut acc = NcPoly::zero(self.get(0, j).alphabet());
            for k in 0..self.rows {
                if !m[(i, k)].is_zero() {
                    acc = &acc + &self.get(k, j).scale(&m[(i, k)]);
                }
            }
            acc
        })
    }

    /// `self · m` for a scalar matrix `m`.
    pub fn right_scalar(&self, m: &QiMatrix) -> Self {
        self.transpose().left_scalar(&m.transpose()).transpose()
    }

    pub fn hstack(blocks: &[&AlgMatrix]) -> Self {
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        Self::from_fn(rows, cols, |i, mut j| {
            for b in blocks {
                if j < b.cols {
                    return b.get(i, j).clone();
                }
                j -= b.cols;
            }
            unreachable!()
        })
    }

    pub fn vstack(blocks: &[&AlgMatrix]) -> Self {
        let cols = blocks[0].cols;
        let mut entries = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols);
            entries.extend(b.entries.iter().cloned());
        }
        AlgMatrix { rows: entries.len() / cols.max(1), cols, entries }
    }

    /// Row-major flattening into a column.
    pub fn flatten_column(&self) -> Self {
        AlgMatrix { rows: self.entries.len(), cols: 1, entries: self.entries.clone() }
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().filter_map(NcPoly::degree).max().unwrap_or(0)
    }
}

impl fmt::Debug for AlgMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Label of entry `(i, j)` (0-based) of the generator matrix `prefix`.
pub fn entry_label(prefix: &str, n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("{prefix}{}{}", i + 1, j + 1)
    } else {
        format!("{prefix}{}_{}", i + 1, j + 1)
    }
}
