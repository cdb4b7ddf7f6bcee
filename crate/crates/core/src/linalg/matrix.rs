use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::{Qi, Rational};

/// Flattened coordinates of a matrix or a direct sum of matrices.
pub type VecQi = Vec<Qi>;

/// Dense row-major matrix over ℚ(i).
///
/// Matrices read from input always have at least one row and column. Internally
/// built complexes may use `0 × k` shapes for maps into a zero space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QiMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Qi>,
}

impl QiMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Qi>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(QiMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Qi>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Ok(QiMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Qi::from_int(x)).collect()).collect())
            .expect("well-formed literal")
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Qi) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QiMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QiMatrix { rows, cols, data: vec![Qi::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Qi::one())
    }

    pub fn scalar(n: usize, c: Qi) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { Qi::zero() })
    }

    pub fn diag(entries: &[Qi]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Qi::zero() })
    }

    /// Rational diagonal matrix from `(num, den)` pairs.
    pub fn diag_frac(entries: &[(i64, i64)]) -> Self {
        let e: Vec<Qi> = entries.iter().map(|&(n, d)| Qi::frac(n, d)).collect();
        Self::diag(&e)
    }

    /// A single row `1 × len`.
    pub fn row_vector(v: &[Qi]) -> Self {
        QiMatrix { rows: 1, cols: v.len(), data: v.to_vec() }
    }

    pub fn column_vector(v: &[Qi]) -> Self {
        QiMatrix { rows: v.len(), cols: 1, data: v.to_vec() }
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

    pub fn entries(&self) -> &[Qi] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Qi] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Qi>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Qi::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map(&self, f: impl Fn(&Qi) -> Qi) -> Self {
        QiMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Qi) -> Self {
        self.map(|x| x * c)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    fn assert_same_shape(&self, other: &Self) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    /// Entrywise sum. Panics on a shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        QiMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        QiMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "incompatible shapes for product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul_vec(&self, v: &[Qi]) -> VecQi {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Qi::zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn trace(&self) -> Qi {
        (0..self.rows.min(self.cols)).fold(Qi::zero(), |acc, i| &acc + &self[(i, i)])
    }

    /// Stacks `blocks` side by side.
    pub fn hstack(blocks: &[&QiMatrix]) -> Self {
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&QiMatrix]) -> Self {
        let cols = blocks[0].cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        QiMatrix { rows, cols, data }
    }

    /// Parses the JSON matrix encoding (array of arrays of scalar strings).
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<String>> =
            serde_json::from_str(text).map_err(|e| Error::InvalidMatrix(e.to_string()))?;
        Self::from_string_rows(&raw)
    }

    pub fn from_string_rows(raw: &[Vec<String>]) -> Result<Self> {
        let rows = raw
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<Qi>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    /// Least common multiple of all denominators (real and imaginary parts) in a row.
    pub(crate) fn row_denominator_lcm(row: &[Qi]) -> Rational {
        use num_integer::Integer;
        let mut l = num_bigint::BigInt::from(1);
        for q in row {
            l = l.lcm(&q.re.denom());
            l = l.lcm(&q.im.denom());
        }
        Rational::try_new(l, 1.into()).expect("nonzero")
    }
}

impl Index<(usize, usize)> for QiMatrix {
    type Output = Qi;
    fn index(&self, (i, j): (usize, usize)) -> &Qi {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QiMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Qi {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl fmt::Display for QiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for QiMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QiMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<Qi>> = Vec::deserialize(d)?;
        QiMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Row-major flattening `(a11, a12, …, a1n, a21, …)`.
pub fn flatten_row(a: &QiMatrix) -> VecQi {
    a.entries().to_vec()
}

pub fn unflatten_row(v: &[Qi], n: usize) -> Result<QiMatrix> {
    if v.len() != n * n || n == 0 {
        return Err(Error::LengthMismatch { len: v.len(), n });
    }
    QiMatrix::new(n, n, v.to_vec())
}

pub fn dot(a: &[Qi], b: &[Qi]) -> Qi {
    a.iter().zip(b).fold(Qi::zero(), |acc, (x, y)| &acc + &(x * y))
}
