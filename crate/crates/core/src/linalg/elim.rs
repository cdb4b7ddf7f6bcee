use super::matrix::{QiMatrix, VecQi};
use crate::error::{Error, Result};
use crate::exactfield::{Qi, UniPoly};

/// Reduced row echelon form with rank and pivot columns.
///
/// Rows are first scaled to Gaussian integers, then eliminated fraction-free
/// (Bareiss), so intermediate entries stay minors of the scaled input. The
/// echelon form is normalized to reduced form at the end.
pub fn rref(m: &QiMatrix) -> (QiMatrix, usize, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Qi>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let l = QiMatrix::row_denominator_lcm(row);
            row.iter().map(|q| q.scale(&l)).collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = Qi::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let prev_inv = prev.inv().expect("previous pivot nonzero");
        for i in r + 1..rows {
            let f = a[i][c].clone();
            for j in c + 1..cols {
                let v = &(&(&piv * &a[i][j]) - &(&f * &a[r][j])) * &prev_inv;
                a[i][j] = v;
            }
            a[i][c] = Qi::zero();
        }
        // rows above the pivot row keep their scale; they are cleared in the back pass
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    for row in a.iter_mut().skip(r) {
        for x in row.iter_mut() {
            *x = Qi::zero();
        }
    }

    // back substitution in field arithmetic
    for (k, &c) in pivots.iter().enumerate().rev() {
        let inv = a[k][c].inv().expect("pivot nonzero");
        for x in a[k].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..k {
            let f = a[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let t = &f * &a[k][j];
                a[i][j] -= &t;
            }
        }
    }
    let out = QiMatrix::new(rows, cols, a.into_iter().flatten().collect()).expect("shape kept");
    let rank = pivots.len();
    (out, rank, pivots)
}

pub fn rank(m: &QiMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    rref(m).1
}

pub fn nullity(m: &QiMatrix) -> usize {
    m.cols() - rank(m)
}

/// Basis of `{v : Mv = 0}`, one vector per free column.
pub fn kernel_basis(m: &QiMatrix) -> Vec<VecQi> {
    let cols = m.cols();
    if m.rows() == 0 {
        return (0..cols)
            .map(|k| (0..cols).map(|j| if j == k { Qi::one() } else { Qi::zero() }).collect())
            .collect();
    }
    let (r, _, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Qi::zero(); cols];
            v[f] = Qi::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(k, f)];
            }
            v
        })
        .collect()
}

pub fn inverse(m: &QiMatrix) -> Result<QiMatrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let aug = QiMatrix::hstack(&[m, &QiMatrix::identity(n)]);
    let (r, rank, pivots) = rref(&aug);
    if rank < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(QiMatrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
}

pub fn is_invertible(m: &QiMatrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}

/// Determinant by fraction-free elimination.
pub fn det(m: &QiMatrix) -> Qi {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.to_rows();
    let mut sign = Qi::one();
    let mut prev = Qi::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Qi::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        let prev_inv = prev.inv().expect("nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = &(&(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j])) * &prev_inv;
            }
            a[i][k] = Qi::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return Qi::one();
    }
    &sign * &a[n - 1][n - 1]
}

/// Characteristic polynomial `det(xI − M)` by Berkowitz's division-free recursion.
pub fn char_poly(m: &QiMatrix) -> UniPoly {
    assert!(m.is_square());
    let n = m.rows();
    // coefficients highest degree first
    let mut p: Vec<Qi> = vec![Qi::one()];
    for k in 0..n {
        let a = &m[(k, k)];
        let mut col = vec![Qi::one(), -a];
        let mut v: Vec<Qi> = (0..k).map(|i| m[(i, k)].clone()).collect();
        for _ in 0..k {
            let rv = (0..k).fold(Qi::zero(), |acc, j| &acc + &(&m[(k, j)] * &v[j]));
            col.push(-rv);
            v = (0..k)
                .map(|i| (0..k).fold(Qi::zero(), |acc, j| &acc + &(&m[(i, j)] * &v[j])))
                .collect();
        }
        let next: Vec<Qi> = (0..k + 2)
            .map(|i| {
                (0..=i.min(k)).fold(Qi::zero(), |acc, j| &acc + &(&col[i - j] * &p[j]))
            })
            .collect();
        p = next;
    }
    p.reverse();
    UniPoly::new(p)
}

/// Monic minimal polynomial, from the first linear dependency among `I, M, M², …`.
pub fn min_poly(m: &QiMatrix) -> UniPoly {
    assert!(m.is_square());
    let n = m.rows();
    let mut powers = vec![QiMatrix::identity(n)];
    for k in 1..=n {
        powers.push(powers[k - 1].mul(m));
        let cols: Vec<&QiMatrix> = powers.iter().collect();
        let stacked = QiMatrix::from_fn(n * n, cols.len(), |i, j| cols[j].entries()[i].clone());
        let ker = kernel_basis(&stacked);
        if let Some(v) = ker.first() {
            // independence of the lower powers makes the kernel one-dimensional
            return UniPoly::new(v.clone()).monic();
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

pub fn eigenspace_dim(m: &QiMatrix, lambda: &Qi) -> usize {
    assert!(m.is_square());
    nullity(&m.sub(&QiMatrix::scalar(m.rows(), lambda.clone())))
}
