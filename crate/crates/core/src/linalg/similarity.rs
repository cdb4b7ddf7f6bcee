use super::matrix::QiMatrix;
use crate::error::{Error, Result};
use crate::exactfield::{Qi, UniPoly};

/// Invariant factors of `xI − A`: the monic diagonal of its Smith normal form
/// over ℚ(i)[x], in divisibility order. Unit factors are included.
pub fn invariant_factors(a: &QiMatrix) -> Vec<UniPoly> {
    assert!(a.is_square());
    let n = a.rows();
    let mut m: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -&a[(i, j)];
                    if i == j {
                        UniPoly::new(vec![c, Qi::one()])
                    } else {
                        UniPoly::constant(c)
                    }
                })
                .collect()
        })
        .collect();

    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(t) {
                for (j, e) in row.iter().enumerate().skip(t) {
                    if let Some(d) = e.degree() {
                        if best.is_none_or(|(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                // trailing block is zero; cannot happen for a characteristic matrix
                diag.extend(std::iter::repeat_n(UniPoly::zero(), n - t));
                return diag;
            };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }

            let mut clean = true;
            let piv = m[t][t].clone();
            for i in t + 1..n {
                if m[i][t].is_zero() {
                    continue;
                }
                let (q, r) = m[i][t].div_rem(&piv).expect("nonzero pivot");
                for j in t..n {
                    let s = q.mul(&m[t][j]);
                    m[i][j] = m[i][j].sub(&s);
                }
                clean &= r.is_zero();
            }
            for j in t + 1..n {
                if m[t][j].is_zero() {
                    continue;
                }
                let (q, r) = m[t][j].div_rem(&piv).expect("nonzero pivot");
                for row in m.iter_mut().skip(t) {
                    let s = q.mul(&row[t]);
                    row[j] = row[j].sub(&s);
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide every remaining entry
            let offender = (t + 1..n).find(|&i| {
                (t + 1..n).any(|j| !m[i][j].rem(&piv).expect("nonzero pivot").is_zero())
            });
            match offender {
                Some(i) => {
                    for j in t..n {
                        let s = m[i][j].clone();
                        m[t][j] = m[t][j].add(&s);
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].monic());
    }
    diag
}

/// Conjugacy over the algebraic closure, decided by comparing invariant factors.
pub fn is_similar(a: &QiMatrix, b: &QiMatrix) -> Result<bool> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(invariant_factors(a) == invariant_factors(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn similarity_examples() {
        let d = QiMatrix::diag_frac(&[(1, 1), (2, 1)]);
        let j = QiMatrix::from_ints(&[&[1, 1], &[0, 2]]);
        assert!(is_similar(&d, &j).unwrap());
        let a = QiMatrix::diag_frac(&[(2, 1), (2, 1)]);
        let b = QiMatrix::diag_frac(&[(1, 2), (1, 2)]);
        assert!(!is_similar(&a, &b).unwrap());
        assert!(is_similar(&j, &j).unwrap());
        assert!(is_similar(&d, &QiMatrix::identity(3)).is_err());
    }

    #[test]
    fn jordan_block_differs_from_scalar() {
        let jb = QiMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert!(!is_similar(&jb, &QiMatrix::identity(2)).unwrap());
        let f = invariant_factors(&jb);
        assert_eq!(f, vec![UniPoly::one(), UniPoly::from_ints(&[1, -2, 1])]);
    }
}
