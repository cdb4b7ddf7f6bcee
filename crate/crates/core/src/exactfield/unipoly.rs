use std::fmt;

use super::gaussian::Qi;
use crate::error::{Error, Result};

/// Univariate polynomial over ℚ(i), coefficients lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Qi>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Qi>) -> Self {
        while coeffs.last().is_some_and(Qi::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Qi) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(Qi::one())
    }

    /// `x - a`
    pub fn linear(a: Qi) -> Self {
        UniPoly::new(vec![-a, Qi::one()])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Qi::zero(), Qi::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| Qi::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Qi] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Qi> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Qi {
        self.coeffs.get(k).cloned().unwrap_or_else(Qi::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(Qi::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    pub fn scale(&self, c: &Qi) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Qi::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Qi::from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Qi) -> Qi {
        self.coeffs.iter().rev().fold(Qi::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?;
        let dl_inv = dl.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Qi::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] * &dl_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[k - dd + j] -= &t;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }
}

/// Monic gcd.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

pub fn is_squarefree(p: &UniPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly_gcd(p, &p.derivative())?.degree() == Some(0))
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(poly_gcd(&p, &UniPoly::from_ints(&[-1, 1])).unwrap(), UniPoly::from_ints(&[-1, 1]));
        let x2p1 = UniPoly::from_ints(&[1, 0, 1]);
        let x_plus_i = UniPoly::new(vec![Qi::i(), Qi::one()]);
        assert_eq!(poly_gcd(&x2p1, &x_plus_i).unwrap(), x_plus_i);
        assert_eq!(poly_gcd(&UniPoly::x(), &UniPoly::one()).unwrap(), UniPoly::one());
        assert_eq!(poly_gcd(&UniPoly::zero(), &UniPoly::zero()), Err(Error::BothZero));
        assert_eq!(poly_gcd(&UniPoly::zero(), &UniPoly::from_ints(&[2, 4])).unwrap(), UniPoly::new(vec![Qi::frac(1, 2), Qi::one()]));
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&UniPoly::from_ints(&[-1, 0, 1])).unwrap());
        assert!(!is_squarefree(&UniPoly::from_ints(&[1, -2, 1])).unwrap());
        assert!(is_squarefree(&UniPoly::from_ints(&[1, 0, 1])).unwrap());
        assert_eq!(is_squarefree(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[3, 0, -2, 5, 1]);
        let d = UniPoly::new(vec![Qi::i(), Qi::from_int(2)]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }
}
