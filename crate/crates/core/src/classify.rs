//! Matrix predicates on the parameter F, character validation, and the
//! dimension parameters entering the cohomology formulas.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{is_squarefree, Qi, Rational};
use crate::linalg::{eigenspace_dim, flatten_row, inverse, is_similar, min_poly, nullity, rank, QiMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Asymmetry {
    Yes,
    No,
    /// F is not diagonalizable; the criterion used here only covers the diagonalizable case.
    UnknownNonDiagonalizable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixClass {
    pub n: usize,
    pub trace_f: Qi,
    pub trace_finv: Qi,
    #[serde(rename = "P")]
    pub p: Qi,
    pub normalizable: bool,
    pub generic: bool,
    pub asymmetry: Asymmetry,
}

fn square(f: &QiMatrix) -> Result<()> {
    if f.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch("parameter matrix must be square".into()))
    }
}

fn traces(f: &QiMatrix) -> Result<(Qi, Qi)> {
    square(f)?;
    let finv = inverse(f)?;
    Ok((f.trace(), finv.trace()))
}

pub fn is_normalizable(f: &QiMatrix) -> Result<bool> {
    let (a, b) = traces(f)?;
    Ok(a.is_zero() == b.is_zero())
}

fn bad_p(p: &Qi) -> bool {
    p.is_real() && (0..4).any(|k| p.re == Rational::from_int(k))
}

/// Normalizable, and the roots of q² − √P·q + 1 are not roots of unity of
/// order ≥ 3. Over ℚ(i) the latter fails exactly for P ∈ {0, 1, 2, 3}.
pub fn is_generic(f: &QiMatrix) -> Result<bool> {
    let (a, b) = traces(f)?;
    Ok(a.is_zero() == b.is_zero() && !bad_p(&(&a * &b)))
}

/// For diagonalizable F: asymmetry iff F ~ F⁻¹ and the (−1)-eigenspace has even dimension.
pub fn is_asymmetry(f: &QiMatrix) -> Result<Asymmetry> {
    square(f)?;
    let finv = inverse(f)?;
    if !is_squarefree(&min_poly(f))? {
        return Ok(Asymmetry::UnknownNonDiagonalizable);
    }
    let yes = is_similar(f, &finv)? && eigenspace_dim(f, &Qi::from_int(-1)).is_multiple_of(2);
    Ok(if yes { Asymmetry::Yes } else { Asymmetry::No })
}

pub fn classify(f: &QiMatrix) -> Result<MatrixClass> {
    let (trace_f, trace_finv) = traces(f)?;
    let p = &trace_f * &trace_finv;
    let normalizable = trace_f.is_zero() == trace_finv.is_zero();
    Ok(MatrixClass {
        n: f.rows(),
        generic: normalizable && !bad_p(&p),
        asymmetry: is_asymmetry(f)?,
        trace_f,
        trace_finv,
        p,
        normalizable,
    })
}

/// `F = EᵗE⁻¹`.
pub fn f_of_e(e: &QiMatrix) -> Result<QiMatrix> {
    square(e)?;
    Ok(e.transpose().mul(&inverse(e)?))
}

/// Character of H(F) given by S = τ(u), T = τ(v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterH {
    pub f: QiMatrix,
    pub s: QiMatrix,
    pub t: QiMatrix,
}

/// Character of B(E) given by T = τ(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterB {
    pub e: QiMatrix,
    pub t: QiMatrix,
}

/// Character of A(E): a character of B(E) together with t = τ(g) = ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterA {
    pub base: CharacterB,
    pub t: Qi,
}

fn same_size(a: &QiMatrix, b: &QiMatrix) -> Result<()> {
    square(a)?;
    if !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch("character and parameter sizes differ".into()));
    }
    Ok(())
}

/// Evaluates the four defining matrix relations of H(F) at u ↦ S, v ↦ S⁻ᵗ.
pub fn validate_character_h(f: &QiMatrix, s: &QiMatrix) -> Result<CharacterH> {
    same_size(f, s)?;
    let finv = inverse(f)?;
    let t = inverse(s)?.transpose();
    let st = s.transpose();
    let checks = [
        ("u v^t = I", s.mul(&t.transpose())),
        ("v^t u = I", t.transpose().mul(s)),
        ("v F u^t F^-1 = I", t.mul(f).mul(&st).mul(&finv)),
        ("F u^t F^-1 v = I", f.mul(&st).mul(&finv).mul(&t)),
    ];
    for (name, m) in checks {
        if !m.is_identity() {
            return Err(Error::NotACharacter(name.into()));
        }
    }
    Ok(CharacterH { f: f.clone(), s: s.clone(), t })
}

pub fn validate_character_b(e: &QiMatrix, t: &QiMatrix) -> Result<CharacterB> {
    same_size(e, t)?;
    let einv = inverse(e)?;
    let tt = t.transpose();
    if !einv.mul(&tt).mul(e).mul(t).is_identity() {
        return Err(Error::NotACharacter("E^-1 x^t E x = I".into()));
    }
    if !t.mul(&einv).mul(&tt).mul(e).is_identity() {
        return Err(Error::NotACharacter("x E^-1 x^t E = I".into()));
    }
    Ok(CharacterB { e: e.clone(), t: t.clone() })
}

pub fn validate_character_a(e: &QiMatrix, t: &QiMatrix, g: &Qi) -> Result<CharacterA> {
    let base = validate_character_b(e, t)?;
    if *g != Qi::one() && *g != Qi::from_int(-1) {
        return Err(Error::NotACharacter("g^2 = 1".into()));
    }
    Ok(CharacterA { base, t: g.clone() })
}

/// dim{K : KX = XK}.
pub fn centralizer_dim(x: &QiMatrix) -> usize {
    let n = x.rows();
    // row index (i,j) of KX − XK, column index (a,b) of K
    let m = QiMatrix::from_fn(n * n, n * n, |r, c| {
        let (i, j) = (r / n, r % n);
        let (a, b) = (c / n, c % n);
        let mut v = Qi::zero();
        if a == i {
            v = &v + &x[(b, j)];
        }
        if b == j {
            v = &v - &x[(i, a)];
        }
        v
    });
    nullity(&m)
}

/// dim{K : Kᵗ + TᵗFK = 0}.
pub fn skew_dim(f: &QiMatrix, t: &QiMatrix) -> usize {
    let n = f.rows();
    let tf = t.transpose().mul(f);
    let m = QiMatrix::from_fn(n * n, n * n, |r, c| {
        let (i, j) = (r / n, r % n);
        let (a, b) = (c / n, c % n);
        let mut v = Qi::zero();
        if a == j && b == i {
            v = Qi::one();
        }
        if b == j {
            v = &v + &tf[(i, a)];
        }
        v
    });
    nullity(&m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamsH {
    pub p: usize,
    pub d: usize,
    pub t: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamsB {
    pub p: usize,
    pub d: usize,
    pub s: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamsA {
    pub p: usize,
    pub d: usize,
    pub s: usize,
    pub q: usize,
}

pub fn params_h(c: &CharacterH) -> ParamsH {
    let n = c.f.rows();
    let p = usize::from(c.s.is_identity() && c.t.is_identity());
    let d = centralizer_dim(&c.f.transpose().mul(&c.s));
    let finv = inverse(&c.f).expect("validated");
    let tinv = inverse(&c.t).expect("validated");
    let row1: Vec<Qi> = flatten_row(&finv.neg())
        .into_iter()
        .chain(flatten_row(&c.t.transpose().mul(&finv.transpose())))
        .collect();
    let row2: Vec<Qi> = flatten_row(&c.f.mul(&tinv))
        .into_iter()
        .chain(flatten_row(&c.f.transpose().neg()))
        .collect();
    let m = QiMatrix::new(2, 2 * n * n, row1.into_iter().chain(row2).collect()).expect("2 x 2n^2");
    ParamsH { p, d, t: rank(&m) }
}

pub fn params_b(c: &CharacterB) -> ParamsB {
    let f = f_of_e(&c.e).expect("validated");
    let p = usize::from(c.t.is_identity());
    let d = skew_dim(&f, &c.t);
    let einv_t = inverse(&c.e).expect("validated").transpose();
    let s = usize::from(c.e.mul(&c.t).mul(&einv_t) != f);
    ParamsB { p, d, s }
}

pub fn params_a(c: &CharacterA) -> ParamsA {
    let b = params_b(&c.base);
    ParamsA { p: b.p, d: b.d, s: b.s, q: usize::from(c.t.is_one()) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(xs: &[i64]) -> QiMatrix {
        QiMatrix::diag(&xs.iter().map(|&x| Qi::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn normalizable_examples() {
        assert!(is_normalizable(&QiMatrix::identity(2)).unwrap());
        assert!(is_normalizable(&d(&[1, -1])).unwrap());
        assert!(!is_normalizable(&d(&[1, 1, -2])).unwrap());
        assert_eq!(is_normalizable(&QiMatrix::zeros(2, 2)), Err(Error::Singular));
    }

    #[test]
    fn generic_examples() {
        for n in 2..5 {
            assert!(is_generic(&QiMatrix::identity(n)).unwrap());
        }
        assert!(!is_generic(&d(&[1, -1])).unwrap());
        let g = QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)]);
        assert!(is_generic(&g).unwrap());
        assert_eq!(classify(&g).unwrap().p, Qi::frac(49, 4));
    }

    #[test]
    fn asymmetry_examples() {
        let e = QiMatrix::from_ints(&[&[0, 0, 2], &[0, 1, 0], &[1, 0, 0]]);
        let f = f_of_e(&e).unwrap();
        assert_eq!(f, QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)]));
        assert_eq!(is_asymmetry(&f).unwrap(), Asymmetry::Yes);
        assert_eq!(is_asymmetry(&d(&[2, 2])).unwrap(), Asymmetry::No);
        let minus = d(&[-1, -1]);
        assert_eq!(is_asymmetry(&minus).unwrap(), Asymmetry::Yes);
        assert_eq!(f_of_e(&QiMatrix::from_ints(&[&[0, 1], &[-1, 0]])).unwrap(), minus);
        let jordan = QiMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(is_asymmetry(&jordan).unwrap(), Asymmetry::UnknownNonDiagonalizable);
    }

    #[test]
    fn character_h_examples() {
        let f = QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)]);
        let c = validate_character_h(&f, &QiMatrix::identity(3)).unwrap();
        assert!(c.t.is_identity());
        let c = validate_character_h(&f, &d(&[-1, -1, -1])).unwrap();
        assert_eq!(c.t, d(&[-1, -1, -1]));
        let swap = QiMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(matches!(validate_character_h(&d(&[1, 2]), &swap), Err(Error::NotACharacter(_))));
        assert_eq!(validate_character_h(&d(&[1, 2]), &QiMatrix::zeros(2, 2)), Err(Error::Singular));
    }

    #[test]
    fn character_b_examples() {
        let rot = QiMatrix::from_ints(&[&[0, 1], &[-1, 0]]);
        assert!(validate_character_b(&QiMatrix::identity(2), &rot).is_ok());
        assert!(matches!(
            validate_character_b(&QiMatrix::identity(2), &d(&[2, 1])),
            Err(Error::NotACharacter(_))
        ));
        assert!(matches!(
            validate_character_a(&QiMatrix::identity(2), &QiMatrix::identity(2), &Qi::from_int(2)),
            Err(Error::NotACharacter(_))
        ));
    }

    #[test]
    fn centralizer_and_skew() {
        assert_eq!(centralizer_dim(&QiMatrix::identity(2)), 4);
        assert_eq!(centralizer_dim(&d(&[1, 2])), 2);
        let f = QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)]);
        assert_eq!(centralizer_dim(&f.transpose()), 3);
        assert_eq!(skew_dim(&QiMatrix::identity(3), &QiMatrix::identity(3)), 3);
        assert_eq!(skew_dim(&QiMatrix::identity(2), &QiMatrix::identity(2)), 1);
        assert_eq!(skew_dim(&QiMatrix::identity(2), &d(&[-1, -1])), 3);
    }

    #[test]
    fn params_examples() {
        let i2 = QiMatrix::identity(2);
        let c = validate_character_h(&i2, &i2).unwrap();
        assert_eq!(params_h(&c), ParamsH { p: 1, d: 4, t: 1 });
        let f = QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)]);
        let c = validate_character_h(&f, &QiMatrix::identity(3)).unwrap();
        assert_eq!(params_h(&c), ParamsH { p: 1, d: 3, t: 2 });
        let c = validate_character_h(&i2, &d(&[-1, -1])).unwrap();
        assert_eq!(params_h(&c), ParamsH { p: 0, d: 4, t: 1 });

        let i3 = QiMatrix::identity(3);
        assert_eq!(params_b(&validate_character_b(&i3, &i3).unwrap()), ParamsB { p: 1, d: 3, s: 0 });
        assert_eq!(params_b(&validate_character_b(&i2, &d(&[-1, -1])).unwrap()), ParamsB { p: 0, d: 3, s: 1 });
        assert_eq!(params_b(&validate_character_b(&i2, &i2).unwrap()), ParamsB { p: 1, d: 1, s: 0 });
    }
}
