//! Scalar dual complexes of the counit resolutions and of the bialgebra
//! complexes, their cohomology by rank-nullity, and the closed formulas.

use serde::Serialize;

use crate::classify::{
    f_of_e, is_generic, params_a, params_b, params_h, CharacterA, CharacterB, CharacterH, ParamsA, ParamsB,
    ParamsH,
};
use crate::error::{Error, Result};
use crate::exactfield::Qi;
use crate::linalg::{flatten_row, inverse, rank, unflatten_row, QiMatrix, VecQi};

/// Finite cochain complex `C⁰ → C¹ → …` with `maps[k]: Cᵏ → Cᵏ⁺¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarComplex {
    space_dims: Vec<usize>,
    maps: Vec<QiMatrix>,
}

impl ScalarComplex {
    /// Checks shapes and that consecutive maps compose to zero.
    pub fn new(space_dims: Vec<usize>, maps: Vec<QiMatrix>) -> Result<Self> {
        if maps.len() + 1 != space_dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} spaces need {} maps, got {}",
                space_dims.len(),
                space_dims.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (k, m) in maps.iter().enumerate() {
            if m.cols() != space_dims[k] || m.rows() != space_dims[k + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "map {k} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    space_dims[k + 1],
                    space_dims[k]
                )));
            }
        }
        let c = ScalarComplex { space_dims, maps };
        c.check_composition()?;
        Ok(c)
    }

    pub fn check_composition(&self) -> Result<()> {
        for k in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[k + 1].mul(&self.maps[k]).is_zero() {
                return Err(Error::NotAComplex(k, k + 1));
            }
        }
        Ok(())
    }

    pub fn space_dims(&self) -> &[usize] {
        &self.space_dims
    }

    pub fn maps(&self) -> &[QiMatrix] {
        &self.maps
    }
}

/// `dims[k] = nullity(maps[k]) − rank(maps[k−1])`, with zero maps at both ends.
pub fn cohomology_dims(c: &ScalarComplex) -> Result<Vec<usize>> {
    c.check_composition()?;
    let ranks: Vec<usize> = c.maps.iter().map(rank).collect();
    Ok((0..c.space_dims.len())
        .map(|k| {
            let out_rank = ranks.get(k).copied().unwrap_or(0);
            let in_rank = if k == 0 { 0 } else { ranks[k - 1] };
            c.space_dims[k] - out_rank - in_rank
        })
        .collect())
}

/// Matrix of a linear map given as a function on coordinate vectors.
fn matrix_of(in_dim: usize, out_dim: usize, f: impl Fn(&[Qi]) -> VecQi) -> QiMatrix {
    let mut m = QiMatrix::zeros(out_dim, in_dim);
    for j in 0..in_dim {
        let mut e = vec![Qi::zero(); in_dim];
        e[j] = Qi::one();
        let col = f(&e);
        debug_assert_eq!(col.len(), out_dim);
        for (i, v) in col.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

fn block(v: &[Qi], k: usize, n: usize) -> QiMatrix {
    unflatten_row(&v[k * n * n..(k + 1) * n * n], n).expect("block length n^2")
}

/// `tr(XᵗY)` as a row functional on flattened `Y`.
fn pairing_row(x: &QiMatrix) -> QiMatrix {
    QiMatrix::row_vector(&flatten_row(x))
}

fn b_maps(c: &CharacterB) -> (QiMatrix, QiMatrix, QiMatrix) {
    let e = &c.e;
    let t = &c.t;
    let n = e.rows();
    let einv = inverse(e).expect("validated");
    let einv_t = einv.transpose();
    let et = e.transpose();
    let m1 = QiMatrix::column_vector(&flatten_row(&t.sub(&QiMatrix::identity(n))));
    let te = t.mul(&einv_t);
    let m2 = matrix_of(n * n, n * n, |v| {
        let l = block(v, 0, n);
        flatten_row(&l.add(&te.mul(&l.transpose()).mul(&et)))
    });
    let m3 = pairing_row(&e.mul(t).mul(&einv_t).sub(&et.mul(&einv)));
    (m1, m2, m3)
}

/// `ℂ → Mₙ → Mₙ → ℂ` with λ ↦ λ(T − I), Λ ↦ Λ + TE⁻ᵗΛᵗEᵗ, Λ ↦ tr(Λᵗ(ETE⁻ᵗ − EᵗE⁻¹)).
pub fn build_dual_b(c: &CharacterB) -> Result<ScalarComplex> {
    let n = c.e.rows();
    let (m1, m2, m3) = b_maps(c);
    ScalarComplex::new(vec![1, n * n, n * n, 1], vec![m1, m2, m3])
}

/// As for B(E), with an extra coordinate in the middle space when τ(g) = −1.
pub fn build_dual_a(c: &CharacterA) -> Result<ScalarComplex> {
    let n = c.base.e.rows();
    let (m1, m2, m3) = b_maps(&c.base);
    if c.t.is_one() {
        return ScalarComplex::new(vec![1, n * n, n * n, 1], vec![m1, m2, m3]);
    }
    let m1 = QiMatrix::vstack(&[&m1, &QiMatrix::from_ints(&[&[1]])]);
    let m2 = QiMatrix::hstack(&[&m2, &QiMatrix::zeros(n * n, 1)]);
    ScalarComplex::new(vec![1, n * n + 1, n * n, 1], vec![m1, m2, m3])
}

/// `ℂ² → Mₙ⊕Mₙ⊕ℂ → Mₙ⊕Mₙ → ℂ²`, coordinates ordered (Λ block, M block, ν).
pub fn build_dual_h(c: &CharacterH) -> Result<ScalarComplex> {
    let (f, s, t) = (&c.f, &c.s, &c.t);
    let n = f.rows();
    let nn = n * n;
    let id = QiMatrix::identity(n);
    let finv = inverse(f)?;
    let tinv = inverse(t)?;

    let m1 = matrix_of(2, 2 * nn + 1, |v| {
        let (l, m) = (&v[0], &v[1]);
        let a = id.scale(&-l).add(&t.transpose().scale(m));
        let b = s.transpose().scale(l).sub(&id.scale(m));
        let mut out = flatten_row(&a);
        out.extend(flatten_row(&b));
        out.push(l - m);
        out
    });
    let sft = s.mul(&f.transpose());
    let finv_t = finv.transpose();
    let m2 = matrix_of(2 * nn + 1, 2 * nn, |v| {
        let (l, m) = (block(v, 0, n), block(v, 1, n));
        let a = l.transpose().add(&t.mul(&m));
        let b = sft.mul(&l).mul(&finv_t).add(&m.transpose());
        let mut out = flatten_row(&a);
        out.extend(flatten_row(&b));
        out
    });
    // tr(XΛ) = tr((Xᵗ)ᵗΛ)
    let r1 = QiMatrix::hstack(&[
        &pairing_row(&finv.neg().transpose()),
        &pairing_row(&t.transpose().mul(&finv_t).transpose()),
    ]);
    let r2 = QiMatrix::hstack(&[
        &pairing_row(&f.mul(&tinv).transpose()),
        &pairing_row(&f.transpose().neg().transpose()),
    ]);
    let m3 = QiMatrix::vstack(&[&r1, &r2]);
    ScalarComplex::new(vec![2, 2 * nn + 1, 2 * nn, 2], vec![m1, m2, m3])
}

/// `ℂ² → ℂ³ → ℂ² → ℂ²` obtained by restricting to constant diagonal matrices.
pub fn build_bialgebra_h(f: &QiMatrix) -> Result<ScalarComplex> {
    inverse(f)?;
    let tr = f.trace();
    let m1 = QiMatrix::from_ints(&[&[-1, 1], &[1, -1], &[1, -1]]);
    let m2 = QiMatrix::from_ints(&[&[1, 1, 0], &[1, 1, 0]]);
    let m3 = QiMatrix::from_ints(&[&[-1, 1], &[1, -1]]).scale(&tr);
    ScalarComplex::new(vec![2, 3, 2, 2], vec![m1, m2, m3])
}

/// `ℂ →0→ ℂ →2→ ℂ →0→ ℂ`.
pub fn build_bialgebra_a(e: &QiMatrix) -> Result<ScalarComplex> {
    inverse(e)?;
    let m = |x| QiMatrix::from_ints(&[&[x]]);
    ScalarComplex::new(vec![1, 1, 1, 1], vec![m(0), m(2), m(0)])
}

/// The two characters of ℂZ₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cz2Character {
    Counit,
    Sign,
}

/// `hom(ℂZ₂, ℂ_τ) → hom(ℂ(1−g), ℂ_τ)`; the target vanishes for the counit.
pub fn build_dual_cz2(tau: Cz2Character) -> Result<ScalarComplex> {
    match tau {
        Cz2Character::Counit => ScalarComplex::new(vec![1, 0], vec![QiMatrix::zeros(0, 1)]),
        Cz2Character::Sign => ScalarComplex::new(vec![1, 1], vec![QiMatrix::from_ints(&[&[2]])]),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Formula,
    Rank,
    #[default]
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Params {
    B(ParamsB),
    A(ParamsA),
    H(ParamsH),
    None {},
}

#[derive(Debug, Clone)]
pub enum ReportInput {
    B(CharacterB),
    A(CharacterA),
    H(CharacterH),
    Cz2(Cz2Character),
    BialgebraH(QiMatrix),
    BialgebraA(QiMatrix),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    #[serde(rename = "dims_rank")]
    pub dims_by_rank: Option<Vec<usize>>,
    #[serde(rename = "dims_formula")]
    pub dims_by_formula: Option<Vec<i64>>,
    pub params: Params,
    pub agree: bool,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub genericity_warning: bool,
}

const NON_GENERIC: &str =
    "parameter F is not generic: ranks are reported but exactness of the resolution is not established";

fn generic_warning(f: &QiMatrix) -> Result<Vec<String>> {
    Ok(if is_generic(f)? { vec![] } else { vec![NON_GENERIC.to_string()] })
}

pub fn formula_b(p: &ParamsB) -> Vec<i64> {
    let (p, d, s) = (p.p as i64, p.d as i64, p.s as i64);
    vec![p, d - 1 + p, d - s, 1 - s]
}

pub fn formula_a(p: &ParamsA) -> Vec<i64> {
    let (p, d, s, q) = (p.p as i64, p.d as i64, p.s as i64, p.q as i64);
    vec![p * q, d - (1 - p) * q, d - s, 1 - s]
}

pub fn formula_h(p: &ParamsH) -> Vec<i64> {
    let (p, d, t) = (p.p as i64, p.d as i64, p.t as i64);
    vec![p, d + p - 1, d - t, 2 - t]
}

/// Computes the requested paths and compares them.
pub fn report(input: &ReportInput, mode: Mode) -> Result<CohomologyReport> {
    let (complex, formula, params, warnings) = match input {
        ReportInput::B(c) => {
            let p = params_b(c);
            (build_dual_b(c)?, formula_b(&p), Params::B(p), vec![])
        }
        ReportInput::A(c) => {
            let p = params_a(c);
            let w = generic_warning(&f_of_e(&c.base.e)?)?;
            (build_dual_a(c)?, formula_a(&p), Params::A(p), w)
        }
        ReportInput::H(c) => {
            let p = params_h(c);
            let w = generic_warning(&c.f)?;
            (build_dual_h(c)?, formula_h(&p), Params::H(p), w)
        }
        ReportInput::Cz2(tau) => {
            let f = match tau {
                Cz2Character::Counit => vec![1, 0],
                Cz2Character::Sign => vec![0, 0],
            };
            (build_dual_cz2(*tau)?, f, Params::None {}, vec![])
        }
        ReportInput::BialgebraH(f) => {
            let w = generic_warning(f)?;
            (build_bialgebra_h(f)?, vec![1, 1, 0, 1], Params::None {}, w)
        }
        ReportInput::BialgebraA(e) => {
            let w = generic_warning(&f_of_e(e)?)?;
            (build_bialgebra_a(e)?, vec![1, 0, 0, 1], Params::None {}, w)
        }
    };
    let dims_by_rank = match mode {
        Mode::Formula => None,
        _ => Some(cohomology_dims(&complex)?),
    };
    let dims_by_formula = match mode {
        Mode::Rank => None,
        _ => Some(formula),
    };
    let agree = match (&dims_by_rank, &dims_by_formula) {
        (Some(r), Some(f)) => r.len() == f.len() && r.iter().zip(f).all(|(&a, &b)| a as i64 == b),
        _ => true,
    };
    Ok(CohomologyReport {
        dims_by_rank,
        dims_by_formula,
        params,
        agree,
        genericity_warning: !warnings.is_empty(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{validate_character_a, validate_character_b, validate_character_h};

    fn neg_id(n: usize) -> QiMatrix {
        QiMatrix::scalar(n, Qi::from_int(-1))
    }

    #[test]
    fn dual_b_examples() {
        let i2 = QiMatrix::identity(2);
        let c = build_dual_b(&validate_character_b(&i2, &i2).unwrap()).unwrap();
        assert!(c.maps()[0].is_zero());
        assert_eq!(rank(&c.maps()[1]), 3);
        assert_eq!(cohomology_dims(&c).unwrap(), vec![1, 1, 1, 1]);
        let c = build_dual_b(&validate_character_b(&i2, &neg_id(2)).unwrap()).unwrap();
        let expected = QiMatrix::row_vector(&flatten_row(&QiMatrix::scalar(2, Qi::from_int(-2))));
        assert_eq!(c.maps()[2], expected);
        assert_eq!(rank(&c.maps()[2]), 1);
    }

    #[test]
    fn dual_a_examples() {
        let i2 = QiMatrix::identity(2);
        let c = build_dual_a(&validate_character_a(&i2, &i2, &Qi::one()).unwrap()).unwrap();
        assert_eq!(c.space_dims(), &[1, 4, 4, 1]);
        let c = build_dual_a(&validate_character_a(&i2, &i2, &Qi::from_int(-1)).unwrap()).unwrap();
        assert_eq!(c.space_dims(), &[1, 5, 4, 1]);
        assert_eq!(c.maps()[0][(4, 0)], Qi::one());
    }

    #[test]
    fn dual_h_examples() {
        let i2 = QiMatrix::identity(2);
        let c = build_dual_h(&validate_character_h(&i2, &i2).unwrap()).unwrap();
        assert_eq!(c.space_dims(), &[2, 9, 8, 2]);
        assert_eq!(cohomology_dims(&c).unwrap(), vec![1, 4, 3, 1]);
        let fi = flatten_row(&i2);
        let neg: Vec<Qi> = fi.iter().map(|x| -x).collect();
        let r1: Vec<Qi> = neg.iter().chain(&fi).cloned().collect();
        let r2: Vec<Qi> = fi.iter().chain(&neg).cloned().collect();
        assert_eq!(c.maps()[2], QiMatrix::new(2, 8, r1.into_iter().chain(r2).collect()).unwrap());
        assert_eq!(rank(&c.maps()[2]), 1);
        let d12 = QiMatrix::diag_frac(&[(1, 1), (2, 1)]);
        assert!(build_dual_h(&validate_character_h(&d12, &i2).unwrap()).is_ok());
    }

    #[test]
    fn bialgebra_examples() {
        let c = build_bialgebra_h(&QiMatrix::identity(2)).unwrap();
        assert_eq!(cohomology_dims(&c).unwrap(), vec![1, 1, 0, 1]);
        let g = QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)]);
        assert_eq!(cohomology_dims(&build_bialgebra_h(&g).unwrap()).unwrap(), vec![1, 1, 0, 1]);
        let f = QiMatrix::diag_frac(&[(1, 1), (-1, 1)]);
        let c = build_bialgebra_h(&f).unwrap();
        assert!(c.maps()[2].is_zero());
        assert_eq!(cohomology_dims(&c).unwrap()[3], 2);
        let r = report(&ReportInput::BialgebraH(f), Mode::Both).unwrap();
        assert!(r.genericity_warning);
        let a = build_bialgebra_a(&QiMatrix::identity(2)).unwrap();
        assert_eq!(cohomology_dims(&a).unwrap(), vec![1, 0, 0, 1]);
        assert_eq!(rank(&a.maps()[1]), 1);
    }

    #[test]
    fn cz2_and_zero_complex() {
        let c = build_dual_cz2(Cz2Character::Counit).unwrap();
        assert_eq!(cohomology_dims(&c).unwrap(), vec![1, 0]);
        let c = build_dual_cz2(Cz2Character::Sign).unwrap();
        assert_eq!(cohomology_dims(&c).unwrap(), vec![0, 0]);
        let z = ScalarComplex::new(vec![1, 0, 0], vec![QiMatrix::zeros(0, 1), QiMatrix::zeros(0, 0)]).unwrap();
        assert_eq!(cohomology_dims(&z).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn not_a_complex_is_rejected() {
        let one = QiMatrix::from_ints(&[&[1]]);
        assert_eq!(
            ScalarComplex::new(vec![1, 1, 1], vec![one.clone(), one]),
            Err(Error::NotAComplex(0, 1))
        );
    }

    #[test]
    fn report_examples() {
        let g = QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)]);
        let r = report(&ReportInput::H(validate_character_h(&g, &QiMatrix::identity(3)).unwrap()), Mode::Both)
            .unwrap();
        // Euler characteristic of the spaces is 2 - 19 + 18 - 2 = -1, so the top degree must vanish
        assert_eq!(r.dims_by_rank, Some(vec![1, 3, 1, 0]));
        assert!(r.agree && !r.genericity_warning);
        let i2 = QiMatrix::identity(2);
        let r = report(&ReportInput::A(validate_character_a(&i2, &i2, &Qi::one()).unwrap()), Mode::Both).unwrap();
        assert_eq!(r.dims_by_formula, Some(vec![1, 1, 1, 1]));
        assert!(r.agree);
        let r = report(&ReportInput::H(validate_character_h(&i2, &neg_id(2)).unwrap()), Mode::Both).unwrap();
        assert_eq!(r.dims_by_rank, Some(vec![0, 3, 3, 1]));
        assert!(r.agree);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"dims_rank":[0,3,3,1],"dims_formula":[0,3,3,1],"params":{"p":0,"d":4,"t":1},"agree":true,"warnings":[]}"#
        );
    }
}
