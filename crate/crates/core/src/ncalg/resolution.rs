use std::sync::Arc;

use super::algmatrix::AlgMatrix;
use super::membership::IdealOracle;
use super::presentation::{Presentation, PresentationKind};
use super::verify::{run_queries, Query, VerificationReport};
use super::word::{Alphabet, NcPoly};
use crate::error::{Error, Result};
use crate::exactfield::Qi;
use crate::linalg::{inverse, QiMatrix};

/// Maps `P₁ → P₀`, `P₂ → P₁`, `P₃ → P₂` between free modules, plus the augmentation.
///
/// Column `j` of a map holds the image of the `j`-th basis vector, so
/// `Ψ(Σ e_j a_j) = Σ e_i h_ij a_j` and composition is the matrix product.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub maps: Vec<AlgMatrix>,
    /// `ε(Σ e_i a_i) = Σ counit_row[i] ε(a_i)`.
    pub counit_row: Vec<Qi>,
}

fn unit(alpha: &Arc<Alphabet>, n: usize, p: usize, q: usize) -> AlgMatrix {
    AlgMatrix::lift(alpha, &QiMatrix::from_fn(n, n, |i, j| if (i, j) == (p, q) { Qi::one() } else { Qi::zero() }))
}

fn tr(a: &AlgMatrix) -> NcPoly {
    let mut acc = NcPoly::zero(a.get(0, 0).alphabet());
    for i in 0..a.rows() {
        acc = &acc + a.get(i, i);
    }
    acc
}

/// Builds a matrix from the images of the basis vectors, each image a list of blocks.
fn from_columns(cols: Vec<Vec<AlgMatrix>>) -> AlgMatrix {
    let columns: Vec<AlgMatrix> = cols
        .into_iter()
        .map(|blocks| {
            let flat: Vec<AlgMatrix> = blocks.iter().map(AlgMatrix::flatten_column).collect();
            AlgMatrix::vstack(&flat.iter().collect::<Vec<_>>())
        })
        .collect();
    AlgMatrix::hstack(&columns.iter().collect::<Vec<_>>())
}

fn one_by_one(p: NcPoly) -> AlgMatrix {
    AlgMatrix::new(1, 1, vec![p]).expect("1x1")
}

fn b_maps(alpha: &Arc<Alphabet>, e: &QiMatrix, with_g: bool) -> Result<Vec<AlgMatrix>> {
    let n = e.rows();
    let einv = inverse(e)?;
    let x = AlgMatrix::generators(alpha, "x", n);
    let xt = x.transpose();
    let one = NcPoly::one(alpha);
    let basis: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).collect();

    // tr(xᵗA) − tr(A)
    let mut phi1: Vec<Vec<AlgMatrix>> = basis
        .iter()
        .map(|&(p, q)| {
            let a = unit(alpha, n, p, q);
            vec![one_by_one(&tr(&xt.mul(&a)) - &tr(&a))]
        })
        .collect();
    // A + (E⁻¹xᵗAE)ᵗ
    let mut phi2: Vec<Vec<AlgMatrix>> = basis
        .iter()
        .map(|&(p, q)| {
            let a = unit(alpha, n, p, q);
            vec![a.add(&xt.mul(&a).left_scalar(&einv).right_scalar(e).transpose())]
        })
        .collect();
    // (ExE⁻ᵗ − EᵗE⁻¹)a
    let phi3 = vec![vec![x
        .left_scalar(e)
        .right_scalar(&einv.transpose())
        .sub(&AlgMatrix::lift(alpha, &e.transpose().mul(&einv)))]];
    if with_g {
        let g = NcPoly::var(alpha, "g");
        phi1.push(vec![one_by_one(&one - &g)]);
        for col in &mut phi2 {
            col.push(one_by_one(NcPoly::zero(alpha)));
        }
    }
    Ok(vec![from_columns(phi1), from_columns(phi2), from_columns(phi3)])
}

fn h_maps(alpha: &Arc<Alphabet>, f: &QiMatrix) -> Result<Vec<AlgMatrix>> {
    let n = f.rows();
    let finv = inverse(f)?;
    let u = AlgMatrix::generators(alpha, "u", n);
    let v = AlgMatrix::generators(alpha, "v", n);
    let zero1 = one_by_one(NcPoly::zero(alpha));
    let one = NcPoly::one(alpha);
    let basis: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).collect();

    // (tr(−A + uB) + c, tr(vA − B) − c)
    let mut psi1: Vec<Vec<AlgMatrix>> = Vec::new();
    for &(p, q) in &basis {
        let a = unit(alpha, n, p, q);
        psi1.push(vec![one_by_one(tr(&a.neg())), one_by_one(tr(&v.mul(&a)))]);
    }
    for &(p, q) in &basis {
        let b = unit(alpha, n, p, q);
        psi1.push(vec![one_by_one(tr(&u.mul(&b))), one_by_one(tr(&b.neg()))]);
    }
    psi1.push(vec![one_by_one(one.clone()), one_by_one(one.neg())]);

    // (Aᵗ + FuᵗBF⁻¹, vᵗA + Bᵗ, 0)
    let mut psi2: Vec<Vec<AlgMatrix>> = Vec::new();
    for &(p, q) in &basis {
        let a = unit(alpha, n, p, q);
        psi2.push(vec![a.transpose(), v.transpose().mul(&a), zero1.clone()]);
    }
    for &(p, q) in &basis {
        let b = unit(alpha, n, p, q);
        psi2.push(vec![u.transpose().mul(&b).left_scalar(f).right_scalar(&finv), b.transpose(), zero1.clone()]);
    }

    // (−F⁻ᵗa + uFᵗb, F⁻¹va − Fb)
    let psi3 = vec![
        vec![AlgMatrix::lift(alpha, &finv.transpose().neg()), v.left_scalar(&finv)],
        vec![u.right_scalar(&f.transpose()), AlgMatrix::lift(alpha, &f.neg())],
    ];
    Ok(vec![from_columns(psi1), from_columns(psi2), from_columns(psi3)])
}

/// The free resolution of the counit for a built-in presentation.
pub fn resolution_matrices(p: &Presentation) -> Result<Resolution> {
    let alpha = p.alphabet();
    match p.kind() {
        PresentationKind::B(e) => Ok(Resolution { maps: b_maps(alpha, e, false)?, counit_row: vec![Qi::one()] }),
        PresentationKind::A(e) => Ok(Resolution { maps: b_maps(alpha, e, true)?, counit_row: vec![Qi::one()] }),
        PresentationKind::H(f) => Ok(Resolution { maps: h_maps(alpha, f)?, counit_row: vec![Qi::one(), Qi::one()] }),
        _ => Err(Error::UnsupportedPresentation),
    }
}

/// d² = 0 at the symbolic level: entries of `Φ₁Φ₂` and `Φ₂Φ₃` lie in the ideal,
/// and the augmentation kills the image of `Φ₁`.
pub fn run_resolution_complex(p: &Presentation, bound: usize) -> Result<VerificationReport> {
    run_resolution_with(p, &resolution_matrices(p)?, bound)
}

pub fn run_resolution_with(p: &Presentation, res: &Resolution, bound: usize) -> Result<VerificationReport> {
    let alpha = p.alphabet();
    let oracle = IdealOracle::new(p.clone());
    let counit = p.counit().ok_or(Error::UnsupportedPresentation)?.values.clone();
    let mut queries = Vec::new();
    let first = &res.maps[0];
    for j in 0..first.cols() {
        let mut c = Qi::zero();
        for (i, w) in res.counit_row.iter().enumerate() {
            c += &(w * &first.get(i, j).eval(&counit));
        }
        queries.push(Query::new(format!("counit*d1[{j}]"), NcPoly::constant(alpha, c)));
    }
    for k in 0..res.maps.len() - 1 {
        let prod = res.maps[k].mul(&res.maps[k + 1]);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                queries.push(Query::new(format!("d{}*d{}[{i},{j}]", k + 1, k + 2), prod.get(i, j).clone()));
            }
        }
    }
    let items = run_queries(&oracle, queries, bound)?;
    Ok(VerificationReport { suite: "complex".into(), bound, items })
}

pub fn verify_resolution_complex(p: &Presentation, bound: usize) -> Result<VerificationReport> {
    run_resolution_complex(p, bound)?.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presentation::{presentation_b, presentation_h};

    #[test]
    fn shapes_and_entries() {
        let h = presentation_h(&QiMatrix::identity(2)).unwrap();
        let r = resolution_matrices(&h).unwrap();
        let dims: Vec<(usize, usize)> = r.maps.iter().map(|m| (m.rows(), m.cols())).collect();
        assert_eq!(dims, vec![(2, 9), (9, 8), (8, 2)]);
        // tr(u·e_jk) = u_kj, B block starts at column 4
        assert_eq!(r.maps[0].get(0, 4 + 1), &h.var("u21"));
        let b = presentation_b(&QiMatrix::identity(2)).unwrap();
        let r = resolution_matrices(&b).unwrap();
        let col: Vec<NcPoly> = (0..4).map(|i| r.maps[2].get(i, 0).clone()).collect();
        let one = NcPoly::one(b.alphabet());
        assert_eq!(col, vec![&b.var("x11") - &one, b.var("x12"), b.var("x21"), &b.var("x22") - &one]);
    }
}
