//! The scalar dual complexes agree with the symbolic resolutions evaluated at the character:
//! `hom(Ψ, ℂ_τ)` has matrix `τ(Ψ)ᵗ` in the coordinates `φ ↦ (φ(e_i))_i`.

use hopfres::classify::{validate_character_a, validate_character_b, validate_character_h};
use hopfres::complexes::{build_dual_a, build_dual_b, build_dual_h, cohomology_dims, ScalarComplex};
use hopfres::ncalg::*;
use hopfres::{Qi, QiMatrix};

fn values(p: &Presentation, blocks: &[(&str, &QiMatrix)], g: Option<Qi>) -> Vec<Qi> {
    let alpha = p.alphabet();
    let mut v = vec![Qi::zero(); alpha.len()];
    for (b, m) in blocks {
        let n = m.rows();
        for i in 0..n {
            for j in 0..n {
                v[alpha.letter(&entry_label(b, n, i, j)).unwrap() as usize] = m.row(i)[j].clone();
            }
        }
    }
    if let Some(g) = g {
        v[alpha.letter("g").unwrap() as usize] = g;
    }
    v
}

fn evaluated_duals(p: &Presentation, vals: &[Qi]) -> Vec<QiMatrix> {
    resolution_matrices(p)
        .unwrap()
        .maps
        .iter()
        .map(|m| QiMatrix::from_fn(m.cols(), m.rows(), |i, j| m.get(j, i).eval(vals)))
        .collect()
}

fn signed_permutations() -> Vec<QiMatrix> {
    let mut out = Vec::new();
    for swap in [false, true] {
        for s0 in [1, -1] {
            for s1 in [1, -1] {
                out.push(if swap {
                    QiMatrix::from_ints(&[&[0, s0], &[s1, 0]])
                } else {
                    QiMatrix::from_ints(&[&[s0, 0], &[0, s1]])
                });
            }
        }
    }
    out
}

#[test]
fn h_duals_match_evaluated_resolution() {
    let fs = [QiMatrix::identity(2), QiMatrix::diag_frac(&[(1, 2), (3, 1)]), QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)])];
    for f in &fs {
        let n = f.rows();
        let p = presentation_h(f).unwrap();
        let ss = [
            QiMatrix::identity(n),
            QiMatrix::scalar(n, Qi::from_int(-1)),
            QiMatrix::diag(&(0..n).map(|k| Qi::from_int(k as i64 + 2)).collect::<Vec<_>>()),
        ];
        for s in &ss {
            let c = validate_character_h(f, s).unwrap();
            let vals = values(&p, &[("u", &c.s), ("v", &c.t)], None);
            assert_eq!(evaluated_duals(&p, &vals), build_dual_h(&c).unwrap().maps().to_vec(), "F={f:?} S={s:?}");
        }
    }
}

#[test]
fn b_duals_match_evaluated_resolution() {
    let e = QiMatrix::identity(2);
    let p = presentation_b(&e).unwrap();
    for t in signed_permutations() {
        let c = validate_character_b(&e, &t).unwrap();
        let vals = values(&p, &[("x", &t)], None);
        assert_eq!(evaluated_duals(&p, &vals), build_dual_b(&c).unwrap().maps().to_vec(), "T={t:?}");
    }
}

#[test]
fn a_duals_match_evaluated_resolution_up_to_scaling() {
    // with τ(g) = −1 the (1 − g) summand contributes τ(1 − g) = 2 where the dual complex uses 1
    let e = QiMatrix::identity(2);
    let p = presentation_a(&e).unwrap();
    let minus = Qi::from_int(-1);
    for t in signed_permutations() {
        let c = validate_character_a(&e, &t, &minus).unwrap();
        let vals = values(&p, &[("x", &t)], Some(minus.clone()));
        let maps = evaluated_duals(&p, &vals);
        let evaluated = ScalarComplex::new(vec![1, 5, 4, 1], maps).unwrap();
        let dual = build_dual_a(&c).unwrap();
        assert_eq!(cohomology_dims(&evaluated).unwrap(), cohomology_dims(&dual).unwrap(), "T={t:?}");
    }
}
