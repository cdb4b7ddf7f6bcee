//! Membership in the ideal of a tensor square `P ⊗ P`.
//!
//! After normal ordering (left letters first, paid for by commutator relations),
//! an element is `Σ wL ⊗ P_wL`. With bounded normal forms `NF_L`, `NF_R` of the
//! factor it splits as
//! `(wL − NF wL) ⊗ P + NF wL ⊗ (P − NF P) + NF wL ⊗ NF P`;
//! the first two sums carry certificates and the element is a member exactly
//! when the last sum vanishes. The search space is the bidegree box
//! `deg_L ≤ D − d_R`, `deg_R ≤ D − d_L`.

use std::collections::BTreeMap;

use super::membership::{CertTerm, IdealOracle, Membership, MembershipCertificate};
use super::word::{NcPoly, Word};
use crate::error::Result;
use crate::exactfield::Qi;

/// Moves right letters behind left letters; returns the normal-ordered
/// polynomial and the commutator terms used.
pub fn normal_order(p: &NcPoly, m: usize, nrels: usize) -> (NcPoly, Vec<CertTerm>) {
    let mut out = NcPoly::zero(p.alphabet());
    let mut cert = Vec::new();
    for (w, c) in p.terms() {
        let mut letters = w.letters().to_vec();
        loop {
            let Some(i) = (0..letters.len().saturating_sub(1))
                .find(|&i| letters[i] as usize >= m && (letters[i + 1] as usize) < m)
            else {
                break;
            };
            let (r, l) = (letters[i] as usize - m, letters[i + 1] as usize);
            // α R L β = α (R L − L R) β + α L R β
            cert.push(CertTerm {
                coef: c.clone(),
                left: Word::from_letters(&letters[..i]),
                rel: 2 * nrels + l * m + r,
                right: Word::from_letters(&letters[i + 2..]),
            });
            letters.swap(i, i + 1);
        }
        out.add_term(Word::from_letters(&letters), c);
    }
    (out, cert)
}

pub(crate) fn member(sq: &IdealOracle, base: &IdealOracle, p: &NcPoly, bound: usize) -> Result<Membership> {
    let m = base.presentation().alphabet().len();
    let nrels = base.presentation().relations().len();
    let sq_alpha = sq.presentation().alphabet().clone();
    let base_alpha = base.presentation().alphabet().clone();
    let shift = |w: &Word| w.map_letters(|l| l + m as u8);

    let (ordered, mut terms) = normal_order(p, m, nrels);

    let mut groups: BTreeMap<Word, NcPoly> = BTreeMap::new();
    let (mut dl, mut dr) = (0, 0);
    for (w, c) in ordered.terms() {
        let split = w.letters().iter().position(|&l| l as usize >= m).unwrap_or(w.len());
        let wl = Word::from_letters(&w.letters()[..split]);
        let wr = Word::from_letters(&w.letters()[split..]).map_letters(|l| l - m as u8);
        dl = dl.max(wl.len());
        dr = dr.max(wr.len());
        groups.entry(wl).or_insert_with(|| NcPoly::zero(&base_alpha)).add_term(wr, c);
    }
    let bl = bound.saturating_sub(dr).max(dl);
    let br = bound.saturating_sub(dl).max(dr);
    let (left, right) = (base.engine(bl)?, base.engine(br)?);

    let mut rest = NcPoly::zero(&sq_alpha);
    for (wl, pr) in &groups {
        let (nf_l, cert_l) = left.reduce(&NcPoly::monomial(&base_alpha, wl.clone(), Qi::one()))?;
        let (nf_r, cert_r) = right.reduce(pr)?;
        for t in &cert_l.terms {
            for (wr, c) in pr.terms() {
                terms.push(CertTerm {
                    coef: &t.coef * c,
                    left: t.left.clone(),
                    rel: t.rel,
                    right: t.right.concat(&shift(wr)),
                });
            }
        }
        for (a, s) in nf_l.terms() {
            for t in &cert_r.terms {
                terms.push(CertTerm {
                    coef: s * &t.coef,
                    left: a.concat(&shift(&t.left)),
                    rel: nrels + t.rel,
                    right: shift(&t.right),
                });
            }
            for (b, c) in nf_r.terms() {
                rest.add_term(a.concat(&shift(b)), &(s * c));
            }
        }
    }
    Ok(if rest.is_zero() { Membership::Member(MembershipCertificate { terms }) } else { Membership::Undecided })
}

/// `a ⊗ b` as a normal-ordered element of the tensor-square alphabet.
pub fn tensor(sq_alpha: &std::sync::Arc<super::word::Alphabet>, a: &NcPoly, b: &NcPoly) -> NcPoly {
    let m = a.alphabet().len() as u8;
    let mut out = NcPoly::zero(sq_alpha);
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            out.add_term(wa.concat(&wb.map_letters(|l| l + m)), &(ca * cb));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QiMatrix;
    use crate::ncalg::presentation::{presentation_h, tensor_square};

    #[test]
    fn commutator_is_member_and_replays() {
        let h = presentation_h(&QiMatrix::identity(2)).unwrap();
        let t = tensor_square(&h).unwrap();
        let oracle = IdealOracle::new(t.clone());
        let (l, r) = (t.var("L_u11"), t.var("R_v11"));
        let p = &(&(&r * &l) * &r) - &(&(&l * &r) * &r);
        let m = oracle.member(&p, 3).unwrap();
        assert_eq!(m.certificate().unwrap().replay(&t).unwrap(), p);
    }

    #[test]
    fn mixed_relation_products_replay() {
        let h = presentation_h(&QiMatrix::identity(2)).unwrap();
        let t = tensor_square(&h).unwrap();
        let oracle = IdealOracle::new(t.clone());
        let a = &h.relations()[1] * &h.var("v12");
        let b = &h.var("u21") * &h.relations()[6];
        let p = &tensor(t.alphabet(), &a, &h.var("u11")) + &tensor(t.alphabet(), &h.var("v22"), &b);
        // scramble the order so commutators are needed
        let p = &(&(&t.var("R_u12") * &t.var("L_v11")) - &(&t.var("L_v11") * &t.var("R_u12"))) + &p;
        let m = oracle.member(&p, 4).unwrap();
        assert_eq!(m.certificate().unwrap().replay(&t).unwrap(), p);
        let q = tensor(t.alphabet(), &h.var("u11"), &h.var("u11"));
        assert_eq!(oracle.member(&(&q - &tensor(t.alphabet(), &h.var("u11"), &h.var("v11"))), 4).unwrap(), Membership::Undecided);
    }
}
