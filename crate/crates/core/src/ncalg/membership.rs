use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::Serialize;
use serde_json::json;

use super::presentation::{Presentation, PresentationKind};
use super::tensor;
use super::word::{Alphabet, NcPoly, Word};
use crate::error::{Error, Result};
use crate::exactfield::Qi;

/// One summand `coef · left · relations[rel] · right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertTerm {
    pub coef: Qi,
    pub left: Word,
    pub rel: usize,
    pub right: Word,
}

/// Witness that a polynomial lies in the two-sided ideal of the relations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MembershipCertificate {
    pub terms: Vec<CertTerm>,
}

impl MembershipCertificate {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ coef · left · rel · right` in the free algebra.
    pub fn replay(&self, p: &Presentation) -> Result<NcPoly> {
        let mut acc = NcPoly::zero(p.alphabet());
        for t in &self.terms {
            let r = p.relations().get(t.rel).ok_or_else(|| Error::VerificationFailed(format!("relation {}", t.rel)))?;
            acc = acc.checked_add(&r.sandwich(&t.left, &t.right).scale(&t.coef))?;
        }
        Ok(acc)
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|t| {
                    json!({
                        "coef": t.coef.to_string(),
                        "left": alphabet.format_word(&t.left),
                        "rel": t.rel,
                        "right": alphabet.format_word(&t.right),
                    })
                })
                .collect(),
        )
    }
}

/// Three-valued answer of the bounded membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(MembershipCertificate),
    /// A stored character kills the relations but not the polynomial.
    NotMemberByCharacter { character: String, value: Qi },
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Member,
    NotMember,
    Undecided,
}

impl Membership {
    pub fn status(&self) -> Status {
        match self {
            Membership::Member(_) => Status::Member,
            Membership::NotMemberByCharacter { .. } => Status::NotMember,
            Membership::Undecided => Status::Undecided,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    pub fn certificate(&self) -> Option<&MembershipCertificate> {
        match self {
            Membership::Member(c) => Some(c),
            _ => None,
        }
    }
}

pub(crate) fn character_witness(p: &NcPoly, pres: &Presentation) -> Option<Membership> {
    pres.characters().iter().find_map(|c| {
        let value = p.eval(&c.values);
        (!value.is_zero()).then(|| Membership::NotMemberByCharacter { character: c.name.clone(), value })
    })
}

/// Echelon row: `terms = inv_lc · (generator − Σ c·rows[k])`, leading coefficient 1.
struct Row {
    terms: Vec<(u64, Qi)>,
    left: Word,
    rel: u32,
    right: Word,
    inv_lc: Qi,
    steps: Vec<(u32, Qi)>,
}

/// Echelon basis of span{w₁·r·w₂ : deg ≤ bound}, words indexed so that the
/// integer order is the (length, lexicographic) order.
pub struct SpanEngine {
    bound: usize,
    base: u64,
    offsets: Vec<u64>,
    rows: Vec<Row>,
    pivots: HashMap<u64, u32>,
}

impl SpanEngine {
    pub fn build(p: &Presentation, bound: usize) -> Result<Self> {
        let base = p.alphabet().len().max(1) as u64;
        let mut offsets = vec![0u64];
        let mut pow = 1u64;
        for _ in 0..=bound {
            let last = *offsets.last().unwrap();
            offsets.push(last.checked_add(pow).ok_or(Error::DegreeExceedsBound { degree: bound, bound })?);
            pow = pow.checked_mul(base).ok_or(Error::DegreeExceedsBound { degree: bound, bound })?;
        }
        let mut eng = SpanEngine { bound, base, offsets, rows: Vec::new(), pivots: HashMap::new() };

        let rels: Vec<(usize, Vec<(Word, Qi)>)> = p
            .relations()
            .iter()
            .map(|r| (r.degree().unwrap_or(0), r.terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect()))
            .collect();
        let max_extra = bound.saturating_sub(rels.iter().map(|r| r.0).min().unwrap_or(bound));
        let words_by_len: Vec<Vec<Word>> = (0..=max_extra).map(|k| all_words(base as u8, k)).collect();

        for extra in 0..=max_extra {
            for (ri, (deg, terms)) in rels.iter().enumerate() {
                if deg + extra > bound {
                    continue;
                }
                for i in 0..=extra {
                    for w1 in &words_by_len[i] {
                        for w2 in &words_by_len[extra - i] {
                            let mut work = BTreeMap::new();
                            for (t, c) in terms {
                                work.insert(eng.id3(w1, t, w2), c.clone());
                            }
                            eng.insert(work, w1.clone(), ri as u32, w2.clone());
                        }
                    }
                }
            }
        }
        Ok(eng)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Dimension of the bounded span.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn id3(&self, a: &Word, b: &Word, c: &Word) -> u64 {
        let len = a.len() + b.len() + c.len();
        let mut v = 0u64;
        for &l in a.letters().iter().chain(b.letters()).chain(c.letters()) {
            v = v * self.base + l as u64;
        }
        self.offsets[len] + v
    }

    fn id(&self, w: &Word) -> u64 {
        self.id3(w, &Word::empty(), &Word::empty())
    }

    fn word(&self, id: u64) -> Word {
        let len = self.offsets.partition_point(|&o| o <= id) - 1;
        let mut v = id - self.offsets[len];
        let mut letters = vec![0u8; len];
        for k in (0..len).rev() {
            letters[k] = (v % self.base) as u8;
            v /= self.base;
        }
        Word::from_letters(&letters)
    }

    fn insert(&mut self, mut work: BTreeMap<u64, Qi>, left: Word, rel: u32, right: Word) {
        let mut steps = Vec::new();
        while let Some((&lead, c)) = work.last_key_value() {
            let Some(&r) = self.pivots.get(&lead) else {
                let inv_lc = c.inv().expect("nonzero");
                let terms: Vec<(u64, Qi)> = work.into_iter().rev().map(|(k, x)| (k, &x * &inv_lc)).collect();
                self.pivots.insert(lead, self.rows.len() as u32);
                self.rows.push(Row { terms, left, rel, right, inv_lc, steps });
                return;
            };
            let c = c.clone();
            subtract_row(&mut work, &self.rows[r as usize].terms, &c);
            steps.push((r, c));
        }
    }

    /// Full reduction: `p = Σ c·rows + remainder` with no remainder word a pivot.
    fn reduce_ids(&self, mut work: BTreeMap<u64, Qi>) -> (Vec<(u64, Qi)>, Vec<(u32, Qi)>) {
        let mut rem = Vec::new();
        let mut steps = Vec::new();
        while let Some((id, c)) = work.pop_last() {
            match self.pivots.get(&id) {
                Some(&r) => {
                    let tail = &self.rows[r as usize].terms[1..];
                    subtract_row(&mut work, tail, &c);
                    steps.push((r, c));
                }
                None => rem.push((id, c)),
            }
        }
        (rem, steps)
    }

    /// Rewrites row combinations as combinations of the spanning generators.
    fn certificate(&self, steps: Vec<(u32, Qi)>) -> MembershipCertificate {
        let mut coef: BTreeMap<u32, Qi> = BTreeMap::new();
        for (r, c) in steps {
            *coef.entry(r).or_insert_with(Qi::zero) += &c;
        }
        let mut terms = Vec::new();
        while let Some((r, a)) = coef.pop_last() {
            if a.is_zero() {
                continue;
            }
            let row = &self.rows[r as usize];
            let g = &a * &row.inv_lc;
            for (k, c) in &row.steps {
                let e = coef.entry(*k).or_insert_with(Qi::zero);
                *e -= &(&g * c);
            }
            terms.push(CertTerm { coef: g, left: row.left.clone(), rel: row.rel as usize, right: row.right.clone() });
        }
        terms.reverse();
        MembershipCertificate { terms }
    }

    fn check_degree(&self, p: &NcPoly) -> Result<()> {
        match p.degree() {
            Some(d) if d > self.bound => Err(Error::DegreeExceedsBound { degree: d, bound: self.bound }),
            _ => Ok(()),
        }
    }

    /// Normal form modulo the bounded span together with a certificate of `p − NF(p)`.
    pub fn reduce(&self, p: &NcPoly) -> Result<(NcPoly, MembershipCertificate)> {
        self.check_degree(p)?;
        let work: BTreeMap<u64, Qi> = p.terms().iter().map(|(w, c)| (self.id(w), c.clone())).collect();
        let (rem, steps) = self.reduce_ids(work);
        let nf = NcPoly::from_terms(p.alphabet(), rem.into_iter().map(|(id, c)| (self.word(id), c)))?;
        Ok((nf, self.certificate(steps)))
    }

    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        self.check_degree(p)?;
        let work: BTreeMap<u64, Qi> = p.terms().iter().map(|(w, c)| (self.id(w), c.clone())).collect();
        let (rem, _) = self.reduce_ids(work);
        NcPoly::from_terms(p.alphabet(), rem.into_iter().map(|(id, c)| (self.word(id), c)))
    }
}

fn subtract_row(work: &mut BTreeMap<u64, Qi>, terms: &[(u64, Qi)], c: &Qi) {
    for (k, x) in terms {
        let d = c * x;
        match work.entry(*k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(-d);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() -= &d;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// All words of length `len` in increasing order.
pub(crate) fn all_words(base: u8, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| (0..base).map(move |l| w.concat(&Word::from_letters(&[l]))))
            .collect();
    }
    out
}

/// Caches span engines per degree bound for one presentation.
pub struct IdealOracle {
    presentation: Arc<Presentation>,
    engines: Mutex<BTreeMap<usize, Arc<SpanEngine>>>,
    base: Option<Arc<IdealOracle>>,
}

impl IdealOracle {
    pub fn new(p: Presentation) -> Arc<Self> {
        let base = match p.kind() {
            PresentationKind::TensorSquare(b) => Some(IdealOracle::new((**b).clone())),
            _ => None,
        };
        Arc::new(IdealOracle { presentation: Arc::new(p), engines: Mutex::new(BTreeMap::new()), base })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// For tensor squares, the oracle of the factor.
    pub fn factor(&self) -> Option<&Arc<IdealOracle>> {
        self.base.as_ref()
    }

    pub fn engine(&self, bound: usize) -> Result<Arc<SpanEngine>> {
        if let Some(e) = self.engines.lock().unwrap().get(&bound) {
            return Ok(e.clone());
        }
        // built outside the lock so independent bounds can proceed; a duplicate build is harmless
        let e = Arc::new(SpanEngine::build(&self.presentation, bound)?);
        Ok(self.engines.lock().unwrap().entry(bound).or_insert(e).clone())
    }

    /// Bounded two-sided ideal membership.
    pub fn member(&self, p: &NcPoly, bound: usize) -> Result<Membership> {
        if p.alphabet() != self.presentation.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        let deg = p.degree().unwrap_or(0);
        if deg > bound {
            return Err(Error::DegreeExceedsBound { degree: deg, bound });
        }
        if p.is_zero() {
            return Ok(Membership::Member(MembershipCertificate::default()));
        }
        if let Some(w) = character_witness(p, &self.presentation) {
            return Ok(w);
        }
        if let Some(base) = &self.base {
            return tensor::member(self, base, p, bound);
        }
        let (nf, cert) = self.engine(bound)?.reduce(p)?;
        Ok(if nf.is_zero() { Membership::Member(cert) } else { Membership::Undecided })
    }
}

/// One-off membership query; suites should share an [`IdealOracle`].
pub fn ideal_member(p: &NcPoly, pres: &Presentation, bound: usize) -> Result<Membership> {
    IdealOracle::new(pres.clone()).member(p, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QiMatrix;
    use crate::ncalg::presentation::presentation_h;

    fn h2() -> Presentation {
        presentation_h(&QiMatrix::identity(2)).unwrap()
    }

    #[test]
    fn relation_is_member() {
        let h = h2();
        let r = h.relations()[3].clone();
        let m = ideal_member(&r, &h, 2).unwrap();
        let cert = m.certificate().unwrap();
        assert_eq!(cert.replay(&h).unwrap(), r);
        let m = ideal_member(&h.relations()[0], &h, 2).unwrap();
        assert_eq!(
            m.certificate().unwrap().terms,
            vec![CertTerm { coef: Qi::one(), left: Word::empty(), rel: 0, right: Word::empty() }]
        );
    }

    #[test]
    fn left_multiple_is_member() {
        let h = h2();
        // Σ_k u2k v2k − 1 is relation (uvᵗ − I)₂₂
        let p = &h.var("u11") * &h.relations()[3];
        let m = ideal_member(&p, &h, 3).unwrap();
        assert_eq!(m.certificate().unwrap().replay(&h).unwrap(), p);
    }

    #[test]
    fn counit_witness() {
        let h = h2();
        let p = &(&h.var("u11") * &h.var("v11")) + &(&h.var("u12") * &h.var("v12"));
        match ideal_member(&p, &h, 2).unwrap() {
            Membership::NotMemberByCharacter { character, value } => {
                assert_eq!(character, "counit");
                assert_eq!(value, Qi::one());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn undecided_and_bound() {
        let h = h2();
        let p = &h.var("u11") - &h.var("v11");
        assert_eq!(ideal_member(&p, &h, 3).unwrap(), Membership::Undecided);
        let q = &(&h.var("u11") * &h.var("u11")) * &h.var("u11");
        assert_eq!(ideal_member(&q, &h, 2), Err(Error::DegreeExceedsBound { degree: 3, bound: 2 }));
    }

    #[test]
    fn word_ids_round_trip() {
        let h = h2();
        let e = SpanEngine::build(&h, 3).unwrap();
        for w in [Word::empty(), Word::from_letters(&[7]), Word::from_letters(&[0, 7, 3])] {
            assert_eq!(e.word(e.id(&w)), w);
        }
        assert!(e.id(&Word::from_letters(&[7])) < e.id(&Word::from_letters(&[0, 0])));
    }
}
