use std::sync::Arc;

use super::algmatrix::{entry_label, AlgMatrix};
use super::word::{Alphabet, NcPoly};
use crate::error::{Error, Result};
use crate::exactfield::Qi;
use crate::linalg::{inverse, QiMatrix};

/// Which built-in algebra a presentation describes, with its parameter matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationKind {
    B(QiMatrix),
    A(QiMatrix),
    H(QiMatrix),
    TensorSquare(Arc<Presentation>),
    Custom,
}

/// Scalar algebra map given by its value on every letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<Qi>,
}

/// Generators, relations, optional ℤ₂-grading, and characters known to kill every relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Arc<Alphabet>,
    relations: Vec<NcPoly>,
    grading: Option<Vec<u8>>,
    kind: PresentationKind,
    characters: Vec<Character>,
}

impl Presentation {
    pub fn custom(alphabet: Arc<Alphabet>, relations: Vec<NcPoly>, grading: Option<Vec<u8>>) -> Result<Self> {
        Self::build(alphabet, relations, grading, PresentationKind::Custom, vec![])
    }

    fn build(
        alphabet: Arc<Alphabet>,
        relations: Vec<NcPoly>,
        grading: Option<Vec<u8>>,
        kind: PresentationKind,
        characters: Vec<Character>,
    ) -> Result<Self> {
        for r in &relations {
            if r.is_zero() {
                return Err(Error::InvalidMatrix("zero relation".into()));
            }
            if r.alphabet() != &alphabet {
                return Err(Error::AlphabetMismatch);
            }
        }
        if grading.as_ref().is_some_and(|g| g.len() != alphabet.len()) {
            return Err(Error::DimensionMismatch("grading length".into()));
        }
        let mut p = Presentation { alphabet, relations, grading, kind, characters: vec![] };
        for c in characters {
            p.add_character(c);
        }
        Ok(p)
    }

    /// Stores `c` if it kills every relation; returns whether it was kept.
    pub fn add_character(&mut self, c: Character) -> bool {
        let ok = c.values.len() == self.alphabet.len() && self.relations.iter().all(|r| r.eval(&c.values).is_zero());
        if ok {
            self.characters.push(c);
        }
        ok
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    pub fn kind(&self) -> &PresentationKind {
        &self.kind
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn counit(&self) -> Option<&Character> {
        self.characters.iter().find(|c| c.name == "counit")
    }

    /// Same algebra type with a different relation list; characters that no
    /// longer kill every relation are dropped.
    pub fn with_relations(&self, relations: Vec<NcPoly>) -> Result<Self> {
        Self::build(self.alphabet.clone(), relations, self.grading.clone(), self.kind.clone(), self.characters.clone())
    }

    pub fn without_relations(&self, drop: impl Fn(usize) -> bool) -> Result<Self> {
        let rels = self.relations.iter().enumerate().filter(|(i, _)| !drop(*i)).map(|(_, r)| r.clone()).collect();
        self.with_relations(rels)
    }

    pub fn var(&self, name: &str) -> NcPoly {
        NcPoly::var(&self.alphabet, name)
    }

    /// Matrix size of the built-in presentations.
    pub fn matrix_size(&self) -> Option<usize> {
        match &self.kind {
            PresentationKind::B(m) | PresentationKind::A(m) | PresentationKind::H(m) => Some(m.rows()),
            PresentationKind::TensorSquare(base) => base.matrix_size(),
            PresentationKind::Custom => None,
        }
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).flat_map(|i| (0..n).map(move |j| entry_label(prefix, n, i, j))).collect()
}

fn entries_minus_identity(m: &AlgMatrix) -> Vec<NcPoly> {
    let alpha = m.get(0, 0).alphabet().clone();
    m.sub(&AlgMatrix::identity(&alpha, m.rows())).entries().to_vec()
}

/// Values of the character sending the generator matrix to `c·I` on every matrix letter.
fn scalar_character(name: &str, n: usize, blocks: usize, c: i64, tail: &[i64]) -> Character {
    let mut values = Vec::new();
    for _ in 0..blocks {
        for i in 0..n {
            for j in 0..n {
                values.push(if i == j { Qi::from_int(c) } else { Qi::zero() });
            }
        }
    }
    values.extend(tail.iter().map(|&t| Qi::from_int(t)));
    Character { name: name.into(), values }
}

fn b_relations(alpha: &Arc<Alphabet>, e: &QiMatrix) -> Result<Vec<NcPoly>> {
    let n = e.rows();
    let einv = inverse(e)?;
    let x = AlgMatrix::generators(alpha, "x", n);
    let xt = x.transpose();
    // E⁻¹xᵗEx − I and xE⁻¹xᵗE − I
    let r1 = xt.left_scalar(&einv).right_scalar(e).mul(&x);
    let r2 = x.right_scalar(&einv).mul(&xt.right_scalar(e));
    let mut rels = entries_minus_identity(&r1);
    rels.extend(entries_minus_identity(&r2));
    Ok(rels)
}

/// Generators `x_ij`, relations `E⁻¹xᵗEx = I = xE⁻¹xᵗE`, every generator odd.
pub fn presentation_b(e: &QiMatrix) -> Result<Presentation> {
    let n = e.rows();
    let alpha = Alphabet::new(labels("x", n))?;
    let rels = b_relations(&alpha, e)?;
    let chars = vec![scalar_character("counit", n, 1, 1, &[]), scalar_character("minus", n, 1, -1, &[])];
    Presentation::build(alpha, rels, Some(vec![1; n * n]), PresentationKind::B(e.clone()), chars)
}

/// `B(E) * ℂZ₂`: one more generator `g` with `g² = 1`, grading `deg x = deg g = 1`.
pub fn presentation_a(e: &QiMatrix) -> Result<Presentation> {
    let n = e.rows();
    let mut names = labels("x", n);
    names.push("g".into());
    let alpha = Alphabet::new(names)?;
    let mut rels = b_relations(&alpha, e)?;
    let g = NcPoly::var(&alpha, "g");
    rels.push(&(&g * &g) - &NcPoly::one(&alpha));
    let chars = vec![
        scalar_character("counit", n, 1, 1, &[1]),
        scalar_character("sign", n, 1, 1, &[-1]),
        scalar_character("minus", n, 1, -1, &[1]),
        scalar_character("minus_sign", n, 1, -1, &[-1]),
    ];
    Presentation::build(alpha, rels, Some(vec![1; n * n + 1]), PresentationKind::A(e.clone()), chars)
}

/// Generators `u_ij, v_ij`, relations `uvᵗ = vᵗu = I`, `vFuᵗF⁻¹ = FuᵗF⁻¹v = I`; ungraded.
pub fn presentation_h(f: &QiMatrix) -> Result<Presentation> {
    let n = f.rows();
    let finv = inverse(f)?;
    let mut names = labels("u", n);
    names.extend(labels("v", n));
    let alpha = Alphabet::new(names)?;
    let u = AlgMatrix::generators(&alpha, "u", n);
    let v = AlgMatrix::generators(&alpha, "v", n);
    let fut = u.transpose().left_scalar(f).right_scalar(&finv);
    let mut rels = entries_minus_identity(&u.mul(&v.transpose()));
    rels.extend(entries_minus_identity(&v.transpose().mul(&u)));
    rels.extend(entries_minus_identity(&v.mul(&fut)));
    rels.extend(entries_minus_identity(&fut.mul(&v)));
    let chars = vec![scalar_character("counit", n, 2, 1, &[]), scalar_character("minus", n, 2, -1, &[])];
    Presentation::build(alpha, rels, None, PresentationKind::H(f.clone()), chars)
}

/// Doubled alphabet `L_*`, `R_*`; relations: left copies, right copies, then
/// `R_b·L_a − L_a·R_b` for every pair `(a, b)` in row-major order.
pub fn tensor_square(p: &Presentation) -> Result<Presentation> {
    let m = p.alphabet.len();
    let names: Vec<String> = p
        .alphabet
        .names()
        .iter()
        .map(|s| format!("L_{s}"))
        .chain(p.alphabet.names().iter().map(|s| format!("R_{s}")))
        .collect();
    let alpha = Alphabet::new(names)?;
    let mut rels: Vec<NcPoly> = p.relations.iter().map(|r| r.relabel(&alpha, |l| l)).collect();
    rels.extend(p.relations.iter().map(|r| r.relabel(&alpha, |l| l + m as u8)));
    for a in 0..m as u8 {
        for b in 0..m as u8 {
            let (la, rb) = (NcPoly::letter(&alpha, a), NcPoly::letter(&alpha, b + m as u8));
            rels.push(&(&rb * &la) - &(&la * &rb));
        }
    }
    let grading = p.grading.as_ref().map(|g| g.iter().chain(g.iter()).copied().collect());
    let mut chars = Vec::new();
    for c1 in &p.characters {
        for c2 in &p.characters {
            let name = if c1.name == "counit" && c2.name == "counit" {
                "counit".to_string()
            } else {
                format!("{}*{}", c1.name, c2.name)
            };
            chars.push(Character { name, values: c1.values.iter().chain(&c2.values).cloned().collect() });
        }
    }
    Presentation::build(alpha, rels, grading, PresentationKind::TensorSquare(Arc::new(p.clone())), chars)
}

/// Every relation is homogeneous of even ℤ₂-degree.
pub fn verify_grading(p: &Presentation) -> Result<bool> {
    let g = p.grading.as_ref().ok_or(Error::NotGraded)?;
    Ok(p.relations.iter().all(|r| {
        r.terms().keys().all(|w| w.letters().iter().map(|&l| g[l as usize] as usize).sum::<usize>() % 2 == 0)
    }))
}
