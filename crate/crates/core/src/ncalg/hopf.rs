use super::algmatrix::{entry_label, AlgMatrix};
use super::membership::IdealOracle;
use super::presentation::{tensor_square, Presentation, PresentationKind};
use super::verify::{run_queries, Query, VerificationReport};
use super::word::NcPoly;
use crate::error::{Error, Result};
use crate::exactfield::Qi;
use crate::linalg::inverse;

/// Comultiplication, counit and antipode, given on the letters.
#[derive(Debug, Clone)]
pub struct HopfMaps {
    /// Images in the tensor square.
    pub delta: Vec<NcPoly>,
    pub counit: Vec<Qi>,
    pub antipode: Vec<NcPoly>,
    pub square: Presentation,
}

impl HopfMaps {
    pub fn delta(&self, p: &NcPoly) -> NcPoly {
        p.substitute(self.square.alphabet(), &self.delta, false)
    }

    pub fn counit(&self, p: &NcPoly) -> Qi {
        p.eval(&self.counit)
    }

    pub fn antipode(&self, p: &NcPoly) -> NcPoly {
        p.substitute(p.alphabet(), &self.antipode, true)
    }
}

/// Names of the matrix generators of a built-in presentation.
pub(crate) fn matrix_blocks(p: &Presentation) -> Result<&'static [&'static str]> {
    match p.kind() {
        PresentationKind::B(_) | PresentationKind::A(_) => Ok(&["x"]),
        PresentationKind::H(_) => Ok(&["u", "v"]),
        _ => Err(Error::UnsupportedPresentation),
    }
}

/// `Δ(a_ij) = Σ_k a_ik ⊗ a_kj`, `ε(a_ij) = δ_ij`, `Δ(g) = g ⊗ g`, `ε(g) = 1`, and
/// `S(x) = E⁻¹xᵗE`, `S(u) = vᵗ`, `S(v) = FuᵗF⁻¹`, `S(g) = g`.
pub fn hopf_maps(p: &Presentation) -> Result<HopfMaps> {
    let blocks = matrix_blocks(p)?;
    let n = p.matrix_size().ok_or(Error::UnsupportedPresentation)?;
    let alpha = p.alphabet().clone();
    let square = tensor_square(p)?;
    let sq = square.alphabet().clone();
    let m = alpha.len() as u8;
    let letter = |name: &str| alpha.letter(name).expect("built-in label");

    let mut delta = vec![NcPoly::zero(&sq); alpha.len()];
    let mut counit = vec![Qi::zero(); alpha.len()];
    let mut antipode = vec![NcPoly::zero(&alpha); alpha.len()];
    for b in blocks {
        for i in 0..n {
            for j in 0..n {
                let l = letter(&entry_label(b, n, i, j)) as usize;
                for k in 0..n {
                    let (a, c) = (letter(&entry_label(b, n, i, k)), letter(&entry_label(b, n, k, j)));
                    delta[l] = &delta[l] + &(&NcPoly::letter(&sq, a) * &NcPoly::letter(&sq, c + m));
                }
                if i == j {
                    counit[l] = Qi::one();
                }
            }
        }
    }
    let set_matrix = |antipode: &mut Vec<NcPoly>, b: &str, s: &AlgMatrix| {
        for i in 0..n {
            for j in 0..n {
                antipode[letter(&entry_label(b, n, i, j)) as usize] = s.get(i, j).clone();
            }
        }
    };
    match p.kind() {
        PresentationKind::B(e) | PresentationKind::A(e) => {
            let x = AlgMatrix::generators(&alpha, "x", n);
            let s = x.transpose().left_scalar(&inverse(e)?).right_scalar(e);
            set_matrix(&mut antipode, "x", &s);
            if let Some(g) = alpha.letter("g") {
                delta[g as usize] = &NcPoly::letter(&sq, g) * &NcPoly::letter(&sq, g + m);
                counit[g as usize] = Qi::one();
                antipode[g as usize] = NcPoly::letter(&alpha, g);
            }
        }
        PresentationKind::H(f) => {
            let u = AlgMatrix::generators(&alpha, "u", n);
            let v = AlgMatrix::generators(&alpha, "v", n);
            set_matrix(&mut antipode, "u", &v.transpose());
            set_matrix(&mut antipode, "v", &u.transpose().left_scalar(f).right_scalar(&inverse(f)?));
        }
        _ => return Err(Error::UnsupportedPresentation),
    }
    Ok(HopfMaps { delta, counit, antipode, square })
}

/// Hopf axioms with the presentation's own maps.
pub fn run_hopf(p: &Presentation, bound: usize) -> Result<VerificationReport> {
    run_hopf_with(p, &hopf_maps(p)?, bound)
}

/// Checks `ε(r) = 0`, `S(r) ∈ I`, `Δ(r) ∈ I⊗`, and `Σ S(a_ik)a_kj − δ_ij`,
/// `Σ a_ik S(a_kj) − δ_ij ∈ I` for every generator matrix (and `S(g)g − 1`).
pub fn run_hopf_with(p: &Presentation, maps: &HopfMaps, bound: usize) -> Result<VerificationReport> {
    let alpha = p.alphabet().clone();
    let oracle = IdealOracle::new(p.clone());
    let sq_oracle = IdealOracle::new(maps.square.clone());
    let mut queries = Vec::new();
    let mut sq_queries = Vec::new();
    for (k, r) in p.relations().iter().enumerate() {
        queries.push(Query::new(format!("counit(r{k})"), NcPoly::constant(&alpha, maps.counit(r))));
        queries.push(Query::new(format!("S(r{k})"), maps.antipode(r)));
        sq_queries.push(Query::new(format!("Delta(r{k})"), maps.delta(r)));
    }
    let n = p.matrix_size().ok_or(Error::UnsupportedPresentation)?;
    for b in matrix_blocks(p)? {
        let a = AlgMatrix::generators(&alpha, b, n);
        let s = AlgMatrix::from_fn(n, n, |i, j| maps.antipode(a.get(i, j)));
        let id = AlgMatrix::identity(&alpha, n);
        let (sa, as_) = (s.mul(&a).sub(&id), a.mul(&s).sub(&id));
        for i in 0..n {
            for j in 0..n {
                queries.push(Query::new(format!("S({b})*{b}[{i},{j}]"), sa.get(i, j).clone()));
                queries.push(Query::new(format!("{b}*S({b})[{i},{j}]"), as_.get(i, j).clone()));
            }
        }
    }
    if let Some(g) = alpha.letter("g") {
        let g = NcPoly::letter(&alpha, g);
        let one = NcPoly::one(&alpha);
        queries.push(Query::new("S(g)*g", &(&maps.antipode(&g) * &g) - &one));
        queries.push(Query::new("g*S(g)", &(&g * &maps.antipode(&g)) - &one));
    }
    let mut items = run_queries(&oracle, queries, bound)?;
    items.extend(run_queries(&sq_oracle, sq_queries, bound)?);
    Ok(VerificationReport { suite: "hopf".into(), bound, items })
}

/// Fails with `VerificationFailed` unless every check is a certified member.
pub fn verify_hopf(p: &Presentation, bound: usize) -> Result<VerificationReport> {
    run_hopf(p, bound)?.into_result()
}
