//! H-colinearity of the resolution maps of H(F) for the Yetter–Drinfeld
//! structures on the free modules.
//!
//! A free Yetter–Drinfeld module `C ⊠ H` has coaction
//! `γ(c·h) = c₍₀₎h₍₂₎ ⊗ S(h₍₁₎)c₍₁₎h₍₃₎`. For a component `Ψ: C_ℓ ⊠ H → C_k ⊠ H`
//! with `Ψ(b) = Σ_e e·h_eb`, colinearity on the generators `b` reads
//! `Σ_e γ_k(e) ◁ h_eb = Σ_b' Ψ(b') ⊗ c_ℓ(b, b')`, compared coefficientwise in
//! `C_k` as elements of `H ⊗ H`.

use super::algmatrix::{entry_label, AlgMatrix};
use super::hopf::hopf_maps;
use super::membership::IdealOracle;
use super::presentation::{presentation_h, Presentation};
use super::resolution::resolution_matrices;
use super::tensor::tensor;
use super::verify::{run_queries, Query, VerificationReport};
use super::word::{NcPoly, Word};
use crate::error::Result;
use crate::exactfield::Qi;
use crate::linalg::QiMatrix;

/// `SwappedUV` exchanges the coactions on `P₂`; a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YdVariant {
    Standard,
    SwappedUV,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    Trivial,
    U,
    V,
    UTilde,
    VTilde,
}

impl Block {
    fn size(self, n: usize) -> usize {
        if self == Block::Trivial {
            1
        } else {
            n * n
        }
    }
}

struct Ctx<'a> {
    p: &'a Presentation,
    n: usize,
    antipode: Vec<NcPoly>,
    sq: std::sync::Arc<super::word::Alphabet>,
}

impl Ctx<'_> {
    fn gen(&self, b: &str, i: usize, j: usize) -> NcPoly {
        self.p.var(&entry_label(b, self.n, i, j))
    }

    fn s(&self, b: &str, i: usize, j: usize) -> NcPoly {
        self.antipode[self.p.alphabet().letter(&entry_label(b, self.n, i, j)).unwrap() as usize].clone()
    }

    /// `c(b, b')` with `γ(b) = Σ b' ⊗ c(b, b')`.
    fn coaction(&self, block: Block, b: usize, b2: usize) -> NcPoly {
        let n = self.n;
        let (i, j, k, l) = (b / n, b % n, b2 / n, b2 % n);
        match block {
            Block::Trivial => NcPoly::one(self.p.alphabet()),
            Block::U => &self.s("u", i, k) * &self.gen("u", l, j),
            Block::V => &self.s("v", i, k) * &self.gen("v", l, j),
            Block::UTilde => &self.s("u", j, l) * &self.gen("u", k, i),
            Block::VTilde => &self.s("v", j, l) * &self.gen("v", k, i),
        }
    }

    /// `(L ⊗ R) ◁ h` on a normal-ordered element of the tensor square.
    fn act(&self, x: &NcPoly, h: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero(&self.sq);
        for (w, c) in h.terms() {
            let mut cur = x.scale(c);
            for &a in w.letters() {
                cur = self.act_letter(&cur, a);
            }
            out = &out + &cur;
        }
        out
    }

    fn act_letter(&self, x: &NcPoly, a: u8) -> NcPoly {
        // alphabet of H(F): u-block then v-block
        let nn = self.n * self.n;
        let b = if (a as usize) < nn { "u" } else { "v" };
        let (i, j) = ((a as usize % nn) / self.n, a as usize % self.n);
        let m = self.p.alphabet().len();
        let mut out = NcPoly::zero(&self.sq);
        for (w, c) in x.terms() {
            let split = w.letters().iter().position(|&l| l as usize >= m).unwrap_or(w.len());
            let wl = NcPoly::monomial(self.p.alphabet(), Word::from_letters(&w.letters()[..split]), c.clone());
            let wr = NcPoly::monomial(
                self.p.alphabet(),
                Word::from_letters(&w.letters()[split..]).map_letters(|l| l - m as u8),
                Qi::one(),
            );
            // Δ²(a_ij) = Σ a_is ⊗ a_st ⊗ a_tj
            for s in 0..self.n {
                for t in 0..self.n {
                    let left = &wl * &self.gen(b, s, t);
                    let right = &(&self.s(b, i, s) * &wr) * &self.gen(b, t, j);
                    out = &out + &tensor(&self.sq, &left, &right);
                }
            }
        }
        out
    }
}

fn layout(variant: YdVariant) -> [Vec<Block>; 4] {
    use Block::*;
    let p2 = match variant {
        YdVariant::Standard => vec![V, U],
        YdVariant::SwappedUV => vec![U, V],
    };
    [vec![Trivial, Trivial], vec![VTilde, UTilde, Trivial], p2, vec![Trivial, Trivial]]
}

/// Colinearity defects of every component of Ψ₁, Ψ₂, Ψ₃, checked in the ideal of H(F) ⊗ H(F).
pub fn run_yd_colinearity(f: &QiMatrix, bound: usize, variant: YdVariant) -> Result<VerificationReport> {
    let n = f.rows();
    let p = presentation_h(f)?;
    let maps = hopf_maps(&p)?;
    let res = resolution_matrices(&p)?;
    let ctx = Ctx { p: &p, n, antipode: maps.antipode.clone(), sq: maps.square.alphabet().clone() };
    let spaces = layout(variant);

    let mut queries = Vec::new();
    for (level, psi) in res.maps.iter().enumerate() {
        let (target, source) = (&spaces[level], &spaces[level + 1]);
        let offsets = |blocks: &[Block]| -> Vec<usize> {
            blocks.iter().scan(0, |acc, b| {
                let o = *acc;
                *acc += b.size(n);
                Some(o)
            })
            .collect()
        };
        let (to, so) = (offsets(target), offsets(source));
        for (k, &tb) in target.iter().enumerate() {
            for (l, &sb) in source.iter().enumerate() {
                for b in 0..sb.size(n) {
                    for e2 in 0..tb.size(n) {
                        let defect = component_defect(&ctx, psi, (tb, to[k]), (sb, so[l]), b, e2);
                        queries.push(Query::new(
                            format!("Psi{}[{},{}] b={b} e={e2}", level + 1, k + 1, l + 1),
                            defect,
                        ));
                    }
                }
            }
        }
    }
    let oracle = IdealOracle::new(maps.square.clone());
    let items = run_queries(&oracle, queries, bound)?;
    Ok(VerificationReport { suite: "yd".into(), bound, items })
}

fn component_defect(
    ctx: &Ctx,
    psi: &AlgMatrix,
    (tb, toff): (Block, usize),
    (sb, soff): (Block, usize),
    b: usize,
    e2: usize,
) -> NcPoly {
    let n = ctx.n;
    let mut lhs = NcPoly::zero(&ctx.sq);
    for e in 0..tb.size(n) {
        let h = psi.get(toff + e, soff + b);
        if h.is_zero() {
            continue;
        }
        let start = tensor(&ctx.sq, &NcPoly::one(ctx.p.alphabet()), &ctx.coaction(tb, e, e2));
        lhs = &lhs + &ctx.act(&start, h);
    }
    let mut rhs = NcPoly::zero(&ctx.sq);
    for b2 in 0..sb.size(n) {
        let h = psi.get(toff + e2, soff + b2);
        if !h.is_zero() {
            rhs = &rhs + &tensor(&ctx.sq, h, &ctx.coaction(sb, b, b2));
        }
    }
    &lhs - &rhs
}

pub fn verify_yd_colinearity(f: &QiMatrix, bound: usize) -> Result<VerificationReport> {
    run_yd_colinearity(f, bound, YdVariant::Standard)?.into_result()
}
