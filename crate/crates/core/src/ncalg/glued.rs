use super::algmatrix::AlgMatrix;
use super::membership::IdealOracle;
use super::presentation::presentation_a;
use super::verify::{run_queries, Query, VerificationReport};
use super::word::NcPoly;
use crate::classify::f_of_e;
use crate::error::Result;
use crate::linalg::{inverse, QiMatrix};

/// Which `v̂` to test; `WithoutG` is a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GluedVariant {
    Standard,
    WithoutG,
}

/// Inside A(E), `û = xg` and `v̂ = gEᵗxE⁻ᵗ` satisfy the relations of H(EᵗE⁻¹).
pub fn run_glued_embedding(e: &QiMatrix, bound: usize, variant: GluedVariant) -> Result<VerificationReport> {
    let n = e.rows();
    let a = presentation_a(e)?;
    let f = f_of_e(e)?;
    let finv = inverse(&f)?;
    let alpha = a.alphabet().clone();
    let x = AlgMatrix::generators(&alpha, "x", n);
    let g = AlgMatrix::lift(&alpha, &QiMatrix::identity(n)).scale_entries(&a.var("g"));
    let id = AlgMatrix::identity(&alpha, n);

    let u = x.mul(&g);
    let core = x.left_scalar(&e.transpose()).right_scalar(&inverse(e)?.transpose());
    let v = match variant {
        GluedVariant::Standard => g.mul(&core),
        GluedVariant::WithoutG => core,
    };
    let fut = u.transpose().left_scalar(&f).right_scalar(&finv);
    let checks = [
        ("u*vt", u.mul(&v.transpose())),
        ("vt*u", v.transpose().mul(&u)),
        ("v*F*ut*Finv", v.mul(&fut)),
        ("F*ut*Finv*v", fut.mul(&v)),
    ];
    let mut queries = Vec::new();
    for (name, m) in checks {
        let d = m.sub(&id);
        for i in 0..n {
            for j in 0..n {
                queries.push(Query::new(format!("{name}[{i},{j}]"), d.get(i, j).clone()));
            }
        }
    }
    let items = run_queries(&IdealOracle::new(a), queries, bound)?;
    Ok(VerificationReport { suite: "glued".into(), bound, items })
}

pub fn verify_glued_embedding(e: &QiMatrix, bound: usize) -> Result<VerificationReport> {
    run_glued_embedding(e, bound, GluedVariant::Standard)?.into_result()
}

impl AlgMatrix {
    /// Multiplies every entry on the right by `p`.
    pub fn scale_entries(&self, p: &NcPoly) -> AlgMatrix {
        AlgMatrix::from_fn(self.rows(), self.cols(), |i, j| self.get(i, j) * p)
    }
}
