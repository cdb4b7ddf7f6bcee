//! Exact computations around the Hopf algebras B(E), A(E) = B(E) * ℂZ₂ and H(F):
//! parameter classification, scalar dual complexes of the counit resolutions,
//! cohomology dimensions, and certified symbolic checks over the presented algebras.

pub mod classify;
pub mod complexes;
pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod ncalg;

pub use error::{Error, Result};
pub use exactfield::{Qi, Rational, UniPoly};
pub use linalg::QiMatrix;
