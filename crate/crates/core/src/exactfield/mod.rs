//! Exact scalars: ℚ, ℚ(i) and univariate polynomials over ℚ(i).

mod gaussian;
mod rational;
mod unipoly;

pub use gaussian::Qi;
pub use rational::Rational;
pub use unipoly::{is_squarefree, poly_gcd, UniPoly};

/// Alias used in signatures that talk about field elements generically.
pub type GaussianRational = Qi;
