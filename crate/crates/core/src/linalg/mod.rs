//! Dense exact linear algebra over ℚ(i).

mod elim;
mod matrix;
mod similarity;

pub use elim::{char_poly, det, eigenspace_dim, inverse, is_invertible, kernel_basis, min_poly, nullity, rank, rref};
pub use matrix::{dot, flatten_row, unflatten_row, QiMatrix, VecQi};
pub use similarity::{invariant_factors, is_similar};
