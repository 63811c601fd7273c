//! Dense linear algebra for the 4×4 setting.

mod expm;
mod mat;
mod poly;
mod quartic;
mod rank;

pub use expm::exp_generator;
pub use mat::{commutator, frobenius_inner, Mat2, Mat4};
pub use poly::{char_poly, PolyCoeffs};
pub use quartic::{quartic_roots, RootSet};
pub use rank::{numeric_rank, numeric_rank_abs, singular_values};
