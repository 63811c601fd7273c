//! Closed-form one-parameter subgroups `exp(t Mᵢ)`.

use super::mat::Mat4;
use crate::algebra::basis_m;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `exp(t Mᵢ)` for `i ∈ 1..=8`.
///
/// `M₁` is the identity; `M₂..M₄` square to `+I` and `M₅..M₈` to `−I`, so the
/// exponential is `cosh t·I + sinh t·Mᵢ` or `cos t·I + sin t·Mᵢ` respectively.
pub fn exp_generator<T: Real>(i: usize, t: T) -> Result<Mat4<T>> {
    let id = Mat4::identity();
    match i {
        1 => Ok(id.scale(t.exp())),
        2..=4 => Ok(id.scale(t.cosh()) + basis_m::<T>(i).scale(t.sinh())),
        5..=8 => Ok(id.scale(t.cos()) + basis_m::<T>(i).scale(t.sin())),
        _ => Err(Error::Domain(format!("generator index {i} outside 1..=8"))),
    }
}
