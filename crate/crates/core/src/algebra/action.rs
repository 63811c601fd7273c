//! The adjoint action of the rotation subgroup generated by `M₆, M₇, M₈`
//! and reduction of centralizer coordinates to the reduced unfolding.

use super::basis::m_coefficients;
use super::unfold::{homogeneous_unfolding, CentralizerCoords, ReducedCoords};
use crate::error::{Error, Result};
use crate::linalg::{exp_generator, Mat4};
use crate::scalar::Real;

/// `α'` with `Σ α'ᵢ Mᵢ = exp(−t Mₖ) (Σ αᵢ Mᵢ) exp(t Mₖ)`, for `k ∈ {6, 7, 8}`.
///
/// On `x = (α₂, α₃, α₄)` and `y = (α₆, α₇, α₈)` this is a pair of rotations
/// by `2t` about coordinate axis `k − 5`; `α₁` and `α₅` are fixed.
pub fn adjoint_action<T: Real>(
    k: usize,
    t: T,
    alpha: &CentralizerCoords<T>,
) -> Result<CentralizerCoords<T>> {
    if !(6..=8).contains(&k) {
        return Err(Error::Domain(format!("adjoint generator {k} not in 6..=8")));
    }
    let g = exp_generator(k, t)?;
    Ok(conjugate_coords(&g, alpha))
}

/// Coefficients of `g⁻¹ ℋ(α) g` for an orthogonal `g` (so `g⁻¹ = gᵀ`).
fn conjugate_coords<T: Real>(g: &Mat4<T>, alpha: &CentralizerCoords<T>) -> CentralizerCoords<T> {
    let a = homogeneous_unfolding(alpha);
    CentralizerCoords::new(m_coefficients(&(g.transpose() * a * *g)))
}

/// Canonical reduced coordinates of `ℋ(μ)` and the group element achieving
/// them.
///
/// Returns `(ν, g)` with `g⁻¹ ℋ(μ) g = ℋᵣ(ν)`, `ν₁ = μ₁`, `ν₅ = μ₅`,
/// `ν₂ = ‖x‖ ≥ 0`, `ν₃ ≥ 0` and `ν₃² + ν₄² = ‖y‖²`. Three rotations are
/// applied: about axis 1 and axis 2 to carry `x` onto the positive third
/// axis, then about axis 3 to carry `y` into the half-plane `y₂ = 0, y₁ ≥ 0`.
/// Components whose plane norm is at most `tol` are left alone; when `x`
/// and `y` are parallel any representative of the stabilizer orbit is
/// returned.
pub fn reduce_to_canonical<T: Real>(
    mu: &CentralizerCoords<T>,
    tol: T,
) -> Result<(ReducedCoords<T>, Mat4<T>)> {
    if !mu.is_finite() {
        return Err(Error::Domain("non-finite centralizer coordinates".into()));
    }
    let half = T::lit(0.5);
    let mut g = Mat4::identity();
    let mut cur = *mu;
    let mut rotate = |k: usize, t: T, cur: &mut CentralizerCoords<T>| -> Result<()> {
        if t == T::zero() {
            return Ok(());
        }
        let step = exp_generator(k, t)?;
        g = g * step;
        *cur = conjugate_coords(&step, cur);
        Ok(())
    };

    let x = cur.x();
    if x[1].hypot(x[2]) > tol {
        let theta = x[1].atan2(x[2]);
        rotate(6, -theta * half, &mut cur)?;
    }
    let x = cur.x();
    if x[0].hypot(x[2]) > tol {
        let theta = (-x[0]).atan2(x[2]);
        rotate(7, -theta * half, &mut cur)?;
    }
    let y = cur.y();
    if y[0].hypot(y[1]) > tol {
        let theta = (-y[1]).atan2(y[0]);
        rotate(8, theta * half, &mut cur)?;
    }

    let (x, y) = (cur.x(), cur.y());
    let nu = ReducedCoords::new([
        mu.get(1),
        x[2].max(T::zero()),
        y[0].max(T::zero()),
        y[2],
        mu.get(5),
    ]);
    Ok((nu, g))
}
