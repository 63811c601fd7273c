//! Parameter vectors and the unfoldings of `L`.

use serde::{Deserialize, Serialize};

use super::basis::{basis_m, resonant_l};
use crate::linalg::Mat4;
use crate::scalar::{Real, Scalar};

/// `μ ∈ ℝ⁸`, coefficients along `M₁..M₈`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CentralizerCoords<T> {
    pub mu: [T; 8],
}

/// `ν ∈ ℝ⁵`, coefficients along `M₁, M₄, M₆, M₈, M₅` in that order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedCoords<T> {
    pub nu: [T; 5],
}

/// Basis index carried by each reduced coordinate.
pub const REDUCED_BASIS_INDEX: [usize; 5] = [1, 4, 6, 8, 5];

impl<T: Scalar> CentralizerCoords<T> {
    pub const fn new(mu: [T; 8]) -> Self {
        Self { mu }
    }

    /// `μ` with a single nonzero coefficient `c` at the 1-based index `i`.
    pub fn unit(i: usize, c: T) -> Self {
        let mut mu = [T::zero(); 8];
        mu[i - 1] = c;
        Self { mu }
    }

    /// `μᵢ` with the 1-based index.
    pub fn get(&self, i: usize) -> T {
        self.mu[i - 1]
    }

    /// `x = (μ₂, μ₃, μ₄)`.
    pub fn x(&self) -> [T; 3] {
        [self.mu[1], self.mu[2], self.mu[3]]
    }

    /// `y = (μ₆, μ₇, μ₈)`.
    pub fn y(&self) -> [T; 3] {
        [self.mu[5], self.mu[6], self.mu[7]]
    }

    /// Assembles `μ` from `μ₁`, `x`, `μ₅`, `y`.
    pub fn from_parts(mu1: T, x: [T; 3], mu5: T, y: [T; 3]) -> Self {
        Self::new([mu1, x[0], x[1], x[2], mu5, y[0], y[1], y[2]])
    }
}

impl<T: Real> CentralizerCoords<T> {
    pub fn is_finite(&self) -> bool {
        self.mu.iter().all(|v| v.is_finite())
    }
}

impl<T: Scalar> ReducedCoords<T> {
    pub const fn new(nu: [T; 5]) -> Self {
        Self { nu }
    }

    /// `(ν₁, ν₂, ν₃, ν₄)` with `ν₅` appended.
    pub fn from_sphere(nu4: [T; 4], nu5: T) -> Self {
        Self::new([nu4[0], nu4[1], nu4[2], nu4[3], nu5])
    }

    /// `νᵢ` with the 1-based index.
    pub fn get(&self, i: usize) -> T {
        self.nu[i - 1]
    }

    /// The sphere part `(ν₁, ν₂, ν₃, ν₄)`.
    pub fn nu4(&self) -> [T; 4] {
        [self.nu[0], self.nu[1], self.nu[2], self.nu[3]]
    }

    /// The centralizer coordinates of the same matrix.
    pub fn embed(&self) -> CentralizerCoords<T> {
        let mut mu = [T::zero(); 8];
        for (k, &i) in REDUCED_BASIS_INDEX.iter().enumerate() {
            mu[i - 1] = self.nu[k];
        }
        CentralizerCoords::new(mu)
    }

    pub fn scale(&self, t: T) -> Self {
        Self::new(self.nu.map(|v| v * t))
    }
}

impl<T: Real> ReducedCoords<T> {
    pub fn is_finite(&self) -> bool {
        self.nu.iter().all(|v| v.is_finite())
    }
}

/// `ℋ(μ) = Σ μᵢ Mᵢ`.
pub fn homogeneous_unfolding<T: Scalar>(mu: &CentralizerCoords<T>) -> Mat4<T> {
    mu.mu.iter().enumerate().fold(Mat4::zero(), |acc, (k, &c)| {
        acc + basis_m::<T>(k + 1).scale(c)
    })
}

/// `ℒ(μ) = L + Σ μᵢ Mᵢ`.
pub fn centralizer_unfolding<T: Scalar>(mu: &CentralizerCoords<T>) -> Mat4<T> {
    resonant_l() + homogeneous_unfolding(mu)
}

/// `ℋᵣ(ν) = ν₁M₁ + ν₂M₄ + ν₃M₆ + ν₄M₈ + ν₅M₅`.
pub fn homogeneous_reduced<T: Scalar>(nu: &ReducedCoords<T>) -> Mat4<T> {
    REDUCED_BASIS_INDEX
        .iter()
        .zip(nu.nu.iter())
        .fold(Mat4::zero(), |acc, (&i, &c)| acc + basis_m::<T>(i).scale(c))
}

/// `ℒᵣ(ν) = L + ℋᵣ(ν)`.
pub fn reduced_unfolding<T: Scalar>(nu: &ReducedCoords<T>) -> Mat4<T> {
    resonant_l() + homogeneous_reduced(nu)
}
