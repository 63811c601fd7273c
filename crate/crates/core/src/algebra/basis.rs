//! The basis `M₁..M₈` of the centralizer of `L` and its orthogonal
//! complement `P₁..P₈`, built from the 2×2 blocks `I, R, T, J`.

use crate::linalg::{Mat2, Mat4};
use crate::scalar::Scalar;

pub fn block_i<T: Scalar>() -> Mat2<T> {
    Mat2::from_ints([[1, 0], [0, 1]])
}

pub fn block_r<T: Scalar>() -> Mat2<T> {
    Mat2::from_ints([[1, 0], [0, -1]])
}

pub fn block_t<T: Scalar>() -> Mat2<T> {
    Mat2::from_ints([[0, 1], [1, 0]])
}

pub fn block_j<T: Scalar>() -> Mat2<T> {
    Mat2::from_ints([[0, 1], [-1, 0]])
}

fn diag<T: Scalar>(a: Mat2<T>, d: Mat2<T>) -> Mat4<T> {
    Mat4::from_blocks(a, Mat2::zero(), Mat2::zero(), d)
}

fn anti<T: Scalar>(b: Mat2<T>, c: Mat2<T>) -> Mat4<T> {
    Mat4::from_blocks(Mat2::zero(), b, c, Mat2::zero())
}

/// `Mᵢ`, `i ∈ 1..=8`.
///
/// # Panics
/// If `i` is outside `1..=8`.
pub fn basis_m<T: Scalar>(i: usize) -> Mat4<T> {
    let (id, r, t, j) = (block_i(), block_r(), block_t(), block_j());
    match i {
        1 => diag(id, id),
        2 => diag(r, r),
        3 => diag(t, t),
        4 => anti(j, -j),
        5 => anti(id, -id),
        6 => anti(r, -r),
        7 => anti(t, -t),
        8 => diag(j, j),
        _ => panic!("basis index {i} outside 1..=8"),
    }
}

/// `Pᵢ`, `i ∈ 1..=8`.
///
/// # Panics
/// If `i` is outside `1..=8`.
pub fn basis_p<T: Scalar>(i: usize) -> Mat4<T> {
    let (id, r, t, j) = (block_i(), block_r(), block_t(), block_j());
    match i {
        1 => diag(id, -id),
        2 => diag(r, -r),
        3 => diag(t, -t),
        4 => anti(j, j),
        5 => anti(id, id),
        6 => anti(r, r),
        7 => anti(t, t),
        8 => diag(j, -j),
        _ => panic!("basis index {i} outside 1..=8"),
    }
}

/// The resonant matrix `L = (0 I; −I 0)`.
pub fn resonant_l<T: Scalar>() -> Mat4<T> {
    anti(block_i(), -block_i())
}

/// All basis data in one value.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisSet<T> {
    pub m: [Mat4<T>; 8],
    pub p: [Mat4<T>; 8],
    pub l: Mat4<T>,
    pub i2: Mat2<T>,
    pub r: Mat2<T>,
    pub t: Mat2<T>,
    pub j: Mat2<T>,
}

impl<T: Scalar> BasisSet<T> {
    /// `Mᵢ` with the 1-based index used throughout.
    pub fn m(&self, i: usize) -> &Mat4<T> {
        &self.m[i - 1]
    }

    /// `Pᵢ` with the 1-based index used throughout.
    pub fn p(&self, i: usize) -> &Mat4<T> {
        &self.p[i - 1]
    }

    /// `M₁..M₈, P₁..P₈` in that order.
    pub fn all16(&self) -> impl Iterator<Item = &Mat4<T>> {
        self.m.iter().chain(self.p.iter())
    }

    /// The 16×16 Gram matrix of [`Self::all16`] under the Frobenius inner product.
    pub fn gram(&self) -> [[T; 16]; 16] {
        let all: Vec<&Mat4<T>> = self.all16().collect();
        std::array::from_fn(|i| std::array::from_fn(|j| all[i].frobenius_inner(all[j])))
    }
}

pub fn basis<T: Scalar>() -> BasisSet<T> {
    BasisSet {
        m: std::array::from_fn(|k| basis_m(k + 1)),
        p: std::array::from_fn(|k| basis_p(k + 1)),
        l: resonant_l(),
        i2: block_i(),
        r: block_r(),
        t: block_t(),
        j: block_j(),
    }
}

/// Coefficients of `A` along `M₁..M₈`. The basis is orthogonal with
/// `⟨Mᵢ, Mᵢ⟩ = 4`, so this is exact for integer `A` whenever `A` lies in the
/// integer span of `2Mᵢ`, and exact over rationals always.
pub fn m_coefficients<T: Scalar>(a: &Mat4<T>) -> [T; 8] {
    let four = T::int(4);
    std::array::from_fn(|k| basis_m::<T>(k + 1).frobenius_inner(a) / four)
}

/// Coefficients of `A` along `P₁..P₈`.
pub fn p_coefficients<T: Scalar>(a: &Mat4<T>) -> [T; 8] {
    let four = T::int(4);
    std::array::from_fn(|k| basis_p::<T>(k + 1).frobenius_inner(a) / four)
}
