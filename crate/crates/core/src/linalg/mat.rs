//! Dense 2×2 and 4×4 matrices over a [`Scalar`].

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// A 2×2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2<T> {
    pub entries: [[T; 2]; 2],
}

/// A 4×4 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat4<T> {
    pub entries: [[T; 4]; 4],
}

impl<T: Scalar> Mat2<T> {
    pub const fn new(entries: [[T; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn from_ints(e: [[i64; 2]; 2]) -> Self {
        Self::new(e.map(|r| r.map(T::int)))
    }

    pub fn zero() -> Self {
        Self::new([[T::zero(); 2]; 2])
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]])
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i][j]
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.entries.map(|r| r.map(|x| x * s)))
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        Self::new([[e[0][0], e[1][0]], [e[0][1], e[1][1]]])
    }

    pub fn trace(&self) -> T {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn det(&self) -> T {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }
}

impl<T: Real> Mat2<T> {
    /// Builds a matrix, rejecting NaN and infinite entries.
    pub fn try_new(entries: [[T; 2]; 2]) -> Result<Self> {
        if entries.iter().flatten().all(|x| x.is_finite()) {
            Ok(Self::new(entries))
        } else {
            Err(Error::Domain("non-finite matrix entry".into()))
        }
    }
}

impl<T: Scalar> Add for Mat2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..2 {
            for j in 0..2 {
                r.entries[i][j] = self.entries[i][j] + o.entries[i][j];
            }
        }
        r
    }
}

impl<T: Scalar> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Scalar> Neg for Mat2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.entries.map(|r| r.map(|x| -x)))
    }
}

impl<T: Scalar> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut r = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                r.entries[i][j] =
                    self.entries[i][0] * o.entries[0][j] + self.entries[i][1] * o.entries[1][j];
            }
        }
        r
    }
}

impl<T: Scalar> Mat4<T> {
    pub const fn new(entries: [[T; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn from_ints(e: [[i64; 4]; 4]) -> Self {
        Self::new(e.map(|r| r.map(T::int)))
    }

    pub fn zero() -> Self {
        Self::new([[T::zero(); 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = T::one();
        }
        m
    }

    /// Block matrix `(a b; c d)`.
    pub fn from_blocks(a: Mat2<T>, b: Mat2<T>, c: Mat2<T>, d: Mat2<T>) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.entries[i][j] = a.entries[i][j];
                m.entries[i][j + 2] = b.entries[i][j];
                m.entries[i + 2][j] = c.entries[i][j];
                m.entries[i + 2][j + 2] = d.entries[i][j];
            }
        }
        m
    }

    /// The four 2×2 blocks `(a, b, c, d)` of `(a b; c d)`.
    pub fn blocks(&self) -> [Mat2<T>; 4] {
        let e = &self.entries;
        let blk = |r: usize, c: usize| {
            Mat2::new([[e[r][c], e[r][c + 1]], [e[r + 1][c], e[r + 1][c + 1]]])
        };
        [blk(0, 0), blk(0, 2), blk(2, 0), blk(2, 2)]
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i][j]
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.entries.map(|r| r.map(|x| x * s)))
    }

    pub fn transpose(&self) -> Self {
        let mut m = *self;
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i];
            }
        }
        m
    }

    pub fn trace(&self) -> T {
        (0..4).fold(T::zero(), |acc, i| acc + self.entries[i][i])
    }

    /// `A B − B A`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `trace(Aᵀ B)`.
    pub fn frobenius_inner(&self, other: &Self) -> T {
        let mut acc = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                acc = acc + self.entries[i][j] * other.entries[i][j];
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|x| x.is_zero())
    }

    /// Entry-wise conversion, e.g. from the exact integer basis to floats.
    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Mat4<U> {
        Mat4::new(self.entries.map(|r| r.map(&f)))
    }

    /// Linear combination `Σ cᵢ Aᵢ`.
    pub fn combination<'a>(terms: impl IntoIterator<Item = (T, &'a Self)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (c, m)| acc + m.scale(c))
    }
}

impl<T: Real> Mat4<T> {
    /// Builds a matrix, rejecting NaN and infinite entries.
    pub fn try_new(entries: [[T; 4]; 4]) -> Result<Self> {
        if entries.iter().flatten().all(|x| x.is_finite()) {
            Ok(Self::new(entries))
        } else {
            Err(Error::Domain("non-finite matrix entry".into()))
        }
    }

    pub fn frobenius_norm(&self) -> T {
        self.frobenius_inner(self).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .flatten()
            .fold(T::zero(), |m, x| m.max(x.abs()))
    }

    /// Max-norm distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        (*self - *other).max_abs()
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting; `None` if
    /// a pivot vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.entries;
        let mut inv = Self::identity().entries;
        for col in 0..4 {
            let piv = (col..4)
                .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
                .unwrap();
            if a[piv][col] == T::zero() {
                return None;
            }
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col];
            for j in 0..4 {
                a[col][j] = a[col][j] / p;
                inv[col][j] = inv[col][j] / p;
            }
            for i in 0..4 {
                if i != col {
                    let f = a[i][col];
                    for j in 0..4 {
                        a[i][j] = a[i][j] - f * a[col][j];
                        inv[i][j] = inv[i][j] - f * inv[col][j];
                    }
                }
            }
        }
        Some(Self::new(inv))
    }
}

impl<T: Scalar> Add for Mat4<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..4 {
            for j in 0..4 {
                r.entries[i][j] = self.entries[i][j] + o.entries[i][j];
            }
        }
        r
    }
}

impl<T: Scalar> Sub for Mat4<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Scalar> Neg for Mat4<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.entries.map(|r| r.map(|x| -x)))
    }
}

impl<T: Scalar> Mul for Mat4<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut r = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = T::zero();
                for k in 0..4 {
                    acc = acc + self.entries[i][k] * o.entries[k][j];
                }
                r.entries[i][j] = acc;
            }
        }
        r
    }
}

/// `A B − B A`.
pub fn commutator<T: Scalar>(a: &Mat4<T>, b: &Mat4<T>) -> Mat4<T> {
    a.commutator(b)
}

/// `trace(Aᵀ B)`.
pub fn frobenius_inner<T: Scalar>(a: &Mat4<T>, b: &Mat4<T>) -> T {
    a.frobenius_inner(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Mat4<i64> {
        Mat4::from_ints([[1, 2, 0, -1], [3, 0, 4, 2], [0, -2, 1, 1], [5, 1, 0, 3]])
    }

    #[test]
    fn blocks_round_trip() {
        let m = sample();
        let [a, b, c, d] = m.blocks();
        assert_eq!(Mat4::from_blocks(a, b, c, d), m);
    }

    #[test]
    fn identity_is_neutral() {
        let m = sample();
        assert_eq!(m * Mat4::identity(), m);
        assert_eq!(Mat4::identity() * m, m);
    }

    #[test]
    fn inner_with_identity_is_trace() {
        let m = sample();
        assert_eq!(Mat4::identity().frobenius_inner(&m), m.trace());
    }

    #[test]
    fn inverse_of_sample() {
        let m = sample().map(|x| x as f64);
        let inv = m.inverse().unwrap();
        assert!((m * inv).max_abs_diff(&Mat4::identity()) < 1e-12);
    }

    #[test]
    fn singular_has_no_inverse() {
        let mut m = Mat4::<f64>::identity();
        m.entries[2][2] = 0.0;
        assert!(m.inverse().is_none());
    }

    #[test]
    fn try_new_rejects_nan() {
        let mut e = [[0.0f64; 4]; 4];
        e[1][3] = f64::NAN;
        assert!(Mat4::try_new(e).is_err());
        assert!(Mat2::try_new([[1.0, f64::INFINITY], [0.0, 0.0]]).is_err());
    }

    #[test]
    fn mat2_products() {
        let j = Mat2::<i64>::from_ints([[0, 1], [-1, 0]]);
        assert_eq!(j * j, -Mat2::identity());
        assert_eq!(j.det(), 1);
        assert_eq!(j.transpose(), -j);
    }
}
