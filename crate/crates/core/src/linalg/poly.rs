//! Quartic coefficient vectors and characteristic polynomials.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::mat::Mat4;
use crate::scalar::{Real, Scalar};

/// Coefficients of a degree-4 polynomial in descending order
/// `a = (a₄, a₃, a₂, a₁, a₀)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolyCoeffs<T> {
    pub a: [T; 5],
}

impl<T: Scalar> PolyCoeffs<T> {
    pub const fn new(a: [T; 5]) -> Self {
        Self { a }
    }

    pub fn from_ints(a: [i64; 5]) -> Self {
        Self::new(a.map(T::int))
    }

    /// Builds from ascending order `(a₀, a₁, a₂, a₃, a₄)`.
    pub fn from_ascending(asc: [T; 5]) -> Self {
        Self::new([asc[4], asc[3], asc[2], asc[1], asc[0]])
    }

    /// Ascending order `(a₀, a₁, a₂, a₃, a₄)`.
    pub fn ascending(&self) -> [T; 5] {
        let a = self.a;
        [a[4], a[3], a[2], a[1], a[0]]
    }

    /// Coefficient of `λᵏ`.
    pub fn coeff(&self, k: usize) -> T {
        self.a[4 - k]
    }

    pub fn is_monic(&self) -> bool {
        self.a[0] == T::one()
    }

    pub fn eval(&self, x: T) -> T {
        self.a.iter().fold(T::zero(), |acc, &c| acc * x + c)
    }

    /// Weighted rescaling `aₖ ↦ t^{4−k} aₖ`, the coefficient image of `A ↦ tA`.
    pub fn quasi_scale(&self, t: T) -> Self {
        let mut out = self.a;
        let mut w = T::one();
        for c in out.iter_mut() {
            *c = *c * w;
            w = w * t;
        }
        Self::new(out)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> PolyCoeffs<U> {
        PolyCoeffs::new(self.a.map(f))
    }
}

impl<T: Real> PolyCoeffs<T> {
    pub fn eval_complex(&self, z: Complex<T>) -> Complex<T> {
        self.a
            .iter()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c)
    }

    /// `Σ |aₖ| |z|ᵏ`, the natural scale of `p(z)` for residual bounds.
    pub fn magnitude_at(&self, z: Complex<T>) -> T {
        let r = z.norm();
        self.a.iter().fold(T::zero(), |acc, &c| acc * r + c.abs())
    }

    /// Monic polynomial `Π (λ − rᵢ)`; imaginary parts of the product are dropped.
    pub fn from_roots(roots: &[Complex<T>; 4]) -> Self {
        let mut acc = vec![Complex::new(T::one(), T::zero())];
        for &r in roots {
            let mut next = vec![Complex::new(T::zero(), T::zero()); acc.len() + 1];
            for (i, &v) in acc.iter().enumerate() {
                next[i] = next[i] + v;
                next[i + 1] = next[i + 1] - v * r;
            }
            acc = next;
        }
        Self::new([acc[0].re, acc[1].re, acc[2].re, acc[3].re, acc[4].re])
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.a
            .iter()
            .zip(other.a.iter())
            .fold(T::zero(), |m, (x, y)| m.max((*x - *y).abs()))
    }
}

/// Characteristic polynomial `det(λI − A)` by the Faddeev–LeVerrier trace
/// recurrence. Exact over integer and rational scalars: every division by
/// `k` is exact because the coefficients are integers for integer `A`.
pub fn char_poly<T: Scalar>(m: &Mat4<T>) -> PolyCoeffs<T> {
    let id = Mat4::identity();
    let mut a = [T::zero(); 5];
    a[0] = T::one();
    let mut n = Mat4::zero();
    for k in 1..=4 {
        n = *m * n + id.scale(a[k - 1]);
        a[k] = -(*m * n).trace() / T::int(k as i64);
    }
    PolyCoeffs::new(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational64;

    #[test]
    fn char_poly_of_l() {
        let l = Mat4::<i64>::from_ints([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]);
        assert_eq!(char_poly(&l), PolyCoeffs::from_ints([1, 0, 2, 0, 1]));
    }

    #[test]
    fn char_poly_of_identity() {
        assert_eq!(
            char_poly(&Mat4::<i64>::identity()),
            PolyCoeffs::from_ints([1, -4, 6, -4, 1])
        );
    }

    #[test]
    fn char_poly_triangular_is_product_of_diagonal() {
        // Diagonal 1, 2, 3, 4: (λ−1)(λ−2)(λ−3)(λ−4) = λ⁴ − 10λ³ + 35λ² − 50λ + 24.
        let m = Mat4::<i64>::from_ints([[1, 7, -3, 2], [0, 2, 5, 1], [0, 0, 3, 9], [0, 0, 0, 4]]);
        assert_eq!(char_poly(&m), PolyCoeffs::from_ints([1, -10, 35, -50, 24]));
    }

    #[test]
    fn char_poly_rational_is_exact() {
        let half = Rational64::new(1, 2);
        let m = Mat4::<Rational64>::identity().scale(half);
        let p = char_poly(&m);
        // (λ − ½)⁴
        let expect = [
            Rational64::from_integer(1),
            Rational64::from_integer(-2),
            Rational64::new(3, 2),
            Rational64::new(-1, 2),
            Rational64::new(1, 16),
        ];
        assert_eq!(p.a, expect);
    }

    #[test]
    fn ascending_round_trip() {
        let p = PolyCoeffs::<i64>::from_ints([1, 2, 3, 4, 5]);
        assert_eq!(p.ascending(), [5, 4, 3, 2, 1]);
        assert_eq!(PolyCoeffs::from_ascending(p.ascending()), p);
        assert_eq!(p.coeff(0), 5);
        assert_eq!(p.eval(2), 16 + 16 + 12 + 8 + 5);
    }

    #[test]
    fn from_roots_inverts_known_factorization() {
        let i = Complex::new(0.0, 1.0);
        let p = PolyCoeffs::from_roots(&[i, -i, i, -i]);
        assert!(p.max_abs_diff(&PolyCoeffs::from_ints([1, 0, 2, 0, 1])) < 1e-15);
    }

    #[test]
    fn quasi_scale_matches_char_poly_of_scaled_matrix() {
        let m = Mat4::<i64>::from_ints([[1, 2, 0, -1], [3, 0, 4, 2], [0, -2, 1, 1], [5, 1, 0, 3]]);
        assert_eq!(char_poly(&m.scale(3)), char_poly(&m).quasi_scale(3));
    }
}
