//! Singular values and numeric rank of 4×4 real matrices.

use super::mat::Mat4;
use crate::scalar::Real;

/// Singular values in descending order, by one-sided Jacobi rotations on the
/// columns (Hestenes). Accurate to a few ulps of the largest singular value.
pub fn singular_values<T: Real>(m: &Mat4<T>) -> [T; 4] {
    let mut a = m.entries;
    let eps = T::epsilon();
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..3 {
            for q in p + 1..4 {
                let (mut alpha, mut beta, mut gamma) = (T::zero(), T::zero(), T::zero());
                for row in &a {
                    alpha = alpha + row[p] * row[p];
                    beta = beta + row[q] * row[q];
                    gamma = gamma + row[p] * row[q];
                }
                if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma == T::zero() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (gamma + gamma);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv = [T::zero(); 4];
    for (j, s) in sv.iter_mut().enumerate() {
        *s = a
            .iter()
            .fold(T::zero(), |acc, row| acc + row[j] * row[j])
            .sqrt();
    }
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv
}

/// Number of singular values exceeding `tol × σ_max`. The zero matrix has
/// rank 0.
pub fn numeric_rank<T: Real>(m: &Mat4<T>, tol: T) -> usize {
    let sv = singular_values(m);
    if sv[0] == T::zero() {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * sv[0]).count()
}

/// Number of singular values exceeding the absolute threshold `abs_tol`.
///
/// Use this when the matrix may legitimately vanish and a relative cut would
/// promote rounding noise to full rank.
pub fn numeric_rank_abs<T: Real>(m: &Mat4<T>, abs_tol: T) -> usize {
    singular_values(m).iter().filter(|&&s| s > abs_tol).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_ranks() {
        assert_eq!(numeric_rank(&Mat4::<f64>::zero(), 1e-8), 0);
        assert_eq!(numeric_rank(&Mat4::<f64>::identity(), 1e-8), 4);
    }

    #[test]
    fn diagonal_singular_values() {
        let mut m = Mat4::<f64>::zero();
        for (i, v) in [3.0, -5.0, 0.5, 0.0].into_iter().enumerate() {
            m.entries[i][i] = v;
        }
        assert_eq!(singular_values(&m), [5.0, 3.0, 0.5, 0.0]);
        assert_eq!(numeric_rank(&m, 1e-8), 3);
    }

    #[test]
    fn rank_one_outer_product() {
        let u = [1.0, 2.0, -1.0, 0.5];
        let v = [0.3, -0.7, 2.0, 1.0];
        let m = Mat4::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| u[i] * v[j])
        }));
        assert_eq!(numeric_rank(&m, 1e-10), 1);
    }

    #[test]
    fn absolute_rank_of_tiny_matrix() {
        let m = Mat4::<f64>::identity().scale(1e-14);
        assert_eq!(numeric_rank(&m, 1e-8), 4);
        assert_eq!(numeric_rank_abs(&m, 1e-10), 0);
    }
}
