//! Quasi-uniform point sets on the unit 3-sphere and structured grids on the
//! critical surface.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::critical::{param_phi, Disc, SpherePoint};

/// Plastic-like constant of the three-dimensional additive recurrence: the
/// real root greater than 1 of `x⁴ = x + 1`.
const PHI3: f64 = 1.220_744_084_605_759_5;

/// `n` points of the additive recurrence `uₖ = frac(σ + k α)` in `[0,1)³`
/// with `α = (φ⁻¹, φ⁻², φ⁻³)`, shifted by a seeded random `σ`.
pub fn r3_sequence(n: usize, seed: u64) -> Vec<[f64; 3]> {
    let alpha = [1.0 / PHI3, 1.0 / (PHI3 * PHI3), 1.0 / (PHI3 * PHI3 * PHI3)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift: [f64; 3] = std::array::from_fn(|_| rng.random::<f64>());
    (0..n)
        .map(|k| std::array::from_fn(|d| (shift[d] + k as f64 * alpha[d]).fract()))
        .collect()
}

/// Volume-preserving map from the unit cube to the unit 3-sphere.
pub fn cube_to_sphere(u: [f64; 3]) -> [f64; 4] {
    let tau = std::f64::consts::TAU;
    let (a, b) = ((1.0 - u[0]).sqrt(), u[0].sqrt());
    let (s2, c2) = (tau * u[1]).sin_cos();
    let (s3, c3) = (tau * u[2]).sin_cos();
    [a * s2, a * c2, b * s3, b * c3]
}

/// `n` quasi-uniform points of the unit 3-sphere.
pub fn sphere_samples(n: usize, seed: u64) -> Vec<SpherePoint<f64>> {
    r3_sequence(n, seed)
        .into_iter()
        .map(|u| SpherePoint::normalize(cube_to_sphere(u)).expect("nonzero"))
        .collect()
}

/// One point of a structured surface grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSample {
    pub s: f64,
    pub t: f64,
    pub point: SpherePoint<f64>,
}

/// The conoid image of the `(n+1) × (n+1)` grid `sᵢ = −1 + 2i/n`,
/// `tⱼ = 2πj/n` on one disc, row-major in `i`.
pub fn surface_grid(disc: Disc, n: usize) -> Vec<SurfaceSample> {
    let mut out = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        let s = grid_s(i, n);
        for j in 0..=n {
            let t = grid_t(j, n);
            let point = param_phi(disc, s, t).expect("grid inside the parameter rectangle");
            out.push(SurfaceSample { s, t, point });
        }
    }
    out
}

pub(crate) fn grid_s(i: usize, n: usize) -> f64 {
    if 2 * i == n {
        0.0
    } else {
        -1.0 + 2.0 * i as f64 / n as f64
    }
}

pub(crate) fn grid_t(j: usize, n: usize) -> f64 {
    std::f64::consts::TAU * j as f64 / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_constant() {
        assert!((PHI3.powi(4) - PHI3 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn deterministic_and_seed_dependent() {
        assert_eq!(r3_sequence(50, 7), r3_sequence(50, 7));
        assert_ne!(r3_sequence(50, 7), r3_sequence(50, 8));
    }

    #[test]
    fn coordinate_second_moments() {
        // Uniform measure on S³ has E[νᵢ²] = 1/4.
        let pts = sphere_samples(20_000, 3);
        for k in 0..4 {
            let m = pts.iter().map(|p| p.nu4[k] * p.nu4[k]).sum::<f64>() / pts.len() as f64;
            assert!((m - 0.25).abs() < 2e-3, "coordinate {k}: {m}");
        }
    }

    #[test]
    fn grid_shape() {
        let g = surface_grid(Disc::Minus, 8);
        assert_eq!(g.len(), 81);
        assert!(g.iter().all(|s| s.point.nu4[2] <= 0.0));
        assert_eq!(g[4 * 9].s, 0.0);
    }
}
