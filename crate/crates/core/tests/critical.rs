use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, TAU};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resonance_core::algebra::ReducedCoords;
use resonance_core::critical::{
    f_critical, f_surface, g_full, g_sphere, grad_f, hessian_f, invert_phi, normal_form_residual,
    param_phi, phi_coeffs, psi, Disc, NormalFormKind, RootTriple, SpherePoint,
};
use resonance_core::linalg::{quartic_roots, PolyCoeffs};
use resonance_core::{Complex, Error, Rational64};

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

#[test]
fn psi_examples() {
    let p = psi(&RootTriple {
        alpha: q(1),
        beta: q(1),
        gamma: q(1),
    });
    assert_eq!(p.ascending(), [2, -2, 3, -2, 1].map(q));
    let p = psi(&RootTriple {
        alpha: q(0),
        beta: q(3),
        gamma: q(2),
    });
    assert_eq!(p.ascending(), [36, 0, 13, 0, 1].map(q));
}

#[test]
fn psi_roots_reconstruct() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let (alpha, beta, gamma) = (
            r.random_range(-2.0..2.0),
            r.random_range(0.1..2.0),
            r.random_range(0.1..2.0),
        );
        let rs = quartic_roots(&psi(&RootTriple { alpha, beta, gamma }), 1e-9).unwrap();
        let want = [
            Complex::new(alpha, beta),
            Complex::new(alpha, -beta),
            Complex::new(0.0, gamma),
            Complex::new(0.0, -gamma),
        ];
        for w in want {
            let d = rs
                .roots
                .iter()
                .map(|z| (z - w).norm())
                .fold(f64::MAX, f64::min);
            // Near-coincident root pairs lose half the digits.
            assert!(d < 1e-6, "{w} missing from {:?}", rs.roots);
        }
    }
}

#[test]
fn f_surface_examples() {
    assert_eq!(
        f_surface(&PolyCoeffs::from_ascending([1, 0, 0, 0, 1].map(q))),
        q(0)
    );
    assert_eq!(
        f_surface(&PolyCoeffs::from_ascending([0, 1, 0, 1, 1].map(q))),
        q(1)
    );
}

#[test]
fn phi_coeffs_examples() {
    let l = phi_coeffs(&ReducedCoords::new([0, 0, 0, 0, 1].map(q)));
    assert_eq!(l, PolyCoeffs::from_ints([1, 0, 2, 0, 1]));
    // ((λ − a)² + b²)² with a = 2, b = 3: (λ² − 4λ + 13)².
    let p = phi_coeffs(&ReducedCoords::new([2, 0, 0, 0, 3].map(q)));
    assert_eq!(p, PolyCoeffs::from_ints([1, -8, 42, -104, 169]));
}

#[test]
fn g_full_examples() {
    assert_eq!(g_full(&ReducedCoords::new([1, 0, 0, 0, 1].map(q))), q(-128));
    assert_eq!(g_full(&ReducedCoords::new([0, 3, 5, 0, 2].map(q))), q(0));
    assert_eq!(g_full(&ReducedCoords::new([0, 0, 5, 7, 2].map(q))), q(0));
}

#[test]
fn f_critical_examples() {
    assert_eq!(f_critical(&[1, 0, 0, 0].map(q)), q(1));
    for (s, t) in [(1, 2), (-3, 5), (0, 7)] {
        assert_eq!(f_critical(&[0, 0, s, t].map(q)), q(0));
    }
}

#[test]
fn gradient_examples() {
    assert_eq!(grad_f(&[1, 0, 0, 0].map(q)), [4, 0, 0, 0].map(q));
    for (s, t) in [(2, 3), (-1, 4)] {
        assert_eq!(grad_f(&[0, 0, s, t].map(q)), [q(0); 4]);
        assert_eq!(grad_f(&[0, s, t, 0].map(q)), [q(0); 4]);
    }
}

#[test]
fn hessian_on_first_critical_family() {
    for (s, t) in [(1, 2), (-3, 1), (2, 0)] {
        let h = hessian_f(&[0, 0, s, t].map(q));
        let d = [2 * (s * s + t * t), -2 * t * t, 0, 0].map(q);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(h[i][j], if i == j { d[i] } else { q(0) });
            }
        }
    }
}

#[test]
fn hessian_on_second_critical_family() {
    // Direct second derivatives of (ν₁² − ν₂²)(ν₁² + ν₄²) + ν₁²ν₃² at
    // (0, s, t, 0): ∂₁₁ = 2(ν₃² − ν₂²), ∂₄₄ = −2ν₂², all others zero.
    for (s, t) in [(1, 2), (3, 1), (2, -2)] {
        let h = hessian_f(&[0, s, t, 0].map(q));
        let d = [2 * (t * t - s * s), 0, 0, -2 * s * s].map(q);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(h[i][j], if i == j { d[i] } else { q(0) });
            }
        }
    }
}

#[test]
fn sphere_equation_agrees_with_f_on_unit_vectors() {
    let mut r = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10_000 {
        let v: [f64; 4] = std::array::from_fn(|_| r.random_range(-1.0..1.0));
        let p = SpherePoint::normalize(v).unwrap();
        let (f, g) = (f_critical(&p.nu4), g_sphere(&p.nu4));
        assert!((f - g).abs() < 1e-10);
    }
    assert_eq!(g_sphere(&[0.0, 0.5, 0.7, 0.3]), -0.25 * 0.09);
}

#[test]
fn param_phi_examples() {
    let p1 = param_phi(Disc::Plus, 0.0, 0.0).unwrap();
    let want = [0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0];
    assert!(p1.distance(&want) < 1e-15);
    let s1 = param_phi(Disc::Plus, 0.5, PI / 4.0).unwrap();
    let want = [0.25, 0.5, 0.75, 2f64.sqrt() / 4.0];
    assert!(s1.distance(&want) < 1e-15);
    assert!(matches!(
        param_phi(Disc::Plus, 1.5, 0.0),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        param_phi(Disc::Minus, 0.0, 7.0),
        Err(Error::Domain(_))
    ));
}

#[test]
fn normal_forms_at_all_singular_points() {
    let h = FRAC_1_SQRT_2;
    let cases = [
        ([0.0, 0.0, 1.0, 0.0], NormalFormKind::SelfTangency),
        ([0.0, 0.0, -1.0, 0.0], NormalFormKind::SelfTangency),
        ([0.0, h, h, 0.0], NormalFormKind::Umbrella),
        ([0.0, -h, h, 0.0], NormalFormKind::Umbrella),
        ([0.0, h, -h, 0.0], NormalFormKind::Umbrella),
        ([0.0, -h, -h, 0.0], NormalFormKind::Umbrella),
    ];
    for (c, kind) in cases {
        let center = SpherePoint::new(c).unwrap();
        let rep = normal_form_residual(kind, &center, 0.05).unwrap();
        assert!(!rep.samples.is_empty());
        assert!(rep.max_residual <= 1e-10, "{kind} at {c:?}");
        assert!(rep.identity_residual <= 1e-12);
        for s in &rep.samples {
            assert!(s.local.iter().map(|x| x * x).sum::<f64>().sqrt() <= 0.05 + 1e-12);
        }
    }
}

#[test]
fn normal_form_rejects_bad_input() {
    let p5 = SpherePoint::new([0.0, 0.0, 1.0, 0.0]).unwrap();
    assert!(normal_form_residual(NormalFormKind::Umbrella, &p5, 0.05).is_err());
    assert!(normal_form_residual(NormalFormKind::SelfTangency, &p5, 0.5).is_err());
    let off = SpherePoint::new([0.6, 0.0, 0.8, 0.0]).unwrap();
    assert!(normal_form_residual(NormalFormKind::SelfTangency, &off, 0.05).is_err());
}

#[test]
fn sphere_point_rejects_off_sphere() {
    assert!(SpherePoint::new([1.0, 1e-5, 0.0, 0.0]).is_err());
    assert!(SpherePoint::normalize([0.0; 4]).is_err());
}

#[test]
fn invert_phi_round_trips_on_grid() {
    for disc in [Disc::Plus, Disc::Minus] {
        for i in 1..20 {
            let s = -1.0 + 2.0 * i as f64 / 20.0;
            for j in 0..40 {
                let t = TAU * j as f64 / 40.0;
                let p = param_phi(disc, s, t).unwrap();
                let (d, s2, t2) =
                    invert_phi(&p, 1e-9).unwrap_or_else(|| panic!("{disc:?} {s} {t} {:?}", p.nu4));
                assert_eq!(d, disc);
                let q = param_phi(d, s2, t2).unwrap();
                assert!(p.distance(&q.nu4) < 1e-9);
            }
        }
    }
    // Off-surface points have no preimage.
    let p = SpherePoint::new([0.6, 0.0, 0.8, 0.0]).unwrap();
    assert!(invert_phi(&p, 1e-9).is_none());
}

proptest! {
    #[test]
    fn f_is_sign_symmetric(v in proptest::array::uniform4(-2.0f64..2.0), mask in 0u8..16) {
        let w: [f64; 4] = std::array::from_fn(|k| if mask >> k & 1 == 1 { -v[k] } else { v[k] });
        prop_assert_eq!(f_critical(&v), f_critical(&w));
    }

    #[test]
    fn critical_set_is_a_cone(s in -1.0f64..1.0, t in 0.0f64..TAU, k in 0.01f64..3.0) {
        let p = param_phi(Disc::Plus, s, t).unwrap();
        prop_assert!(f_critical(&p.nu4).abs() < 1e-12);
        prop_assert!(f_critical(&p.nu4.map(|x| k * x)).abs() < 1e-12);
    }

    #[test]
    fn conoid_is_ruled(t in 0.0f64..TAU, s0 in -1.0f64..1.0, s1 in -1.0f64..1.0) {
        let a = param_phi(Disc::Plus, s0, t).unwrap().chart();
        let b = param_phi(Disc::Plus, s1, t).unwrap().chart();
        let m = param_phi(Disc::Plus, 0.5 * (s0 + s1), t).unwrap().chart();
        for k in 0..3 {
            prop_assert!((m[k] - 0.5 * (a[k] + b[k])).abs() < 1e-15);
        }
    }

    #[test]
    fn two_to_one_identities(s in -1.0f64..1.0, t in 0.0f64..TAU) {
        for disc in [Disc::Plus, Disc::Minus] {
            let a = param_phi(disc, s, FRAC_PI_2).unwrap();
            let b = param_phi(disc, -s, 3.0 * FRAC_PI_2).unwrap();
            prop_assert!(a.distance(&b.nu4) < 1e-14);
            let c = param_phi(disc, 0.0, t).unwrap();
            let d = param_phi(disc, 0.0, TAU - t).unwrap();
            prop_assert!(c.distance(&d.nu4) < 1e-14);
        }
    }

    #[test]
    fn weighted_homogeneity_of_f(a in proptest::array::uniform5(-2.0f64..2.0), t in 0.25f64..3.0) {
        let p = PolyCoeffs::from_ascending(a);
        let lhs = f_surface(&p.quasi_scale(t));
        let rhs = t.powi(6) * f_surface(&p);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + t.powi(6)) * 24.0);
    }

    #[test]
    fn phi_is_quasi_homogeneous(nu in proptest::array::uniform5(-1.0f64..1.0)) {
        let base = phi_coeffs(&ReducedCoords::new(nu));
        let scaled = phi_coeffs(&ReducedCoords::new(nu).scale(2.0));
        prop_assert!(scaled.max_abs_diff(&base.quasi_scale(2.0)) < 1e-12);
    }

    #[test]
    fn g_full_is_degree_six(nu in proptest::array::uniform5(-1.0f64..1.0), t in 0.25f64..3.0) {
        let nu = ReducedCoords::new(nu);
        let lhs = g_full(&nu.scale(t));
        let rhs = t.powi(6) * g_full(&nu);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * t.powi(6) * 256.0);
    }
}
