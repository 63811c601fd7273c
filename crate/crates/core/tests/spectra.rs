use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resonance_core::algebra::{basis_m, homogeneous_reduced, resonant_l, ReducedCoords};
use resonance_core::linalg::{singular_values, Mat4};
use resonance_core::spectra::{
    classify_configuration, is_semisimple_double_pair, spectrum, ConfigCode, SAMPLED_TOL,
};
use resonance_core::{Complex, Error, Mat4f};

/// `det(zI − A)` by cofactor expansion along the first row.
fn det_shifted(a: &Mat4f, z: Complex<f64>) -> Complex<f64> {
    let m: Vec<Vec<Complex<f64>>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let d = if i == j { z } else { Complex::new(0.0, 0.0) };
                    d - a.get(i, j)
                })
                .collect()
        })
        .collect();
    det(&m)
}

fn det(m: &[Vec<Complex<f64>>]) -> Complex<f64> {
    if m.len() == 1 {
        return m[0][0];
    }
    let mut total = Complex::new(0.0, 0.0);
    for c in 0..m.len() {
        let minor: Vec<Vec<Complex<f64>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
        total += m[0][c] * det(&minor) * sign;
    }
    total
}

fn hr(nu: [f64; 5]) -> Mat4f {
    homogeneous_reduced(&ReducedCoords::new(nu))
}

#[test]
fn spectrum_of_l() {
    let sp = spectrum(&resonant_l::<f64>(), 1e-9).unwrap();
    assert_eq!(sp.clusters.len(), 2);
    assert!(sp.max_real_part.abs() < 1e-12);
    for z in sp.eigenvalues {
        assert!((z.im.abs() - 1.0).abs() < 1e-12 && z.re.abs() < 1e-12);
    }
    assert_eq!(sp.semisimple_double_pair, Some(true));
    assert_eq!(
        classify_configuration(&resonant_l::<f64>(), 1e-9)
            .unwrap()
            .code,
        ConfigCode::BetaBeta
    );
}

#[test]
fn spectrum_of_doubled_pair() {
    // ((λ − 1)² + 1)²
    let a = hr([1.0, 0.0, 0.0, 0.0, 1.0]);
    let sp = spectrum(&a, 1e-9).unwrap();
    assert!((sp.max_real_part - 1.0).abs() < 1e-12);
    for z in sp.eigenvalues {
        assert!((z - Complex::new(1.0, z.im.signum())).norm() < 1e-12);
    }
    assert_eq!(sp.clusters.len(), 2);
}

#[test]
fn spectrum_matches_determinant_oracle() {
    // At ν₅ = 1 this matrix has eigenvalues ±2i and a double zero.
    let a = hr([0.0, 0.0, 0.0, 1.0, 1.0]);
    let sp = spectrum(&a, 1e-9).unwrap();
    for z in sp.eigenvalues {
        assert!(det_shifted(&a, z).norm() < 1e-9);
    }
    let mut mags: Vec<f64> = sp.eigenvalues.iter().map(|z| z.norm()).collect();
    mags.sort_by(f64::total_cmp);
    assert!(mags[0] < 1e-7 && mags[1] < 1e-7);
    assert!((mags[2] - 2.0).abs() < 1e-12 && (mags[3] - 2.0).abs() < 1e-12);
    assert!(matches!(
        classify_configuration(&a, 1e-9),
        Err(Error::UnresolvedConfiguration(_))
    ));

    // With ν₅ = 2 the pairs are ±i and ±3i.
    let b = hr([0.0, 0.0, 0.0, 1.0, 2.0]);
    let sp = spectrum(&b, 1e-9).unwrap();
    for z in sp.eigenvalues {
        assert!(det_shifted(&b, z).norm() < 1e-9);
        assert!(z.re.abs() < 1e-12);
    }
    assert_eq!(
        classify_configuration(&b, 1e-9).unwrap().code,
        ConfigCode::BetaOneBetaTwo
    );
}

#[test]
fn nilpotent_perturbations_are_not_semisimple() {
    let l = resonant_l::<f64>();
    for s in [1.0, -1.0] {
        let n = (basis_m::<f64>(4) + basis_m::<f64>(6).scale(s)).scale(0.5);
        assert!((n * n).max_abs() < 1e-15);
        let a = l + n;
        assert!(!is_semisimple_double_pair(&a, 1.0, 1e-9).unwrap());
        assert_eq!(
            classify_configuration(&a, 1e-9).unwrap().code,
            ConfigCode::BetaSquared
        );
    }
    assert!(is_semisimple_double_pair(&l, 1.0, 1e-9).unwrap());
}

#[test]
fn stable_point_is_stable() {
    let a = hr([-1.0, 0.0, 0.0, 0.0, 1.0]).scale(0.1);
    let c = classify_configuration(&a, 1e-9).unwrap();
    assert_eq!(c.stable_count, 4);
    assert_eq!(c.code.generic(), ConfigCode::GammaMinusGammaMinus);
}

#[test]
fn no_real_eigenvalues_near_l() {
    let mut r = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let v: [f64; 4] = std::array::from_fn(|_| r.random_range(-1.0..1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let rad = 0.3 * r.random_range(0.0f64..1.0);
        let nu = [0, 1, 2, 3].map(|k| v[k] / n * rad);
        let a = hr([nu[0], nu[1], nu[2], nu[3], 1.0]);
        let sp = spectrum(&a, SAMPLED_TOL).unwrap();
        for z in sp.eigenvalues {
            assert!(z.im.abs() >= 0.5, "{z} at {nu:?}");
        }
        classify_configuration(&a, SAMPLED_TOL).unwrap();
    }
}

fn generic_nu() -> impl Strategy<Value = [f64; 5]> {
    (proptest::array::uniform4(-1.0f64..1.0), 1.5f64..3.0)
        .prop_map(|(v, n5)| [v[0], v[1], v[2], v[3], n5])
        .prop_filter("off the critical set", |nu| {
            let [a, b, c, d, _] = nu.map(|x| x * x);
            ((a - b) * (a + d) + a * c).abs() > 1e-3 && nu[0].abs() > 1e-3
        })
}

proptest! {
    #[test]
    fn eigenvalues_are_conjugate_closed(nu in generic_nu()) {
        let sp = spectrum(&hr(nu), SAMPLED_TOL).unwrap();
        for z in sp.eigenvalues {
            let nearest = sp.eigenvalues.iter().map(|w| (w - z.conj()).norm()).fold(f64::MAX, f64::min);
            prop_assert!(nearest < 1e-9);
        }
    }

    #[test]
    fn configuration_is_scale_invariant(nu in generic_nu()) {
        let c = classify_configuration(&hr(nu), SAMPLED_TOL).unwrap();
        for t in [0.5, 2.0] {
            let ct = classify_configuration(&hr(nu.map(|v| v * t)), SAMPLED_TOL).unwrap();
            prop_assert_eq!(c, ct);
        }
    }

    #[test]
    fn configuration_is_conjugation_invariant(
        nu in generic_nu(),
        e in proptest::array::uniform16(-0.2f64..0.2),
    ) {
        let g = Mat4::<f64>::identity()
            + Mat4::new(std::array::from_fn(|i| std::array::from_fn(|j| e[4 * i + j])));
        let sv = singular_values(&g);
        let (lo, hi) = sv.iter().fold((f64::MAX, 0.0f64), |(l, h), &s| (l.min(s), h.max(s)));
        prop_assume!(hi / lo < 10.0);
        let a = hr(nu);
        let gi = g.inverse().unwrap();
        let c = classify_configuration(&a, SAMPLED_TOL).unwrap();
        let cg = classify_configuration(&(gi * a * g), SAMPLED_TOL).unwrap();
        prop_assert_eq!(c, cg);
    }

    #[test]
    fn code_agrees_with_stable_count(nu in generic_nu()) {
        let a = hr(nu);
        let c = classify_configuration(&a, SAMPLED_TOL).unwrap();
        let sp = spectrum(&a, SAMPLED_TOL).unwrap();
        let neg = sp.eigenvalues.iter().filter(|z| z.re < 0.0).count() as u8;
        prop_assert_eq!(c.stable_count, neg);
        prop_assert_eq!(c.code.stable_count(), neg);
    }
}
