//! Stratum of a point of the unit 3-sphere.
//!
//! The singular circles are `A = {ν₁ = ν₂ = 0}` and `B = {ν₁ = ν₄ = 0}`.
//! `A` splits into `L₅` (`ν₄ > 0`), `L₆` and the points `P₅, P₆ = (0,0,±1,0)`.
//! On `B` only the arcs with `|ν₂| < |ν₃|` are singular lines of the critical
//! surface; the complementary arcs (the umbrella handles) carry `F = 0`
//! but lie inside the mixed regions.

use serde::{Deserialize, Serialize};

use super::label::StratumLabel::{self, *};
use crate::algebra::homogeneous_reduced;
use crate::critical::{f_critical, invert_phi, param_phi, Disc, SpherePoint};
use crate::error::{Error, Result};
use crate::spectra::{
    classify_spectrum, spectrum_with, stable_count, EigConfig, Spectrum, DEFAULT_CLUSTER_TOL,
};

/// Exact coordinates of the six singular points.
pub fn p_point(label: StratumLabel) -> Option<[f64; 4]> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Some(match label {
        P1 => [0.0, h, h, 0.0],
        P2 => [0.0, -h, h, 0.0],
        P3 => [0.0, h, -h, 0.0],
        P4 => [0.0, -h, -h, 0.0],
        P5 => [0.0, 0.0, 1.0, 0.0],
        P6 => [0.0, 0.0, -1.0, 0.0],
        _ => return None,
    })
}

/// The `S` sheet containing a critical point off the singular circles, by
/// the signs of `ν₁` and `ν₂`.
pub fn sheet_of(nu1: f64, nu2: f64) -> StratumLabel {
    match (nu1 > 0.0, nu2 > 0.0) {
        (true, true) => S1,
        (false, false) => S2,
        (false, true) => S3,
        (true, false) => S4,
    }
}

/// A representative point of a stratum together with `ν₅`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Representative {
    pub label: StratumLabel,
    pub point: SpherePoint<f64>,
    pub nu5: f64,
}

/// Fixed representatives of all twenty strata, in [`StratumLabel::ALL`]
/// order. `S` representatives are conoid images of interior points of the
/// four `(s, t)` quadrants; the mixed regions use `(0, ±0.8, 0, 0.6)`,
/// which the flood fill places in the components enclosed by `S₁, S₃` and
/// `S₂, S₄` respectively. `V₁` and `V₃` use `(±0.8, 0, 0.6, 0)` rather than
/// `(±1, 0, 0, 0)`, where the two eigenvalue pairs coincide.
pub fn representatives(nu5: f64) -> Vec<Representative> {
    use std::f64::consts::FRAC_PI_4;
    let pt = |v: [f64; 4]| SpherePoint::new(v).expect("unit representative");
    let phi = |s: f64, t: f64| param_phi(Disc::Plus, s, t).expect("in domain");
    StratumLabel::ALL
        .into_iter()
        .map(|label| {
            let point = match label {
                V1 => pt([0.8, 0.0, 0.6, 0.0]),
                V2 => pt([0.0, 0.8, 0.0, 0.6]),
                V3 => pt([-0.8, 0.0, 0.6, 0.0]),
                V4 => pt([0.0, -0.8, 0.0, 0.6]),
                S1 => phi(0.5, FRAC_PI_4),
                S2 => phi(0.5, 3.0 * FRAC_PI_4),
                S3 => phi(-0.5, FRAC_PI_4),
                S4 => phi(-0.5, 3.0 * FRAC_PI_4),
                L1 => pt([0.0, 0.6, 0.8, 0.0]),
                L2 => pt([0.0, -0.6, 0.8, 0.0]),
                L3 => pt([0.0, 0.6, -0.8, 0.0]),
                L4 => pt([0.0, -0.6, -0.8, 0.0]),
                L5 => pt([0.0, 0.0, 0.6, 0.8]),
                L6 => pt([0.0, 0.0, 0.6, -0.8]),
                p => pt(p_point(p).unwrap()),
            };
            Representative { label, point, nu5 }
        })
        .collect()
}

fn check_nu5(nu5: f64) -> Result<()> {
    if nu5 == 0.0 || !nu5.is_finite() {
        return Err(Error::Domain("nu5 = 0: not an unfolding of L".into()));
    }
    Ok(())
}

/// Stratum by the geometric cascade: singular points, singular lines, the
/// critical surface, then the open regions by eigenvalue signs.
///
/// `tol` is both the coordinate tolerance for the singular loci and the
/// zero threshold for `F` and for real parts.
pub fn classify_point(p: &SpherePoint<f64>, nu5: f64, tol: f64) -> Result<StratumLabel> {
    classify_point_with(p, nu5, tol, DEFAULT_CLUSTER_TOL)
}

/// [`classify_point`] with an explicit root-clustering tolerance.
pub fn classify_point_with(
    p: &SpherePoint<f64>,
    nu5: f64,
    tol: f64,
    cluster_tol: f64,
) -> Result<StratumLabel> {
    check_nu5(nu5)?;
    let [v1, v2, v3, v4] = p.nu4;

    let near: Vec<StratumLabel> = [P1, P2, P3, P4, P5, P6]
        .into_iter()
        .filter(|&l| {
            let q = p_point(l).unwrap();
            (0..4).all(|k| (p.nu4[k] - q[k]).abs() <= tol)
        })
        .collect();
    match near.as_slice() {
        [] => {}
        [l] => return Ok(*l),
        _ => return Err(Error::AmbiguousStratum(format!("{near:?} all within tol"))),
    }

    let on_a = v1.abs() <= tol && v2.abs() <= tol;
    let on_b = v1.abs() <= tol && v4.abs() <= tol;
    if on_a && on_b {
        return Err(Error::AmbiguousStratum(
            "on both singular circles away from P5/P6".into(),
        ));
    }
    if on_a {
        return Ok(if v4 > 0.0 { L5 } else { L6 });
    }
    if on_b {
        let margin = v3.abs() - v2.abs();
        if margin.abs() <= tol {
            return Err(Error::AmbiguousStratum(
                "at an umbrella point outside tol".into(),
            ));
        }
        if margin > 0.0 {
            return Ok(match (v2 > 0.0, v3 > 0.0) {
                (true, true) => L1,
                (false, true) => L2,
                (true, false) => L3,
                (false, false) => L4,
            });
        }
        // Umbrella handle: F vanishes but the point is interior to V₂ or V₄.
        return Ok(if v2 > 0.0 { V2 } else { V4 });
    }

    let f = f_critical(&p.nu4);
    if f.abs() <= tol && invert_phi(p, tol).is_some() {
        return Ok(sheet_of(v1, v2));
    }
    let a = homogeneous_reduced(&p.with_nu5(nu5));
    let sp = spectrum_with(&a, tol, cluster_tol)?;
    let imaginary = sp
        .eigenvalues
        .iter()
        .any(|z| z.re.abs() <= tol * (1.0 + z.norm()));
    if imaginary {
        return Err(Error::AmbiguousStratum(format!(
            "imaginary eigenvalue but |F| = {:e} exceeds tol",
            f.abs()
        )));
    }
    // Surfaces real or zero eigenvalues as an error.
    classify_spectrum(&a, &sp, tol)?;
    Ok(match stable_count(&sp, tol) {
        4 => V3,
        0 => V1,
        _ if v2 > 0.0 => V2,
        _ => V4,
    })
}

/// Full classification record of a point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointClass {
    pub point: SpherePoint<f64>,
    pub nu5: f64,
    pub stratum: StratumLabel,
    pub config: EigConfig,
    pub spectrum: Spectrum<f64>,
    pub stable: bool,
}

/// [`classify_point`] together with the spectrum and eigenvalue
/// configuration of `ℋᵣ(ν)`.
pub fn classify_point_detailed(p: &SpherePoint<f64>, nu5: f64, tol: f64) -> Result<PointClass> {
    classify_point_detailed_with(p, nu5, tol, DEFAULT_CLUSTER_TOL)
}

/// [`classify_point_detailed`] with an explicit root-clustering tolerance.
pub fn classify_point_detailed_with(
    p: &SpherePoint<f64>,
    nu5: f64,
    tol: f64,
    cluster_tol: f64,
) -> Result<PointClass> {
    let stratum = classify_point_with(p, nu5, tol, cluster_tol)?;
    let a = homogeneous_reduced(&p.with_nu5(nu5));
    let sp = spectrum_with(&a, tol, cluster_tol)?;
    let config = classify_spectrum(&a, &sp, tol)?;
    let stable = sp.max_real_part < -tol;
    Ok(PointClass {
        point: *p,
        nu5,
        stratum,
        config,
        spectrum: sp,
        stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_NU5;

    #[test]
    fn representatives_classify_to_themselves() {
        for r in representatives(DEFAULT_NU5) {
            assert_eq!(
                classify_point(&r.point, r.nu5, 1e-9).unwrap(),
                r.label,
                "{:?}",
                r.point
            );
        }
    }

    #[test]
    fn zero_nu5_rejected() {
        let p = SpherePoint::new([1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            classify_point(&p, 0.0, 1e-9),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn handle_is_mixed_region() {
        let p = SpherePoint::new([0.0, 0.8, -0.6, 0.0]).unwrap();
        assert_eq!(classify_point(&p, DEFAULT_NU5, 1e-9).unwrap(), V2);
        let q = SpherePoint::new([0.0, -0.8, 0.6, 0.0]).unwrap();
        assert_eq!(classify_point(&q, DEFAULT_NU5, 1e-9).unwrap(), V4);
    }

    #[test]
    fn huge_tol_is_ambiguous() {
        let p = SpherePoint::new([0.0, 0.0, 1.0, 0.0]).unwrap();
        assert!(matches!(
            classify_point(&p, DEFAULT_NU5, 2.0),
            Err(Error::AmbiguousStratum(_))
        ));
    }

    #[test]
    fn sheet_signs() {
        assert_eq!(sheet_of(0.1, 0.2), S1);
        assert_eq!(sheet_of(-0.1, -0.2), S2);
        assert_eq!(sheet_of(-0.1, 0.2), S3);
        assert_eq!(sheet_of(0.1, -0.2), S4);
    }
}
