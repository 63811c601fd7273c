//! The critical polynomials, the critical surface on the unit 3-sphere, its
//! conoid parameterization and the local normal forms at its singular points.
//!
//! `F(ν) = (ν₁² − ν₂²)(ν₁² + ν₄²) + ν₁²ν₃²` vanishes exactly where the
//! homogeneous reduced unfolding has an eigenvalue on the imaginary axis.
//! On the unit sphere `F` coincides with `ν₁² − 2ν₁²ν₂² − ν₂²ν₄²`, which no
//! longer involves `ν₃`; the charts below therefore use `(ν₁, ν₂, ν₄)` with
//! `ν₃` recovered from the disc sign.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{homogeneous_reduced, ReducedCoords};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, PolyCoeffs};
use crate::scalar::{Real, Scalar};

/// Hemisphere of the unit 3-sphere by the sign of `ν₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Disc {
    Plus,
    Minus,
}

impl Disc {
    pub fn sign<T: Scalar>(self) -> T {
        match self {
            Disc::Plus => T::one(),
            Disc::Minus => -T::one(),
        }
    }

    pub fn of<T: Scalar>(nu3: T) -> Self {
        if nu3 >= T::zero() {
            Disc::Plus
        } else {
            Disc::Minus
        }
    }
}

impl fmt::Display for Disc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Disc::Plus => "+",
            Disc::Minus => "-",
        })
    }
}

/// A point `(ν₁, ν₂, ν₃, ν₄)` of the unit 3-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint<T> {
    pub nu4: [T; 4],
    pub disc: Disc,
}

fn norm4<T: Real>(v: &[T; 4]) -> T {
    v.iter().fold(T::zero(), |a, &x| a.hypot(x))
}

impl<T: Real> SpherePoint<T> {
    fn unit_tol() -> T {
        T::lit(1e-12).max(T::lit(16.0) * T::epsilon())
    }

    /// Accepts `nu4` if its norm is 1 to within `1e−12` (or a few ulps for
    /// single precision).
    pub fn new(nu4: [T; 4]) -> Result<Self> {
        if !nu4.iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("non-finite sphere coordinates".into()));
        }
        let n = norm4(&nu4);
        if (n - T::one()).abs() > Self::unit_tol() {
            return Err(Error::Domain(format!("point has norm {n}, not 1")));
        }
        Ok(Self {
            nu4,
            disc: Disc::of(nu4[2]),
        })
    }

    /// Radial projection of a nonzero vector onto the sphere.
    pub fn normalize(v: [T; 4]) -> Result<Self> {
        let n = norm4(&v);
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::Domain(
                "cannot normalize a zero or non-finite vector".into(),
            ));
        }
        let nu4 = v.map(|x| x / n);
        Ok(Self {
            nu4,
            disc: Disc::of(nu4[2]),
        })
    }

    /// Chart coordinates `(ν₁, ν₂, ν₄)`.
    pub fn chart(&self) -> [T; 3] {
        [self.nu4[0], self.nu4[1], self.nu4[3]]
    }

    /// Inverse chart on the given disc; `None` outside the unit ball.
    pub fn from_chart(disc: Disc, c: [T; 3]) -> Option<Self> {
        let r2 = T::one() - c[0] * c[0] - c[1] * c[1] - c[2] * c[2];
        if r2 < -Self::unit_tol() {
            return None;
        }
        let nu3 = disc.sign::<T>() * r2.max(T::zero()).sqrt();
        Some(Self {
            nu4: [c[0], c[1], nu3, c[2]],
            disc,
        })
    }

    /// `(ν₁, ν₂, ν₃, ν₄, ν₅)`.
    pub fn with_nu5(&self, nu5: T) -> ReducedCoords<T> {
        ReducedCoords::from_sphere(self.nu4, nu5)
    }

    pub fn distance(&self, other: &[T; 4]) -> T {
        let d = [0, 1, 2, 3].map(|k| self.nu4[k] - other[k]);
        norm4(&d)
    }
}

/// Roots `α ± iβ, ±iγ` of a quartic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootTriple<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
}

/// The monic quartic with roots `α ± iβ, ±iγ`:
/// ascending `((α²+β²)γ², −2αγ², α²+β²+γ², −2α, 1)`.
pub fn psi<T: Scalar>(r: &RootTriple<T>) -> PolyCoeffs<T> {
    let (a, b, g) = (r.alpha, r.beta, r.gamma);
    let two = T::int(2);
    let ab = a * a + b * b;
    let g2 = g * g;
    PolyCoeffs::from_ascending([ab * g2, -two * a * g2, ab + g2, -two * a, T::one()])
}

/// `f(a) = a₀a₃² + a₄a₁² − a₁a₂a₃`, whose zero set is the image of [`psi`].
pub fn f_surface<T: Scalar>(p: &PolyCoeffs<T>) -> T {
    let [a0, a1, a2, a3, a4] = p.ascending();
    a0 * a3 * a3 + a4 * a1 * a1 - a1 * a2 * a3
}

/// Characteristic polynomial of `ℋᵣ(ν)`.
pub fn phi_coeffs<T: Scalar>(nu: &ReducedCoords<T>) -> PolyCoeffs<T> {
    char_poly(&homogeneous_reduced(nu))
}

/// `F(ν) = (ν₁² − ν₂²)(ν₁² + ν₄²) + ν₁²ν₃²`.
pub fn f_critical<T: Scalar>(nu: &[T; 4]) -> T {
    let [n1, n2, n3, n4] = nu.map(|v| v * v);
    (n1 - n2) * (n1 + n4) + n1 * n3
}

/// `f(φ(ν)) = −64 (ν₁² + ν₅²) F(ν₁..ν₄)`.
pub fn g_full<T: Scalar>(nu: &ReducedCoords<T>) -> T {
    let n = nu.nu;
    -T::int(64) * (n[0] * n[0] + n[4] * n[4]) * f_critical(&nu.nu4())
}

/// `ν₁² − 2ν₁²ν₂² − ν₂²ν₄²`, equal to `F` on the unit sphere.
pub fn g_sphere<T: Scalar>(nu: &[T; 4]) -> T {
    g_chart(&[nu[0], nu[1], nu[3]])
}

/// [`g_sphere`] in chart coordinates `(ν₁, ν₂, ν₄)`.
pub fn g_chart<T: Scalar>(c: &[T; 3]) -> T {
    let (x2, y2, z2) = (c[0] * c[0], c[1] * c[1], c[2] * c[2]);
    x2 - T::int(2) * x2 * y2 - y2 * z2
}

/// Gradient of [`f_critical`].
pub fn grad_f<T: Scalar>(nu: &[T; 4]) -> [T; 4] {
    let [v1, v2, v3, v4] = *nu;
    let two = T::int(2);
    let (s1, s2, s3, s4) = (v1 * v1, v2 * v2, v3 * v3, v4 * v4);
    [
        two * v1 * (two * s1 + s4 - s2 + s3),
        -two * v2 * (s1 + s4),
        two * s1 * v3,
        two * v4 * (s1 - s2),
    ]
}

/// Hessian of [`f_critical`].
pub fn hessian_f<T: Scalar>(nu: &[T; 4]) -> [[T; 4]; 4] {
    let [v1, v2, v3, v4] = *nu;
    let (two, four) = (T::int(2), T::int(4));
    let (s1, s2, s3, s4) = (v1 * v1, v2 * v2, v3 * v3, v4 * v4);
    let h11 = T::int(12) * s1 + two * (s4 - s2 + s3);
    let h12 = -four * v1 * v2;
    let h13 = four * v1 * v3;
    let h14 = four * v1 * v4;
    let h22 = -two * (s1 + s4);
    let h24 = -four * v2 * v4;
    let h33 = two * s1;
    let h44 = two * (s1 - s2);
    let z = T::zero();
    [
        [h11, h12, h13, h14],
        [h12, h22, z, h24],
        [h13, z, h33, z],
        [h14, h24, z, h44],
    ]
}

/// The conoid parameterization of the critical surface on disc `D±`:
/// `(ν₁, ν₂, ν₄) = (½√2 s cos t, ½√2 cos t, s sin t)` with `ν₃` completing
/// the unit norm with the disc's sign.
pub fn param_phi<T: Real>(disc: Disc, s: T, t: T) -> Result<SpherePoint<T>> {
    if !(s >= -T::one() && s <= T::one() && t >= T::zero() && t <= T::TAU()) {
        return Err(Error::Domain(format!(
            "(s, t) = ({s}, {t}) outside [-1,1]×[0,2π]"
        )));
    }
    let (st, ct) = t.sin_cos();
    let h = T::FRAC_1_SQRT_2();
    let half = T::lit(0.5);
    // 1 − ν₁² − ν₂² − ν₄² factors as (1 − s²)(1 − cos²t / 2).
    let nu3 = disc.sign::<T>() * ((T::one() - s * s) * (T::one() - half * ct * ct)).sqrt();
    Ok(SpherePoint {
        nu4: [h * s * ct, h * ct, nu3, s * st],
        disc,
    })
}

/// A preimage `(disc, s, t)` under [`param_phi`] of a point of the critical
/// surface, or `None` if the point has no preimage within `tol`. Points on
/// `ν₂ = 0` have two preimages; the one with `t = π/2` is returned.
pub fn invert_phi<T: Real>(p: &SpherePoint<T>, tol: T) -> Option<(Disc, T, T)> {
    let [v1, v2, _, v4] = p.nu4;
    let ct = T::SQRT_2() * v2;
    if ct.abs() > T::one() + tol {
        return None;
    }
    let ct = ct.max(-T::one()).min(T::one());
    let (s, t) = if v2.abs() <= tol {
        if v1.abs() > tol {
            return None;
        }
        (v4, T::FRAC_PI_2())
    } else {
        let s = v1 / v2;
        let st_mag = (T::one() - ct * ct).max(T::zero()).sqrt();
        // sin t carries the sign of ν₄ / s. On s = 0 both signs give the
        // same point; take t ∈ [0, π].
        let st = if s == T::zero() {
            st_mag
        } else if v4 == T::zero() {
            T::zero()
        } else {
            (v4 * s).signum() * st_mag
        };
        let mut t = st.atan2(ct);
        if t < T::zero() {
            t = t + T::TAU();
        }
        (s, t)
    };
    if s.abs() > T::one() + tol {
        return None;
    }
    let s = s.max(-T::one()).min(T::one());
    let q = param_phi(p.disc, s, t).ok()?;
    (p.distance(&q.nu4) <= tol.sqrt().max(tol)).then_some((p.disc, s, t))
}

/// Singularity type of the critical surface at the special points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalFormKind {
    /// `ξ² − η²ζ² = 0` at `ν₁ = ν₂ = ν₄ = 0`.
    SelfTangency,
    /// `ξ²η − ζ² = 0` at `ν₁ = ν₄ = 0`, `ν₂ = ±½√2`.
    Umbrella,
}

impl fmt::Display for NormalFormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SelfTangency => "self-tangency",
            Self::Umbrella => "umbrella",
        })
    }
}

/// One zero-set sample of a normal-form check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalFormSample<T> {
    /// Local chart coordinates `(x, y, z)` centred at the singular point.
    pub local: [T; 3],
    /// Normal-form coordinates `(ξ, η, ζ)`.
    pub normal: [T; 3],
    pub residual: T,
}

/// Result of [`normal_form_residual`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalFormReport<T> {
    pub kind: NormalFormKind,
    pub center: SpherePoint<T>,
    pub radius: T,
    pub samples: Vec<NormalFormSample<T>>,
    pub max_residual: T,
    /// Max of `|N(ξ, η, ζ) − G|` over a grid filling the ball, with `N` the
    /// normal form: the coordinate change carries `G` onto `N` identically,
    /// not only on the zero set.
    pub identity_residual: T,
}

/// Lines per axis of the sampling grid and scan steps per line.
const NF_LINES: usize = 24;
const NF_SCAN: usize = 64;

struct Chart<T> {
    kind: NormalFormKind,
    /// `ν₂ = c₂ + σ y` for the umbrella, `σ = −1` at `ν₂ = +½√2`.
    c2: T,
    sigma: T,
}

impl<T: Real> Chart<T> {
    fn global(&self, l: [T; 3]) -> [T; 3] {
        [l[0], self.c2 + self.sigma * l[1], l[2]]
    }

    fn normal(&self, l: [T; 3]) -> [T; 3] {
        let [x, y, z] = l;
        let two = T::lit(2.0);
        let h = T::FRAC_1_SQRT_2();
        match self.kind {
            NormalFormKind::SelfTangency => [x * (T::one() - two * y * y).sqrt(), y, z],
            NormalFormKind::Umbrella => [
                two * x * (T::one() - h * y).sqrt(),
                h * y,
                z * (T::lit(0.5) - T::SQRT_2() * y + y * y).sqrt(),
            ],
        }
    }

    fn form(&self, n: [T; 3]) -> T {
        let [xi, eta, zeta] = n;
        match self.kind {
            NormalFormKind::SelfTangency => xi * xi - eta * eta * zeta * zeta,
            NormalFormKind::Umbrella => xi * xi * eta - zeta * zeta,
        }
    }

    fn g(&self, l: [T; 3]) -> T {
        g_chart(&self.global(l))
    }

    /// Smallest `|y|` at which the coordinate change degenerates.
    fn singular_radius(&self) -> T {
        match self.kind {
            NormalFormKind::SelfTangency => T::FRAC_1_SQRT_2(),
            NormalFormKind::Umbrella => T::FRAC_1_SQRT_2(),
        }
    }
}

/// Checks the local normal form of the critical surface at a singular point.
///
/// Zero-set samples are found on chart lines parallel to the `x` axis
/// through a grid of `(y, z)` offsets: `G` is scanned for sign changes and
/// each bracket is bisected to `1e−14`. Every sample within `radius` of the
/// centre is mapped through the explicit coordinate change and the normal
/// form evaluated there.
pub fn normal_form_residual<T: Real>(
    kind: NormalFormKind,
    center: &SpherePoint<T>,
    radius: T,
) -> Result<NormalFormReport<T>> {
    let tol = T::lit(1e-9);
    let [c1, c2, c4] = center.chart();
    if !(radius > T::zero() && radius <= T::lit(0.1)) {
        return Err(Error::Domain(format!("radius {radius} outside (0, 0.1]")));
    }
    if c1.abs() > tol || c4.abs() > tol {
        return Err(Error::Domain(
            "centre is not a singular point of the surface".into(),
        ));
    }
    let h = T::FRAC_1_SQRT_2();
    let chart = match kind {
        NormalFormKind::SelfTangency if c2.abs() <= tol => Chart {
            kind,
            c2: T::zero(),
            sigma: T::one(),
        },
        NormalFormKind::Umbrella if (c2.abs() - h).abs() <= tol => Chart {
            kind,
            c2: h * c2.signum(),
            sigma: -c2.signum(),
        },
        _ => {
            return Err(Error::Domain(format!(
                "centre does not carry a {kind} point"
            )));
        }
    };
    if radius >= chart.singular_radius() {
        return Err(Error::Domain(
            "coordinate change singular inside radius".into(),
        ));
    }

    let n = T::from_usize(NF_LINES).unwrap();
    let m = T::from_usize(NF_SCAN).unwrap();
    let two = T::lit(2.0);
    let bisect_tol = T::lit(1e-14);
    let mut samples = Vec::new();
    let mut identity_residual = T::zero();
    for iy in 0..=NF_LINES {
        for iz in 0..=NF_LINES {
            let y = radius * (two * T::from_usize(iy).unwrap() / n - T::one());
            let z = radius * (two * T::from_usize(iz).unwrap() / n - T::one());
            if y.hypot(z) > radius {
                continue;
            }
            let half = (radius * radius - y * y - z * z).sqrt();
            let at = |x: T| chart.g([x, y, z]);
            let mut prev_x = -half;
            let mut prev_g = at(prev_x);
            for k in 1..=NF_SCAN {
                let x = -half + two * half * T::from_usize(k).unwrap() / m;
                let gx = at(x);
                let ident = (chart.form(chart.normal([x, y, z])) - gx).abs();
                identity_residual = identity_residual.max(ident);
                if prev_g == T::zero() || prev_g.signum() != gx.signum() && gx != T::zero() {
                    let (mut lo, mut hi, mut glo) = (prev_x, x, prev_g);
                    if glo != T::zero() {
                        while hi - lo > bisect_tol {
                            let mid = (lo + hi) * T::lit(0.5);
                            let gm = at(mid);
                            if gm.signum() == glo.signum() {
                                lo = mid;
                                glo = gm;
                            } else {
                                hi = mid;
                            }
                        }
                    }
                    let xr = if glo == T::zero() {
                        lo
                    } else {
                        (lo + hi) * T::lit(0.5)
                    };
                    let local = [xr, y, z];
                    let normal = chart.normal(local);
                    samples.push(NormalFormSample {
                        local,
                        normal,
                        residual: chart.form(normal).abs(),
                    });
                }
                prev_x = x;
                prev_g = gx;
            }
        }
    }
    let max_residual = samples.iter().fold(T::zero(), |a, s| a.max(s.residual));
    Ok(NormalFormReport {
        kind,
        center: *center,
        radius,
        samples,
        max_residual,
        identity_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn psi_at_ones() {
        let p = psi(&RootTriple {
            alpha: 1i64,
            beta: 1,
            gamma: 1,
        });
        assert_eq!(p.ascending(), [2, -2, 3, -2, 1]);
        assert_eq!(f_surface(&p), 0);
    }

    #[test]
    fn psi_without_alpha_is_even() {
        let p = psi(&RootTriple {
            alpha: 0i64,
            beta: 3,
            gamma: 2,
        });
        assert_eq!(p.ascending(), [36, 0, 13, 0, 1]);
    }

    #[test]
    fn f_surface_hand_values() {
        assert_eq!(
            f_surface(&PolyCoeffs::<i64>::from_ascending([1, 0, 0, 0, 1])),
            0
        );
        assert_eq!(
            f_surface(&PolyCoeffs::<i64>::from_ascending([0, 1, 0, 1, 1])),
            1
        );
    }

    #[test]
    fn g_full_hand_values() {
        assert_eq!(g_full(&ReducedCoords::new([1i64, 0, 0, 0, 1])), -128);
        assert_eq!(g_full(&ReducedCoords::new([0i64, 3, 5, 0, 2])), 0);
        assert_eq!(g_full(&ReducedCoords::new([0i64, 0, 5, 7, 2])), 0);
    }

    #[test]
    fn f_critical_hand_values() {
        assert_eq!(f_critical(&[1i64, 0, 0, 0]), 1);
        assert_eq!(f_critical(&[0i64, 0, 3, 4]), 0);
        assert_eq!(grad_f(&[1i64, 0, 0, 0]), [4, 0, 0, 0]);
    }

    #[test]
    fn umbrella_point_parameter() {
        let p = param_phi(Disc::Plus, 0.0, 0.0).unwrap();
        let h = FRAC_1_SQRT_2;
        assert!(p.distance(&[0.0, h, h, 0.0]) < 1e-15);
    }

    #[test]
    fn s1_representative() {
        let p = param_phi(Disc::Plus, 0.5, FRAC_PI_4).unwrap();
        let want = [0.25, 0.5, 0.75, 2f64.sqrt() / 4.0];
        assert!(p.distance(&want) < 1e-15);
    }

    #[test]
    fn param_domain() {
        assert!(param_phi(Disc::Plus, 1.5, 0.0).is_err());
        assert!(param_phi(Disc::Minus, 0.0, -0.1).is_err());
        assert!(param_phi(Disc::Minus, -1.0, 2.0 * PI).is_ok());
    }

    #[test]
    fn inversion_round_trip() {
        for disc in [Disc::Plus, Disc::Minus] {
            for &s in &[-0.9f64, -0.3, 0.4, 0.8] {
                for &t in &[0.3f64, 1.2, 2.5, 4.0, 5.9] {
                    let p = param_phi(disc, s, t).unwrap();
                    let (d, s2, t2) = invert_phi(&p, 1e-12).unwrap();
                    assert_eq!(d, disc);
                    assert!(
                        (s - s2).abs() < 1e-12 && (t - t2).abs() < 1e-12,
                        "{s} {t} -> {s2} {t2}"
                    );
                }
            }
        }
        // The handle ν₂² > ½ has no preimage.
        let h = SpherePoint::new([0.0, 0.8, 0.6, 0.0]).unwrap();
        assert!(invert_phi(&h, 1e-12).is_none());
        let q = param_phi(Disc::Plus, 0.6, FRAC_PI_2).unwrap();
        assert!(invert_phi(&q, 1e-12).is_some());
    }

    #[test]
    fn chart_round_trip() {
        let p = SpherePoint::new([0.5, -0.5, -0.5, 0.5]).unwrap();
        assert_eq!(p.disc, Disc::Minus);
        let q = SpherePoint::from_chart(p.disc, p.chart()).unwrap();
        assert!(p.distance(&q.nu4) < 1e-15);
        assert!(SpherePoint::new([1.0, 1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn normal_form_kind_mismatch() {
        let p5 = SpherePoint::new([0.0, 0.0, 1.0, 0.0]).unwrap();
        assert!(normal_form_residual(NormalFormKind::Umbrella, &p5, 0.05).is_err());
        assert!(normal_form_residual(NormalFormKind::SelfTangency, &p5, 0.5).is_err());
        let r = normal_form_residual(NormalFormKind::SelfTangency, &p5, 0.05).unwrap();
        assert!(!r.samples.is_empty());
        assert!(r.max_residual < 1e-12);
    }
}
