//! Spectra of unfolding matrices and their eigenvalue configurations.
//!
//! Eigenvalues come from the characteristic polynomial and the quartic
//! solver. Roots within the cluster tolerance are merged to their mean,
//! which turns the `O(√ε)` splitting of a numerically double root back into
//! an `O(ε)` accurate double root. Multiplicity-two pairs are then split into
//! semisimple and non-semisimple by the rank of the real quadratic factor
//! evaluated at `A`.

use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{char_poly, quartic_roots, singular_values, Mat4};
use crate::scalar::Real;

/// Default merge tolerance for root clustering.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;
/// Zero-real-part tolerance at exact representatives.
pub const EXACT_TOL: f64 = 1e-9;
/// Zero-real-part tolerance at sampled points.
pub const SAMPLED_TOL: f64 = 1e-6;

/// Eigenvalues of a 4×4 real matrix with their multiplicity structure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum<T> {
    pub eigenvalues: [Complex<T>; 4],
    /// Partition of `0..4` into groups of equal eigenvalues.
    pub clusters: Vec<Vec<usize>>,
    pub max_real_part: T,
    /// Set only when a double imaginary pair is present.
    pub semisimple_double_pair: Option<bool>,
}

impl<T: Real> Spectrum<T> {
    pub fn min_real_part(&self) -> T {
        self.eigenvalues
            .iter()
            .fold(T::infinity(), |m, z| m.min(z.re))
    }

    /// Size of the cluster holding eigenvalue `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.clusters
            .iter()
            .find(|c| c.contains(&k))
            .map_or(1, Vec::len)
    }

    /// Eigenvalues with positive imaginary part, one per conjugate pair,
    /// with multiplicity.
    pub fn upper(&self) -> Vec<(usize, Complex<T>)> {
        let mut out: Vec<(usize, Complex<T>)> = self
            .eigenvalues
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, z)| z.im > T::zero())
            .collect();
        out.sort_by(|a, b| a.1.im.partial_cmp(&b.1.im).unwrap());
        out
    }
}

/// Eigenvalue configuration codes. `γ` is a non-imaginary complex pair with
/// the sign of its real part as subscript, `β` an imaginary pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConfigCode {
    /// Two distinct stable pairs.
    #[serde(rename = "gm1gm2")]
    GammaMinusGammaMinus,
    /// Two distinct unstable pairs.
    #[serde(rename = "gp1gp2")]
    GammaPlusGammaPlus,
    #[serde(rename = "gmgp")]
    GammaMinusGammaPlus,
    #[serde(rename = "bgm")]
    BetaGammaMinus,
    #[serde(rename = "bgp")]
    BetaGammaPlus,
    /// Two distinct imaginary pairs.
    #[serde(rename = "b1b2")]
    BetaOneBetaTwo,
    /// Semisimple double imaginary pair.
    #[serde(rename = "bb")]
    BetaBeta,
    /// Non-semisimple double imaginary pair.
    #[serde(rename = "b2")]
    BetaSquared,
    /// Coincident semisimple stable pairs.
    #[serde(rename = "gmgm")]
    GammaMinusDouble,
    /// Coincident semisimple unstable pairs.
    #[serde(rename = "gpgp")]
    GammaPlusDouble,
    /// Coincident non-semisimple stable pairs.
    #[serde(rename = "gm2")]
    GammaMinusSquared,
    /// Coincident non-semisimple unstable pairs.
    #[serde(rename = "gp2")]
    GammaPlusSquared,
}

impl ConfigCode {
    pub const ALL: [ConfigCode; 12] = [
        Self::GammaMinusGammaMinus,
        Self::GammaPlusGammaPlus,
        Self::GammaMinusGammaPlus,
        Self::BetaGammaMinus,
        Self::BetaGammaPlus,
        Self::BetaOneBetaTwo,
        Self::BetaBeta,
        Self::BetaSquared,
        Self::GammaMinusDouble,
        Self::GammaPlusDouble,
        Self::GammaMinusSquared,
        Self::GammaPlusSquared,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Self::GammaMinusGammaMinus => "γ₋₁γ₋₂",
            Self::GammaPlusGammaPlus => "γ₊₁γ₊₂",
            Self::GammaMinusGammaPlus => "γ₋γ₊",
            Self::BetaGammaMinus => "βγ₋",
            Self::BetaGammaPlus => "βγ₊",
            Self::BetaOneBetaTwo => "β₁β₂",
            Self::BetaBeta => "ββ",
            Self::BetaSquared => "β²",
            Self::GammaMinusDouble => "γ₋γ₋",
            Self::GammaPlusDouble => "γ₊γ₊",
            Self::GammaMinusSquared => "γ₋²",
            Self::GammaPlusSquared => "γ₊²",
        }
    }

    /// ASCII tag, also the serialized form.
    pub fn tag(self) -> &'static str {
        match self {
            Self::GammaMinusGammaMinus => "gm1gm2",
            Self::GammaPlusGammaPlus => "gp1gp2",
            Self::GammaMinusGammaPlus => "gmgp",
            Self::BetaGammaMinus => "bgm",
            Self::BetaGammaPlus => "bgp",
            Self::BetaOneBetaTwo => "b1b2",
            Self::BetaBeta => "bb",
            Self::BetaSquared => "b2",
            Self::GammaMinusDouble => "gmgm",
            Self::GammaPlusDouble => "gpgp",
            Self::GammaMinusSquared => "gm2",
            Self::GammaPlusSquared => "gp2",
        }
    }

    /// Number of eigenvalues with negative real part.
    pub fn stable_count(self) -> u8 {
        match self {
            Self::GammaMinusGammaMinus | Self::GammaMinusDouble | Self::GammaMinusSquared => 4,
            Self::GammaMinusGammaPlus | Self::BetaGammaMinus => 2,
            _ => 0,
        }
    }

    /// Number of eigenvalues on the imaginary axis.
    pub fn imaginary_count(self) -> u8 {
        match self {
            Self::BetaGammaMinus | Self::BetaGammaPlus => 2,
            Self::BetaOneBetaTwo | Self::BetaBeta | Self::BetaSquared => 4,
            _ => 0,
        }
    }

    /// Collapses the coincident-pair variants onto the generic code of the
    /// open region containing them.
    pub fn generic(self) -> Self {
        match self {
            Self::GammaMinusDouble | Self::GammaMinusSquared => Self::GammaMinusGammaMinus,
            Self::GammaPlusDouble | Self::GammaPlusSquared => Self::GammaPlusGammaPlus,
            c => c,
        }
    }
}

impl fmt::Display for ConfigCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A configuration code together with the number of stable eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EigConfig {
    pub code: ConfigCode,
    pub stable_count: u8,
}

impl From<ConfigCode> for EigConfig {
    fn from(code: ConfigCode) -> Self {
        Self {
            code,
            stable_count: code.stable_count(),
        }
    }
}

impl fmt::Display for EigConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.code.fmt(f)
    }
}

fn cluster<T: Real>(roots: &[Complex<T>; 4], cluster_tol: T) -> Vec<Vec<usize>> {
    let scale = T::one() + roots.iter().fold(T::zero(), |m, z| m.max(z.norm()));
    let mut parent = [0usize, 1, 2, 3];
    fn find(p: &mut [usize; 4], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if (roots[i] - roots[j]).norm() <= cluster_tol * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let rep: [usize; 4] = std::array::from_fn(|i| find(&mut parent, i));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..4 {
        match groups.iter_mut().find(|g| rep[g[0]] == rep[i]) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    groups
}

/// Evaluates the `d`-th derivative of a descending-coefficient polynomial.
fn eval_derivative<T: Real>(a: &[T; 5], d: usize, z: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (k, &c) in a.iter().enumerate() {
        let power = 4 - k;
        if power < d {
            break;
        }
        let falling = (power + 1 - d..=power).product::<usize>().max(1);
        acc = acc * z + c * T::from_usize(falling).unwrap();
    }
    acc
}

/// Refines a root of multiplicity `m` by Newton steps on `p^(m−1)`, which
/// has a simple root there. Steps that do not decrease `|p^(m−1)|` are
/// rejected.
fn refine_multiple<T: Real>(a: &[T; 5], m: usize, mut z: Complex<T>) -> Complex<T> {
    let mut fz = eval_derivative(a, m - 1, z).norm();
    for _ in 0..4 {
        let d = eval_derivative(a, m, z);
        if fz == T::zero() || d.norm() == T::zero() {
            break;
        }
        let cand = z - eval_derivative(a, m - 1, z) / d;
        let fc = eval_derivative(a, m - 1, cand).norm();
        if fc < fz {
            z = cand;
            fz = fc;
        } else {
            break;
        }
    }
    z
}

fn is_zero_real<T: Real>(z: Complex<T>, tol: T) -> bool {
    z.re.abs() <= tol * (T::one() + z.norm())
}

/// Eigenvalues of `A` with the default cluster tolerance.
pub fn spectrum<T: Real>(a: &Mat4<T>, tol: T) -> Result<Spectrum<T>> {
    spectrum_with(a, tol, T::lit(DEFAULT_CLUSTER_TOL))
}

/// Eigenvalues of `A`, clustered with `cluster_tol`; `tol` bounds both the
/// root residuals and the zero-real-part test.
pub fn spectrum_with<T: Real>(a: &Mat4<T>, tol: T, cluster_tol: T) -> Result<Spectrum<T>> {
    let p = char_poly(a);
    let root_tol = tol.max(T::lit(64.0) * T::epsilon());
    let rs = quartic_roots(&p, root_tol)?;
    let clusters = cluster(&rs.roots, cluster_tol);
    let mut ev = rs.roots;
    for g in &clusters {
        let n = T::from_usize(g.len()).unwrap();
        let mut mean = g
            .iter()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &k| acc + ev[k])
            / n;
        if g.len() > 1 {
            mean = refine_multiple(&p.a, g.len(), mean);
        }
        for &k in g {
            ev[k] = mean;
        }
    }
    let max_real_part = ev.iter().fold(T::neg_infinity(), |m, z| m.max(z.re));

    let mut semisimple_double_pair = None;
    for g in &clusters {
        let z = ev[g[0]];
        if g.len() == 2 && z.im > T::zero() && is_zero_real(z, tol) {
            semisimple_double_pair = Some(is_semisimple_double_pair(a, z.im, tol)?);
        }
    }
    Ok(Spectrum {
        eigenvalues: ev,
        clusters,
        max_real_part,
        semisimple_double_pair,
    })
}

/// Rank of the real quadratic factor `A² − 2 Re(λ) A + |λ|² I`, with
/// singular values cut at `tol` times the natural scale `‖A‖² + |λ|²`.
pub fn pair_rank<T: Real>(a: &Mat4<T>, lambda: Complex<T>, tol: T) -> usize {
    let q = *a * *a - a.scale(lambda.re + lambda.re) + Mat4::identity().scale(lambda.norm_sqr());
    let scale = a.frobenius_inner(a) + lambda.norm_sqr();
    singular_values(&q)
        .iter()
        .filter(|&&s| s > tol * scale)
        .count()
}

/// Excess rank of the quadratic factor of a pair of algebraic multiplicity
/// `m`: zero iff the pair is semisimple. For a simple pair (`m = 1`) the
/// factor always has rank 2.
pub fn jordan_defect<T: Real>(a: &Mat4<T>, lambda: Complex<T>, m: usize, tol: T) -> isize {
    pair_rank(a, lambda, tol) as isize - (4 - 2 * m as isize)
}

/// Whether a double root `λ, λ̄` of `A` is semisimple. Rank 0 of the
/// quadratic factor means semisimple, rank 2 a nilpotent part of height 2.
pub fn is_semisimple_double_root<T: Real>(a: &Mat4<T>, lambda: Complex<T>, tol: T) -> Result<bool> {
    match pair_rank(a, lambda, tol) {
        0 => Ok(true),
        2 => Ok(false),
        r => Err(Error::RankAnomalous(r)),
    }
}

/// Whether a double imaginary pair `±iβ` of `A` is semisimple, by the rank
/// of `A² + β² I`.
pub fn is_semisimple_double_pair<T: Real>(a: &Mat4<T>, beta: T, tol: T) -> Result<bool> {
    is_semisimple_double_root(a, Complex::new(T::zero(), beta), tol)
}

#[derive(Clone, Copy, PartialEq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

/// Eigenvalue configuration of `A` with the default cluster tolerance.
pub fn classify_configuration<T: Real>(a: &Mat4<T>, tol: T) -> Result<EigConfig> {
    classify_spectrum(a, &spectrum(a, tol)?, tol)
}

/// Eigenvalue configuration of `A` from an already computed spectrum.
pub fn classify_spectrum<T: Real>(a: &Mat4<T>, sp: &Spectrum<T>, tol: T) -> Result<EigConfig> {
    for z in &sp.eigenvalues {
        if z.im.abs() <= tol * (T::one() + z.norm()) {
            return Err(Error::UnresolvedConfiguration(format!(
                "real eigenvalue {:e}: outside the neighbourhood of L",
                z.re
            )));
        }
    }
    let up = sp.upper();
    if up.len() != 2 {
        return Err(Error::UnresolvedConfiguration(
            "eigenvalues not in conjugate pairs".into(),
        ));
    }
    let sign = |z: Complex<T>| {
        if is_zero_real(z, tol) {
            Sign::Zero
        } else if z.re < T::zero() {
            Sign::Neg
        } else {
            Sign::Pos
        }
    };
    let (i0, z0) = up[0];
    let (_, z1) = up[1];
    let double = sp.multiplicity(i0) == 2;
    use ConfigCode::*;
    let code = match (sign(z0), sign(z1)) {
        (Sign::Zero, Sign::Zero) if double => match sp.semisimple_double_pair {
            Some(true) => BetaBeta,
            Some(false) => BetaSquared,
            None => {
                if is_semisimple_double_pair(a, z0.im, tol)? {
                    BetaBeta
                } else {
                    BetaSquared
                }
            }
        },
        (Sign::Zero, Sign::Zero) => BetaOneBetaTwo,
        (Sign::Zero, Sign::Neg) | (Sign::Neg, Sign::Zero) => BetaGammaMinus,
        (Sign::Zero, Sign::Pos) | (Sign::Pos, Sign::Zero) => BetaGammaPlus,
        (Sign::Neg, Sign::Pos) | (Sign::Pos, Sign::Neg) => GammaMinusGammaPlus,
        (s, _) if double => {
            let ss = is_semisimple_double_root(a, z0, tol)?;
            match (s == Sign::Neg, ss) {
                (true, true) => GammaMinusDouble,
                (true, false) => GammaMinusSquared,
                (false, true) => GammaPlusDouble,
                (false, false) => GammaPlusSquared,
            }
        }
        (Sign::Neg, _) => GammaMinusGammaMinus,
        _ => GammaPlusGammaPlus,
    };
    Ok(code.into())
}

/// Number of eigenvalues with real part below `−tol (1 + |λ|)`.
pub fn stable_count<T: Real>(sp: &Spectrum<T>, tol: T) -> u8 {
    sp.eigenvalues
        .iter()
        .filter(|z| z.re < -tol * (T::one() + z.norm()))
        .count() as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{basis_m, homogeneous_reduced, resonant_l, ReducedCoords};

    fn h(nu: [f64; 5]) -> Mat4<f64> {
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
    }

    #[test]
    fn doubled_one_plus_i() {
        let sp = spectrum(&h([1.0, 0.0, 0.0, 0.0, 1.0]), 1e-9).unwrap();
        assert!((sp.max_real_part - 1.0).abs() < 1e-12);
        assert!(sp
            .eigenvalues
            .iter()
            .all(|z| (z.re - 1.0).abs() < 1e-12 && (z.im.abs() - 1.0).abs() < 1e-12));
        assert_eq!(sp.semisimple_double_pair, None);
        assert_eq!(
            classify_configuration(&h([1.0, 0.0, 0.0, 0.0, 1.0]), 1e-9)
                .unwrap()
                .code,
            ConfigCode::GammaPlusDouble
        );
    }

    #[test]
    fn l_is_beta_beta() {
        let c = classify_configuration(&resonant_l::<f64>(), 1e-9).unwrap();
        assert_eq!(c.code, ConfigCode::BetaBeta);
        assert_eq!(c.stable_count, 0);
    }

    #[test]
    fn nilpotent_perturbations() {
        let l = resonant_l::<f64>();
        let n_plus = (basis_m::<f64>(4) + basis_m(6)).scale(0.5);
        let n_minus = (basis_m::<f64>(4) - basis_m(6)).scale(0.5);
        assert!(!is_semisimple_double_pair(&(l + n_plus), 1.0, 1e-9).unwrap());
        assert!(!is_semisimple_double_pair(&(l + n_minus), 1.0, 1e-9).unwrap());
        assert!(is_semisimple_double_pair(&l, 1.0, 1e-9).unwrap());
        assert_eq!(
            classify_configuration(&(l + n_plus), 1e-9).unwrap().code,
            ConfigCode::BetaSquared
        );
    }

    #[test]
    fn umbrella_with_unit_nu5() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let c = classify_configuration(&h([0.0, s, s, 0.0, 1.0]), 1e-9).unwrap();
        assert_eq!(c.code, ConfigCode::BetaSquared);
    }

    #[test]
    fn stable_coincident_pairs() {
        let c = classify_configuration(&h([-1.0, 0.0, 0.0, 0.0, 2.0]), 1e-9).unwrap();
        assert_eq!(c.code, ConfigCode::GammaMinusDouble);
        assert_eq!(c.stable_count, 4);
        assert_eq!(c.code.generic(), ConfigCode::GammaMinusGammaMinus);
    }

    #[test]
    fn distinct_imaginary_pairs() {
        let c = classify_configuration(&h([0.0, 0.0, 0.0, 1.0, 2.0]), 1e-9).unwrap();
        assert_eq!(c.code, ConfigCode::BetaOneBetaTwo);
    }

    #[test]
    fn real_eigenvalues_are_rejected() {
        let e = classify_configuration(&Mat4::<f64>::identity(), 1e-9);
        assert!(matches!(e, Err(Error::UnresolvedConfiguration(_))));
    }

    #[test]
    fn serde_tags() {
        for c in ConfigCode::ALL {
            let js = serde_json::to_string(&c).unwrap();
            assert_eq!(js, format!("\"{}\"", c.tag()));
        }
    }
}
