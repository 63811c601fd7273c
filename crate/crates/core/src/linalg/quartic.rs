//! Roots of real quartics: Laguerre iteration with deflation, Newton polish on
//! the undeflated polynomial, and a conjugate-pairing post-pass.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::poly::PolyCoeffs;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Four roots of a quartic with their absolute residuals `|p(rᵢ)|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootSet<T> {
    pub roots: [Complex<T>; 4],
    pub residuals: [T; 4],
}

const MAX_ITER: usize = 100;
const POLISH_STEPS: usize = 3;

/// Horner evaluation of `p`, `p'` and `p''` for descending complex coefficients.
fn eval_derivs<T: Real>(c: &[Complex<T>], x: Complex<T>) -> [Complex<T>; 3] {
    let zero = Complex::new(T::zero(), T::zero());
    let (mut p, mut d1, mut d2) = (c[0], zero, zero);
    for &ck in &c[1..] {
        d2 = d2 * x + d1;
        d1 = d1 * x + p;
        p = p * x + ck;
    }
    [p, d1, d2 + d2]
}

fn laguerre<T: Real>(c: &[Complex<T>], mut x: Complex<T>) -> Complex<T> {
    let n = T::from_usize(c.len() - 1).unwrap();
    let eps = T::epsilon();
    // Fractional steps break the rare limit cycles of plain Laguerre.
    let frac = [0.5, 0.25, 0.75, 0.13, 0.38, 0.62, 0.88, 1.0].map(T::lit);
    for iter in 1..=MAX_ITER {
        let [p, d1, d2] = eval_derivs(c, x);
        if p.norm() == T::zero() {
            return x;
        }
        let g = d1 / p;
        let h = g * g - d2 / p;
        let sq = ((h * n - g * g) * (n - T::one())).sqrt();
        let (gp, gm) = (g + sq, g - sq);
        let den = if gp.norm() >= gm.norm() { gp } else { gm };
        let step = if den.norm() > T::zero() {
            Complex::new(n, T::zero()) / den
        } else {
            let k = T::from_usize(iter).unwrap();
            Complex::from_polar(T::one() + x.norm(), k)
        };
        let next = x - step;
        if (next - x).norm() <= eps * next.norm() {
            return next;
        }
        x = if iter % 10 == 0 {
            x - step * frac[(iter / 10) % frac.len()]
        } else {
            next
        };
    }
    x
}

/// Synthetic division by `(λ − r)`, dropping the remainder.
fn deflate<T: Real>(c: &[Complex<T>], r: Complex<T>) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(c.len() - 1);
    let mut acc = Complex::new(T::zero(), T::zero());
    for &ck in &c[..c.len() - 1] {
        acc = acc * r + ck;
        out.push(acc);
    }
    out
}

/// Guarded Newton steps on the original polynomial: a step is kept only if
/// it reduces `|p|`, so polishing never degrades a root near a multiple one.
fn polish<T: Real>(p: &PolyCoeffs<T>, mut x: Complex<T>) -> Complex<T> {
    let c = p.a.map(|v| Complex::new(v, T::zero()));
    let mut fx = p.eval_complex(x).norm();
    for _ in 0..POLISH_STEPS {
        let [v, d1, _] = eval_derivs(&c, x);
        if d1.norm() == T::zero() || fx == T::zero() {
            break;
        }
        let cand = x - v / d1;
        let fc = p.eval_complex(cand).norm();
        if fc < fx {
            x = cand;
            fx = fc;
        } else {
            break;
        }
    }
    x
}

/// Restores exact conjugate symmetry. Roots are visited by decreasing
/// `|Im|`; each is paired with the root nearest its conjugate unless it is
/// closer to its own conjugate, in which case it is snapped to the real axis.
fn pair_conjugates<T: Real>(roots: &mut [Complex<T>; 4]) {
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| roots[j].im.abs().partial_cmp(&roots[i].im.abs()).unwrap());
    let mut done = [false; 4];
    for &i in &order {
        if done[i] {
            continue;
        }
        done[i] = true;
        let r = roots[i];
        let self_dist = r.im.abs() + r.im.abs();
        let partner = (0..4)
            .filter(|&j| !done[j])
            .map(|j| (j, (roots[j] - r.conj()).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
        match partner {
            Some((j, d)) if d < self_dist => {
                let up = if r.im >= T::zero() { r } else { r.conj() };
                let other = if roots[j].im >= T::zero() {
                    roots[j]
                } else {
                    roots[j].conj()
                };
                let half = T::lit(0.5);
                let m = Complex::new((up.re + other.re) * half, (up.im + other.im) * half);
                roots[i] = m;
                roots[j] = m.conj();
                done[j] = true;
            }
            _ => roots[i] = Complex::new(r.re, T::zero()),
        }
    }
}

/// All four complex roots of `p`, residual-checked: every root satisfies
/// `|p(r)| ≤ tol · Σ|aₖ||r|ᵏ`.
///
/// Multiplicities are not decided here; near-multiple roots come back as
/// tight clusters for the caller to merge.
pub fn quartic_roots<T: Real>(p: &PolyCoeffs<T>, tol: T) -> Result<RootSet<T>> {
    if p.a[0] == T::zero() {
        return Err(Error::DegeneratePolynomial);
    }
    let lead = p.a[0];
    let monic = PolyCoeffs::new(p.a.map(|v| v / lead));
    let mut c: Vec<Complex<T>> = monic
        .a
        .iter()
        .map(|&v| Complex::new(v, T::zero()))
        .collect();
    let zero = Complex::new(T::zero(), T::zero());
    let mut roots = [zero; 4];
    for slot in roots.iter_mut() {
        let r = if c.len() == 2 {
            -c[1] / c[0]
        } else {
            laguerre(&c, zero)
        };
        *slot = r;
        c = deflate(&c, r);
    }
    for r in roots.iter_mut() {
        *r = polish(&monic, *r);
    }
    pair_conjugates(&mut roots);

    let mut residuals = [T::zero(); 4];
    for (k, r) in roots.iter().enumerate() {
        let res = p.eval_complex(*r).norm();
        let bound = tol * p.magnitude_at(*r);
        if !(res <= bound) {
            return Err(Error::ResidualTooLarge {
                residual: res.to_f64().unwrap_or(f64::NAN),
                bound: bound.to_f64().unwrap_or(f64::NAN),
            });
        }
        residuals[k] = res;
    }
    Ok(RootSet { roots, residuals })
}

impl<T: Real> RootSet<T> {
    /// Roots sorted by imaginary part, then real part; a canonical order for
    /// comparisons.
    pub fn sorted(&self) -> [Complex<T>; 4] {
        let mut r = self.roots;
        r.sort_by(|a, b| {
            a.im.partial_cmp(&b.im)
                .unwrap()
                .then(a.re.partial_cmp(&b.re).unwrap())
        });
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    /// Greedy nearest matching distance between two root multisets.
    fn match_dist(a: &[Complex<f64>; 4], b: &[Complex<f64>; 4]) -> f64 {
        let mut used = [false; 4];
        let mut worst: f64 = 0.0;
        for x in a {
            let (j, d) = (0..4)
                .filter(|&j| !used[j])
                .map(|j| (j, (b[j] - x).norm()))
                .min_by(|p, q| p.1.partial_cmp(&q.1).unwrap())
                .unwrap();
            used[j] = true;
            worst = worst.max(d);
        }
        worst
    }

    #[test]
    fn double_imaginary_pair() {
        let rs = quartic_roots(&PolyCoeffs::from_ints([1, 0, 2, 0, 1]), 1e-9).unwrap();
        let want = [c(0., 1.), c(0., -1.), c(0., 1.), c(0., -1.)];
        assert!(match_dist(&rs.roots, &want) < 1e-7);
    }

    #[test]
    fn separated_roots() {
        // (λ² − 2λ + 2)(λ² + 1): roots 1 ± i, ±i.
        let p = PolyCoeffs::from_ints([1, -2, 3, -2, 2]);
        let rs = quartic_roots(&p, 1e-12).unwrap();
        let want = [c(1., 1.), c(1., -1.), c(0., 1.), c(0., -1.)];
        assert!(match_dist(&rs.roots, &want) < 1e-13);
    }

    #[test]
    fn real_roots() {
        let p = PolyCoeffs::from_ints([1, -10, 35, -50, 24]);
        let rs = quartic_roots(&p, 1e-12).unwrap();
        let want = [c(1., 0.), c(2., 0.), c(3., 0.), c(4., 0.)];
        assert!(match_dist(&rs.roots, &want) < 1e-12);
        assert!(rs.roots.iter().all(|r| r.im == 0.0));
    }

    #[test]
    fn quadruple_root() {
        let rs = quartic_roots(&PolyCoeffs::from_ints([1, -4, 6, -4, 1]), 1e-9).unwrap();
        assert!(rs.roots.iter().all(|r| (r - c(1., 0.)).norm() < 1e-3));
    }

    #[test]
    fn leading_zero_is_degenerate() {
        let p = PolyCoeffs::new([0.0, 1.0, 0.0, 0.0, 1.0]);
        assert_eq!(quartic_roots(&p, 1e-9), Err(Error::DegeneratePolynomial));
    }

    #[test]
    fn non_monic_is_normalized() {
        let p = PolyCoeffs::<f64>::from_ints([2, 0, 4, 0, 2]);
        let rs = quartic_roots(&p, 1e-9).unwrap();
        assert!(rs.roots.iter().all(|r| (r.norm() - 1.0).abs() < 1e-7));
    }

    #[test]
    fn single_precision() {
        let p = PolyCoeffs::<f32>::from_ints([1, -2, 3, -2, 2]);
        let rs = quartic_roots(&p, 1e-4).unwrap();
        assert!(rs
            .roots
            .iter()
            .all(|r| (r.norm() - 1.0).abs() < 1e-3 || (r.norm() - 2f32.sqrt()).abs() < 1e-3));
    }

    #[test]
    fn conjugates_are_exact() {
        let p = PolyCoeffs::new([1.0, 0.3, -1.7, 0.2, 0.9]);
        let rs = quartic_roots(&p, 1e-12).unwrap();
        for r in rs.roots {
            assert!(rs.roots.iter().any(|s| *s == r.conj()));
        }
    }
}
