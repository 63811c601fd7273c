//! Flood fill of `{F ≠ 0}` on a lattice covering the unit 3-sphere.
//!
//! The sphere is identified with the boundary of the cube `[−n, n]⁴` by
//! radial projection, and the lattice is the set of integer points on that
//! boundary, joined by unit steps along a coordinate axis. Since `F` is
//! homogeneous its sign at a lattice point is the sign of `F` at the
//! projected sphere point, and for integer points it is computed exactly.
//! Zero nodes (the two singular circles and any exact lattice hits on the
//! critical surface) are barriers.
//!
//! A unit step changes one coordinate by 1, so every path from `ν₁ < 0` to
//! `ν₁ > 0` passes through a node with `ν₁ = 0`, where `F = −ν₂²ν₄² ≤ 0`;
//! likewise for `ν₂`, where `F ≥ 0`. The fill therefore cannot merge
//! components that the continuous picture keeps apart across these walls.

use rayon::prelude::*;

use crate::critical::{f_critical, SpherePoint};

const UNUSED: i8 = 2;

/// A connected component of same-sign nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    /// Sign of `F` on the component.
    pub sign: i8,
    pub size: usize,
    /// Some node of the component.
    pub seed: [i32; 4],
}

/// The lattice with its sign field and component labelling.
#[derive(Debug, Clone)]
pub struct SphereLattice {
    n: i32,
    side: usize,
    sign: Vec<i8>,
    comp: Vec<u32>,
    components: Vec<Component>,
}

/// Exact `F` at an integer point.
pub fn f_int(x: &[i32; 4]) -> i64 {
    let [a, b, c, d] = x.map(|v| i64::from(v) * i64::from(v));
    (a - b) * (a + d) + a * c
}

fn find(parent: &mut [u32], mut i: u32) -> u32 {
    while parent[i as usize] != i {
        let g = parent[parent[i as usize] as usize];
        parent[i as usize] = g;
        i = g;
    }
    i
}

impl SphereLattice {
    /// Builds the lattice of half-width `n` and flood-fills it.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "lattice half-width must be at least 2");
        let n_i = n as i32;
        let side = 2 * n + 1;
        let total = 8 * side * side * side;
        let mut lat = Self {
            n: n_i,
            side,
            sign: Vec::new(),
            comp: Vec::new(),
            components: Vec::new(),
        };
        lat.sign = (0..total)
            .into_par_iter()
            .map(|idx| {
                let x = lat.decode(idx);
                if lat.index(&x) != Some(idx) {
                    UNUSED
                } else {
                    f_int(&x).signum() as i8
                }
            })
            .collect();

        let mut parent: Vec<u32> = (0..total as u32).collect();
        for idx in 0..total {
            let s = lat.sign[idx];
            if s == UNUSED || s == 0 {
                continue;
            }
            let x = lat.decode(idx);
            for axis in 0..4 {
                let mut y = x;
                y[axis] += 1;
                if let Some(j) = lat.index(&y) {
                    if lat.sign[j] == s {
                        let (a, b) = (find(&mut parent, idx as u32), find(&mut parent, j as u32));
                        if a != b {
                            parent[a.max(b) as usize] = a.min(b);
                        }
                    }
                }
            }
        }

        let mut comp = vec![u32::MAX; total];
        let mut components: Vec<Component> = Vec::new();
        for idx in 0..total {
            let s = lat.sign[idx];
            if s == UNUSED || s == 0 {
                continue;
            }
            let root = find(&mut parent, idx as u32) as usize;
            if comp[root] == u32::MAX {
                comp[root] = components.len() as u32;
                components.push(Component {
                    id: components.len(),
                    sign: s,
                    size: 0,
                    seed: lat.decode(idx),
                });
            }
            let c = comp[root];
            comp[idx] = c;
            components[c as usize].size += 1;
        }
        lat.comp = comp;
        lat.components = components;
        lat
    }

    pub fn half_width(&self) -> usize {
        self.n as usize
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Number of lattice nodes (each boundary point once).
    pub fn node_count(&self) -> usize {
        self.sign.iter().filter(|&&s| s != UNUSED).count()
    }

    fn decode(&self, idx: usize) -> [i32; 4] {
        let s = self.side;
        let facet = idx / (s * s * s);
        let rem = idx % (s * s * s);
        let free = [rem / (s * s), (rem / s) % s, rem % s];
        let axis = facet / 2;
        let mut x = [0i32; 4];
        let mut k = 0;
        for (a, v) in x.iter_mut().enumerate() {
            if a == axis {
                *v = if facet % 2 == 1 { self.n } else { -self.n };
            } else {
                *v = free[k] as i32 - self.n;
                k += 1;
            }
        }
        x
    }

    /// Slot of a boundary point under its canonical facet (the first axis
    /// at `±n`); `None` off the boundary.
    pub fn index(&self, x: &[i32; 4]) -> Option<usize> {
        if x.iter().any(|v| v.abs() > self.n) {
            return None;
        }
        let axis = x.iter().position(|v| v.abs() == self.n)?;
        let facet = 2 * axis + usize::from(x[axis] > 0);
        let s = self.side;
        let mut off = 0usize;
        for (a, v) in x.iter().enumerate() {
            if a != axis {
                off = off * s + (v + self.n) as usize;
            }
        }
        Some(facet * s * s * s + off)
    }

    /// Sign of `F` at a boundary point, `None` off the boundary.
    pub fn sign_at(&self, x: &[i32; 4]) -> Option<i8> {
        self.index(x).map(|i| self.sign[i])
    }

    /// Component of a boundary node, `None` for zero nodes.
    pub fn component_at(&self, x: &[i32; 4]) -> Option<usize> {
        let i = self.index(x)?;
        (self.comp[i] != u32::MAX).then_some(self.comp[i] as usize)
    }

    /// All unit-step edges whose endpoints carry opposite nonzero signs.
    pub fn crossings(&self) -> Vec<([i32; 4], [i32; 4])> {
        (0..self.sign.len())
            .into_par_iter()
            .flat_map_iter(|idx| {
                let s = self.sign[idx];
                let x = self.decode(idx);
                (0..4).filter_map(move |axis| {
                    if s == UNUSED || s == 0 {
                        return None;
                    }
                    let mut y = x;
                    y[axis] += 1;
                    let t = self.sign_at(&y)?;
                    (t == -s).then_some((x, y))
                })
            })
            .collect()
    }

    /// Component containing a sphere point, located through a corner of its
    /// lattice cell joined to it by a segment on which `F` keeps its sign.
    /// `None` on the critical set or when no corner qualifies.
    pub fn component_of(&self, p: &SpherePoint<f64>) -> Option<usize> {
        let f = f_critical(&p.nu4);
        if f == 0.0 {
            return None;
        }
        let sf = f.signum();
        let axis = (0..4)
            .max_by(|&a, &b| p.nu4[a].abs().partial_cmp(&p.nu4[b].abs()).unwrap())
            .unwrap();
        let nf = f64::from(self.n);
        let y = p.nu4.map(|v| v * nf / p.nu4[axis].abs());
        let mut corners: Vec<[i32; 4]> = Vec::with_capacity(8);
        for mask in 0..8u32 {
            let mut c = [0i32; 4];
            let mut bit = 0;
            for a in 0..4 {
                if a == axis {
                    c[a] = y[a].round() as i32;
                } else {
                    let v = if mask >> bit & 1 == 1 {
                        y[a].ceil()
                    } else {
                        y[a].floor()
                    };
                    c[a] = (v as i32).clamp(-self.n, self.n);
                    bit += 1;
                }
            }
            corners.push(c);
        }
        let dist = |c: &[i32; 4]| {
            (0..4)
                .map(|a| (f64::from(c[a]) - y[a]).powi(2))
                .sum::<f64>()
        };
        corners.sort_by(|a, b| dist(a).partial_cmp(&dist(b)).unwrap());
        corners.dedup();
        for c in corners {
            let Some(i) = self.index(&c) else { continue };
            if f64::from(self.sign[i]) != sf {
                continue;
            }
            let clean = (1..8).all(|k| {
                let w = f64::from(k) / 8.0;
                let z: [f64; 4] = std::array::from_fn(|a| y[a] + (f64::from(c[a]) - y[a]) * w);
                f_critical(&z).signum() == sf
            });
            if clean {
                return Some(self.comp[i] as usize);
            }
        }
        None
    }
}

/// The sphere point where `F` changes sign on the segment between two
/// lattice nodes of opposite sign, by bisection.
pub fn bisect_crossing(a: &[i32; 4], b: &[i32; 4]) -> SpherePoint<f64> {
    let fa = a.map(f64::from);
    let fb = b.map(f64::from);
    let at = |w: f64| -> [f64; 4] { std::array::from_fn(|k| fa[k] + (fb[k] - fa[k]) * w) };
    let sa = f_critical(&fa).signum();
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f_critical(&at(mid)).signum() == sa {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    SpherePoint::normalize(at(0.5 * (lo + hi))).expect("segment avoids the origin")
}
