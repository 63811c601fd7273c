//! Triangulated critical surface.
//!
//! The grid of [`surface_grid`](super::surface_grid) is triangulated and the
//! vertices that the conoid map identifies are welded: `t = 0` with
//! `t = 2π`, `(0, t)` with `(0, 2π − t)`, and `(s, π/2)` with `(−s, 3π/2)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::classify::classify_point;
use super::label::StratumLabel;
use super::sampling::{grid_s, grid_t};
use crate::critical::{param_phi, Disc};
use crate::error::{Error, Result};

/// A welded mesh vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeshVertex {
    /// A parameter preimage; welded vertices keep the first one.
    pub s: f64,
    pub t: f64,
    pub nu: [f64; 4],
    pub stratum: StratumLabel,
}

/// Welded triangle mesh of one disc of the critical surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceMesh {
    pub disc: Disc,
    pub resolution: usize,
    pub vertices: Vec<MeshVertex>,
    pub triangles: Vec<[usize; 3]>,
    /// Vertex count before welding, `(resolution + 1)²`.
    pub grid_vertices: usize,
}

impl SurfaceMesh {
    pub fn edge_count(&self) -> usize {
        let mut edges = BTreeSet::new();
        for t in &self.triangles {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        edges.len()
    }

    /// `V − E + F` of the welded complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.triangles.len() as i64
    }
}

fn find(p: &mut [usize], mut i: usize) -> usize {
    while p[i] != i {
        p[i] = p[p[i]];
        i = p[i];
    }
    i
}

fn union(p: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(p, a), find(p, b));
    if ra != rb {
        p[ra.max(rb)] = ra.min(rb);
    }
}

/// Triangulates one disc over a `resolution × resolution` parameter grid,
/// tagging each vertex with its stratum at the given `ν₅`. The resolution
/// must be even, at least 8; the `(s, π/2) ~ (−s, 3π/2)` weld additionally
/// needs it divisible by 4 and is otherwise left open.
pub fn mesh_surface(disc: Disc, resolution: usize, nu5: f64) -> Result<SurfaceMesh> {
    if resolution < 8 || !resolution.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "mesh resolution {resolution} must be even and ≥ 8"
        )));
    }
    let r = resolution;
    let w = r + 1;
    let id = |i: usize, j: usize| i * w + j;
    let mut parent: Vec<usize> = (0..w * w).collect();
    for i in 0..=r {
        union(&mut parent, id(i, 0), id(i, r));
    }
    let mid = r / 2;
    for j in 0..=r {
        union(&mut parent, id(mid, j), id(mid, r - j));
    }
    if r.is_multiple_of(4) {
        for i in 0..=r {
            union(&mut parent, id(i, r / 4), id(r - i, 3 * r / 4));
        }
    }

    let mut remap = vec![usize::MAX; w * w];
    let mut vertices = Vec::new();
    for i in 0..=r {
        for j in 0..=r {
            let root = find(&mut parent, id(i, j));
            if remap[root] == usize::MAX {
                let (s, t) = (grid_s(i, r), grid_t(j, r));
                let p = param_phi(disc, s, t)?;
                let stratum = classify_point(&p, nu5, 1e-9)?;
                remap[root] = vertices.len();
                vertices.push(MeshVertex {
                    s,
                    t,
                    nu: p.nu4,
                    stratum,
                });
            }
        }
    }
    let mut vid = |i: usize, j: usize| {
        let root = find(&mut parent, id(i, j));
        remap[root]
    };

    let mut seen = BTreeSet::new();
    let mut triangles = Vec::with_capacity(2 * r * r);
    for i in 0..r {
        for j in 0..r {
            let (a, b, c, d) = (vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1));
            for tri in [[a, b, c], [a, c, d]] {
                if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                    continue;
                }
                let mut key = tri;
                key.sort_unstable();
                if seen.insert(key) {
                    triangles.push(tri);
                }
            }
        }
    }
    Ok(SurfaceMesh {
        disc,
        resolution: r,
        vertices,
        triangles,
        grid_vertices: w * w,
    })
}
