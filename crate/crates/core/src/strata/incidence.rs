//! Sampled incidence graph of the stratification.
//!
//! Edges join strata of consecutive dimension:
//!
//! * `P–L`: an `L`-classified sample of a singular circle lies within 1.5
//!   circle spacings of the point.
//! * `L–S`: an `S`-classified sample of the surface grid lies within three
//!   grid spacings of a core point of the line (one at least
//!   [`CORE_DISTANCE`] away from every singular point).
//! * `S–V`: a sign change of `F` along a lattice edge, bisected onto the
//!   surface and classified as a sheet, joins the sheet with the regions
//!   of both endpoints. Crossings close to the singular circles are
//!   skipped.
//!
//! Regions are the lattice components. Those with `F > 0` are labelled by
//! the eigenvalues at a node; those with `F < 0` have two stable and two
//! unstable eigenvalues either way and are labelled by the sheets bounding
//! them: `S₁, S₃` encloses `V₂` and `S₂, S₄` encloses `V₄`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classify::{classify_point, p_point};
use super::label::StratumLabel::{self, *};
use super::lattice::{bisect_crossing, SphereLattice};
use super::sampling::surface_grid;
use crate::algebra::homogeneous_reduced;
use crate::critical::{Disc, SpherePoint};
use crate::error::{Error, Result};
use crate::spectra::classify_configuration;

/// Minimum distance of a core line point from every singular point.
pub const CORE_DISTANCE: f64 = 0.3;
/// Crossings closer than this to a singular circle are not classified.
pub const CIRCLE_EXCLUSION: f64 = 0.05;
/// Classification tolerance for exact and bisected points.
const POINT_TOL: f64 = 1e-9;

/// Undirected incidence graph; each edge is stored as `(lower, higher)`
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceGraph {
    pub nodes: Vec<StratumLabel>,
    pub edges: BTreeSet<(StratumLabel, StratumLabel)>,
}

impl IncidenceGraph {
    pub fn new() -> Self {
        Self {
            nodes: StratumLabel::ALL.to_vec(),
            edges: BTreeSet::new(),
        }
    }

    /// Adds the edge between `a` and `b`, whichever order they come in.
    /// Returns `false` if their dimensions are not consecutive.
    pub fn insert(&mut self, a: StratumLabel, b: StratumLabel) -> bool {
        let (lo, hi) = if a.dimension() <= b.dimension() {
            (a, b)
        } else {
            (b, a)
        };
        if hi.dimension() != lo.dimension() + 1 {
            return false;
        }
        self.edges.insert((lo, hi));
        true
    }

    pub fn contains(&self, a: StratumLabel, b: StratumLabel) -> bool {
        self.edges.contains(&(a, b)) || self.edges.contains(&(b, a))
    }

    /// Strata one dimension lower adjacent to `x`.
    pub fn lower(&self, x: StratumLabel) -> BTreeSet<StratumLabel> {
        self.edges
            .iter()
            .filter(|e| e.1 == x)
            .map(|e| e.0)
            .collect()
    }

    /// Strata one dimension higher adjacent to `x`.
    pub fn higher(&self, x: StratumLabel) -> BTreeSet<StratumLabel> {
        self.edges
            .iter()
            .filter(|e| e.0 == x)
            .map(|e| e.1)
            .collect()
    }

    /// All strata in the closure of `x` other than `x`, following edges
    /// downwards.
    pub fn boundary(&self, x: StratumLabel) -> BTreeSet<StratumLabel> {
        let mut out = BTreeSet::new();
        let mut frontier = vec![x];
        while let Some(y) = frontier.pop() {
            for z in self.lower(y) {
                if out.insert(z) {
                    frontier.push(z);
                }
            }
        }
        out
    }
}

impl Default for IncidenceGraph {
    fn default() -> Self {
        Self::new()
    }
}

/// Counters describing how a graph was assembled.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasStats {
    pub lattice_half_width: usize,
    pub lattice_nodes: usize,
    pub components: usize,
    pub crossings: usize,
    pub crossings_near_circles: usize,
    pub crossings_unclassified: usize,
    pub circle_samples: usize,
    pub surface_samples: usize,
}

/// The lattice, its region labels and the incidence graph.
#[derive(Debug, Clone)]
pub struct Atlas {
    pub grid_n: usize,
    pub nu5: f64,
    pub lattice: SphereLattice,
    /// Region label per lattice component, `None` if undetermined.
    pub component_labels: Vec<Option<StratumLabel>>,
    /// Sheets met by sign changes on the boundary of each component.
    pub component_sheets: Vec<BTreeSet<StratumLabel>>,
    pub graph: IncidenceGraph,
    pub stats: AtlasStats,
}

impl Atlas {
    /// Region label of the component containing `p`.
    pub fn region_of(&self, p: &SpherePoint<f64>) -> Option<StratumLabel> {
        self.lattice
            .component_of(p)
            .and_then(|c| self.component_labels[c])
    }

    /// Sheets bounding the region with the given label.
    pub fn sheets_of(&self, region: StratumLabel) -> BTreeSet<StratumLabel> {
        self.component_labels
            .iter()
            .zip(&self.component_sheets)
            .filter(|(l, _)| **l == Some(region))
            .flat_map(|(_, s)| s.iter().copied())
            .collect()
    }
}

fn distance_to_circle_a(p: &[f64; 4]) -> f64 {
    (p[0] * p[0] + p[1] * p[1] + (p[2].hypot(p[3]) - 1.0).powi(2)).sqrt()
}

fn distance_to_circle_b(p: &[f64; 4]) -> f64 {
    (p[0] * p[0] + p[3] * p[3] + (p[1].hypot(p[2]) - 1.0).powi(2)).sqrt()
}

fn is_core(q: &SpherePoint<f64>) -> bool {
    [P1, P2, P3, P4, P5, P6]
        .into_iter()
        .all(|l| q.distance(&p_point(l).unwrap()) >= CORE_DISTANCE)
}

/// Builds the lattice, labels its regions and assembles the incidence
/// graph at resolution `grid_n` (at least 64).
pub fn build_atlas(grid_n: usize, nu5: f64) -> Result<Atlas> {
    if grid_n < 64 {
        return Err(Error::Domain(format!(
            "grid {grid_n} below the minimum of 64"
        )));
    }
    let mut graph = IncidenceGraph::new();
    let mut stats = AtlasStats::default();

    let lattice = SphereLattice::new(grid_n / 4);
    stats.lattice_half_width = lattice.half_width();
    stats.lattice_nodes = lattice.node_count();
    stats.components = lattice.components().len();

    // Sheet crossings on lattice edges.
    let crossings = lattice.crossings();
    stats.crossings = crossings.len();
    let found: Vec<Option<(StratumLabel, usize, usize)>> = crossings
        .par_iter()
        .map(|(a, b)| {
            let p = bisect_crossing(a, b);
            if distance_to_circle_a(&p.nu4) < CIRCLE_EXCLUSION
                || distance_to_circle_b(&p.nu4) < CIRCLE_EXCLUSION
            {
                return None;
            }
            let label = classify_point(&p, nu5, POINT_TOL).ok()?;
            (label.dimension() == 2).then(|| {
                (
                    label,
                    lattice.component_at(a).unwrap(),
                    lattice.component_at(b).unwrap(),
                )
            })
        })
        .collect();
    let mut sheets = vec![BTreeSet::new(); lattice.components().len()];
    for ((a, b), hit) in crossings.iter().zip(&found) {
        match hit {
            Some((s, ca, cb)) => {
                sheets[*ca].insert(*s);
                sheets[*cb].insert(*s);
            }
            None => {
                let p = bisect_crossing(a, b);
                if distance_to_circle_a(&p.nu4) < CIRCLE_EXCLUSION
                    || distance_to_circle_b(&p.nu4) < CIRCLE_EXCLUSION
                {
                    stats.crossings_near_circles += 1;
                } else {
                    stats.crossings_unclassified += 1;
                }
            }
        }
    }

    let labels: Vec<Option<StratumLabel>> = lattice
        .components()
        .iter()
        .map(|c| {
            if c.sign > 0 {
                let p = SpherePoint::normalize(c.seed.map(f64::from)).ok()?;
                let cfg = classify_configuration(&homogeneous_reduced(&p.with_nu5(nu5)), POINT_TOL)
                    .ok()?;
                match cfg.stable_count {
                    4 => Some(V3),
                    0 => Some(V1),
                    _ => None,
                }
            } else {
                let s = &sheets[c.id];
                if *s == BTreeSet::from([S1, S3]) {
                    Some(V2)
                } else if *s == BTreeSet::from([S2, S4]) {
                    Some(V4)
                } else {
                    None
                }
            }
        })
        .collect();
    for (c, s) in sheets.iter().enumerate() {
        if let Some(v) = labels[c] {
            for &sheet in s {
                graph.insert(sheet, v);
            }
        }
    }

    // Singular circles.
    let m = 4 * grid_n;
    let spacing = std::f64::consts::TAU / m as f64;
    let circle: Vec<SpherePoint<f64>> = (0..m)
        .flat_map(|k| {
            let (s, c) = (spacing * k as f64).sin_cos();
            [[0.0, 0.0, c, s], [0.0, s, c, 0.0]]
        })
        .map(|v| SpherePoint {
            nu4: v,
            disc: Disc::of(v[2]),
        })
        .collect();
    stats.circle_samples = circle.len();
    for q in &circle {
        let Ok(l) = classify_point(q, nu5, POINT_TOL) else {
            continue;
        };
        if l.dimension() != 1 {
            continue;
        }
        for p in [P1, P2, P3, P4, P5, P6] {
            if q.distance(&p_point(p).unwrap()) <= 1.5 * spacing {
                graph.insert(p, l);
            }
        }
    }

    // Surface grid near the circles.
    let radius = 3.0 * std::f64::consts::TAU / grid_n as f64;
    let surface: Vec<_> = [Disc::Plus, Disc::Minus]
        .into_iter()
        .flat_map(|d| surface_grid(d, grid_n))
        .collect();
    stats.surface_samples = surface.len();
    let pairs: BTreeSet<(StratumLabel, StratumLabel)> = surface
        .par_iter()
        .filter_map(|s| {
            let p = s.point;
            let label = classify_point(&p, nu5, POINT_TOL).ok()?;
            if label.dimension() != 2 {
                return None;
            }
            let v = p.nu4;
            let mut out = Vec::new();
            let r_a = v[2].hypot(v[3]);
            if distance_to_circle_a(&v) <= radius && r_a > 0.0 {
                out.push([0.0, 0.0, v[2] / r_a, v[3] / r_a]);
            }
            let r_b = v[1].hypot(v[2]);
            if distance_to_circle_b(&v) <= radius && r_b > 0.0 {
                out.push([0.0, v[1] / r_b, v[2] / r_b, 0.0]);
            }
            let edges: Vec<(StratumLabel, StratumLabel)> = out
                .into_iter()
                .filter_map(|w| {
                    let q = SpherePoint {
                        nu4: w,
                        disc: Disc::of(w[2]),
                    };
                    if !is_core(&q) {
                        return None;
                    }
                    let l = classify_point(&q, nu5, POINT_TOL).ok()?;
                    (l.dimension() == 1).then_some((l, label))
                })
                .collect();
            Some(edges)
        })
        .flatten()
        .collect();
    for (l, s) in pairs {
        graph.insert(l, s);
    }

    Ok(Atlas {
        grid_n,
        nu5,
        lattice,
        component_labels: labels,
        component_sheets: sheets,
        graph,
        stats,
    })
}

/// The incidence graph at resolution `grid_n` with the default `ν₅`.
pub fn build_incidence(grid_n: usize) -> Result<IncidenceGraph> {
    Ok(build_atlas(grid_n, crate::DEFAULT_NU5)?.graph)
}

/// Edge count by pair of dimensions, e.g. `"0-1"`.
pub fn edge_census(g: &IncidenceGraph) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for (a, b) in &g.edges {
        *out.entry(format!("{}-{}", a.dimension(), b.dimension()))
            .or_insert(0) += 1;
    }
    out
}
