//! The stratification of the unit 3-sphere of `(ν₁, ν₂, ν₃, ν₄)`.
//!
//! All routines here work in `f64`; `ν₅` is a parameter.

mod classify;
mod incidence;
mod label;
mod lattice;
mod mesh;
mod report;
mod sampling;

pub use classify::{
    classify_point, classify_point_detailed, classify_point_detailed_with, classify_point_with,
    p_point, representatives, sheet_of, PointClass, Representative,
};
pub use incidence::{
    build_atlas, build_incidence, edge_census, Atlas, AtlasStats, IncidenceGraph, CIRCLE_EXCLUSION,
    CORE_DISTANCE,
};
pub use label::StratumLabel;
pub use lattice::{bisect_crossing, f_int, Component, SphereLattice};
pub use mesh::{mesh_surface, MeshVertex, SurfaceMesh};
pub use report::{
    stability_report, stability_report_with, stable_boundary, SampleRecord, StabilityReport,
    STABLE_BOUNDARY,
};
pub use sampling::{cube_to_sphere, r3_sequence, sphere_samples, surface_grid, SurfaceSample};
