//! Per-sample stability records and their aggregate.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classify::classify_point_detailed_with;
use super::incidence::IncidenceGraph;
use super::label::StratumLabel::{self, *};
use crate::critical::SpherePoint;
use crate::spectra::ConfigCode;

/// Strata allowed on the boundary of the stability domain.
pub const STABLE_BOUNDARY: [StratumLabel; 14] =
    [S2, S3, L1, L2, L3, L4, L5, L6, P1, P2, P3, P4, P5, P6];

/// Classification of one sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub nu: [f64; 4],
    pub stratum: Option<StratumLabel>,
    pub config: Option<ConfigCode>,
    pub max_real_part: f64,
    pub min_real_part: f64,
    pub stable: bool,
    pub error: Option<String>,
}

/// Aggregate over a sample set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub nu5: f64,
    pub samples: Vec<SampleRecord>,
    pub counts: BTreeMap<StratumLabel, usize>,
    pub failures: usize,
    /// Strata containing at least one stable sample.
    pub stable_strata: BTreeSet<StratumLabel>,
    pub stable_fraction: f64,
}

impl StabilityReport {
    /// Whether stable samples occur in `V₃` only.
    pub fn stable_only_in_v3(&self) -> bool {
        self.stable_strata.iter().all(|&l| l == V3)
    }
}

/// Classifies every sample and records its spectrum extremes. A sample is
/// stable when all real parts are below `−tol`.
pub fn stability_report(samples: &[SpherePoint<f64>], nu5: f64, tol: f64) -> StabilityReport {
    stability_report_with(samples, nu5, tol, crate::spectra::DEFAULT_CLUSTER_TOL)
}

/// [`stability_report`] with an explicit root-clustering tolerance.
pub fn stability_report_with(
    samples: &[SpherePoint<f64>],
    nu5: f64,
    tol: f64,
    cluster_tol: f64,
) -> StabilityReport {
    let records: Vec<SampleRecord> = samples
        .par_iter()
        .map(
            |p| match classify_point_detailed_with(p, nu5, tol, cluster_tol) {
                Ok(c) => SampleRecord {
                    nu: p.nu4,
                    stratum: Some(c.stratum),
                    config: Some(c.config.code),
                    max_real_part: c.spectrum.max_real_part,
                    min_real_part: c.spectrum.min_real_part(),
                    stable: c.stable,
                    error: None,
                },
                Err(e) => SampleRecord {
                    nu: p.nu4,
                    stratum: None,
                    config: None,
                    max_real_part: f64::NAN,
                    min_real_part: f64::NAN,
                    stable: false,
                    error: Some(e.to_string()),
                },
            },
        )
        .collect();
    let mut counts = BTreeMap::new();
    let mut stable_strata = BTreeSet::new();
    let mut failures = 0;
    let mut stable = 0usize;
    for r in &records {
        match r.stratum {
            Some(l) => {
                *counts.entry(l).or_insert(0) += 1;
                if r.stable {
                    stable_strata.insert(l);
                    stable += 1;
                }
            }
            None => failures += 1,
        }
    }
    let stable_fraction = if records.is_empty() {
        0.0
    } else {
        stable as f64 / records.len() as f64
    };
    StabilityReport {
        nu5,
        samples: records,
        counts,
        failures,
        stable_strata,
        stable_fraction,
    }
}

/// Strata on the boundary of `V₃` according to the graph, and whether they
/// all belong to [`STABLE_BOUNDARY`].
pub fn stable_boundary(graph: &IncidenceGraph) -> (BTreeSet<StratumLabel>, bool) {
    let b = graph.boundary(V3);
    let ok = b.iter().all(|l| STABLE_BOUNDARY.contains(l));
    (b, ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::representatives;
    use crate::DEFAULT_NU5;

    #[test]
    fn representatives_report() {
        let pts: Vec<_> = representatives(DEFAULT_NU5)
            .iter()
            .map(|r| r.point)
            .collect();
        let rep = stability_report(&pts, DEFAULT_NU5, 1e-9);
        assert_eq!(rep.failures, 0);
        assert_eq!(rep.counts.len(), 20);
        assert_eq!(rep.stable_strata, BTreeSet::from([V3]));
        assert!(rep.stable_only_in_v3());
    }
}
