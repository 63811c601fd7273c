//! Verification suites. Each check reports its worst residual against a
//! fixed bound; boolean checks report a mismatch count against bound 0.

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};
use std::time::Instant;

use resonance_core::algebra::{
    adjoint_action, basis, basis_m, basis_p, commutator_table, homogeneous_reduced, resonant_l,
    CentralizerCoords, CommutatorEntry, ReducedCoords, TABLE_INDICES,
};
use resonance_core::critical::{
    f_critical, f_surface, g_sphere, hessian_f, normal_form_residual, param_phi, phi_coeffs, psi,
    Disc, NormalFormKind, RootTriple, SpherePoint,
};
use resonance_core::linalg::PolyCoeffs;
use resonance_core::spectra::{classify_configuration, jordan_defect, pair_rank, spectrum_with};
use resonance_core::strata::{
    build_atlas, classify_point_with, p_point, representatives, sphere_samples,
    stability_report_with, stable_boundary, StratumLabel,
};
use resonance_core::{Complex, Rational64};
use serde::Serialize;
use serde_json::json;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::{Suite, SCHEMA_VERSION};

const IDENTITY_SAMPLES: usize = 10_000;
const STABILITY_SAMPLES: usize = 4_000;
const BOUND_EQ9: f64 = 1e-9;
const BOUND_PSI: f64 = 1e-10;
const BOUND_HOMOGENEITY: f64 = 1e-10;
const BOUND_ROTATION: f64 = 1e-12;
const BOUND_NORMAL_FORM: f64 = 1e-10;
const BOUND_ON_SURFACE: f64 = 1e-12;
const BOUND_TWO_TO_ONE: f64 = 1e-14;
const BOUND_FD: f64 = 1e-5;
const NF_RADIUS: f64 = 0.05;
const FD_STEP: f64 = 1e-4;

/// Nonzero commutators `[Mᵢ, Mⱼ] = c Mₖ` over `i, j ∈ {2,3,4,6,7,8}`.
const REFERENCE_TABLE: [(usize, usize, i64, usize); 24] = [
    (2, 3, 2, 8),
    (2, 4, 2, 7),
    (2, 7, 2, 4),
    (2, 8, 2, 3),
    (3, 2, -2, 8),
    (3, 4, -2, 6),
    (3, 6, -2, 4),
    (3, 8, -2, 2),
    (4, 2, -2, 7),
    (4, 3, 2, 6),
    (4, 6, 2, 3),
    (4, 7, -2, 2),
    (6, 3, 2, 4),
    (6, 4, -2, 3),
    (6, 7, -2, 8),
    (6, 8, 2, 7),
    (7, 2, -2, 4),
    (7, 4, 2, 2),
    (7, 6, 2, 8),
    (7, 8, -2, 6),
    (8, 2, -2, 3),
    (8, 3, 2, 2),
    (8, 6, -2, 7),
    (8, 7, 2, 6),
];

/// Closure relations of the stratification, lower stratum first.
const REFERENCE_EDGES: [(&str, &str); 36] = [
    ("P1", "L1"),
    ("P2", "L2"),
    ("P3", "L3"),
    ("P4", "L4"),
    ("P5", "L1"),
    ("P5", "L2"),
    ("P5", "L5"),
    ("P5", "L6"),
    ("P6", "L3"),
    ("P6", "L4"),
    ("P6", "L5"),
    ("P6", "L6"),
    ("L1", "S1"),
    ("L1", "S3"),
    ("L2", "S2"),
    ("L2", "S4"),
    ("L3", "S1"),
    ("L3", "S3"),
    ("L4", "S2"),
    ("L4", "S4"),
    ("L5", "S1"),
    ("L5", "S2"),
    ("L5", "S3"),
    ("L5", "S4"),
    ("L6", "S1"),
    ("L6", "S2"),
    ("L6", "S3"),
    ("L6", "S4"),
    ("S1", "V1"),
    ("S4", "V1"),
    ("S1", "V2"),
    ("S3", "V2"),
    ("S2", "V3"),
    ("S3", "V3"),
    ("S2", "V4"),
    ("S4", "V4"),
];

/// Configuration tag expected on each stratum.
fn reference_tag(label: &str) -> &'static str {
    match label {
        "V1" => "gp1gp2",
        "V3" => "gm1gm2",
        "V2" | "V4" => "gmgp",
        "S1" | "S4" => "bgp",
        "S2" | "S3" => "bgm",
        "P1" | "P2" | "P3" | "P4" => "b2",
        _ => "b1b2",
    }
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub suite: &'static str,
    pub max_residual: f64,
    pub bound: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

fn check(suite: &'static str, name: &'static str, residual: f64, bound: f64) -> Check {
    Check {
        name,
        suite,
        max_residual: residual,
        bound,
        pass: residual <= bound,
        detail: String::new(),
    }
}

fn count_check(suite: &'static str, name: &'static str, bad: Vec<String>) -> Check {
    Check {
        detail: bad.join("; "),
        ..check(suite, name, bad.len() as f64, 0.0)
    }
}

/// Kronecker sequence in `[lo, hi)^N`.
fn kronecker<const N: usize>(k: usize, seed: u64, lo: f64, hi: f64) -> [f64; N] {
    const STEPS: [f64; 8] = [
        0.414_213_562_373_095,
        0.732_050_807_568_877,
        0.236_067_977_499_790,
        0.645_751_311_064_591,
        0.316_624_790_355_400,
        0.605_551_275_463_989,
        0.123_105_625_617_661,
        0.358_898_943_540_674,
    ];
    let offset = (seed as f64 * 0.618_033_988_749_895).fract();
    std::array::from_fn(|d| lo + (hi - lo) * (offset + (k + 1) as f64 * STEPS[d]).fract())
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn identities(cfg: &RunConfig) -> Vec<Check> {
    const S: &str = "identities";
    let mut eq9 = 0.0f64;
    let mut psi_res = 0.0f64;
    let (mut hf, mut hg, mut hw) = (0.0f64, 0.0f64, 0.0f64);
    for k in 0..IDENTITY_SAMPLES {
        let nu: [f64; 5] = kronecker(k, cfg.seed, -2.0, 2.0);
        let [n1, n2, n3, n4, n5] = nu;
        let g = f_surface(&phi_coeffs(&ReducedCoords::new(nu)));
        let closed = -64.0
            * (n1 * n1 + n5 * n5)
            * ((n1 * n1 - n2 * n2) * (n1 * n1 + n4 * n4) + n1 * n1 * n3 * n3);
        eq9 = eq9.max((g - closed).abs() / (1.0 + norm(&nu).powi(6)));

        let [alpha, beta, gamma]: [f64; 3] = kronecker(k, cfg.seed + 1, -3.0, 3.0);
        let m = alpha.abs().max(beta.abs()).max(gamma.abs());
        let r = f_surface(&psi(&RootTriple { alpha, beta, gamma }));
        psi_res = psi_res.max(r.abs() / (1.0 + m.powi(6)));

        if k % 10 == 0 {
            let nu4 = [n1, n2, n3, n4];
            let a: [f64; 5] = kronecker(k, cfg.seed + 2, -1.0, 1.0);
            for t in [0.5, 2.0, 3.0] {
                let f0 = f_critical(&nu4);
                let ft = f_critical(&nu4.map(|v| t * v));
                hf = hf.max((ft - t.powi(4) * f0).abs() / (t.powi(4) * norm(&nu4).powi(4)));
                let gt = f_surface(&phi_coeffs(&ReducedCoords::new(nu.map(|v| t * v))));
                hg = hg.max((gt - t.powi(6) * g).abs() / (64.0 * t.powi(6) * norm(&nu).powi(6)));
                let p = PolyCoeffs::from_ascending(a);
                let scaled = PolyCoeffs::from_ascending([
                    t.powi(4) * a[0],
                    t.powi(3) * a[1],
                    t * t * a[2],
                    t * a[3],
                    a[4],
                ]);
                hw = hw.max(
                    (f_surface(&scaled) - t.powi(6) * f_surface(&p)).abs() / (3.0 * t.powi(6)),
                );
            }
        }
    }
    vec![
        check(S, "critical_polynomial_identity", eq9, BOUND_EQ9),
        check(S, "f_vanishes_on_psi", psi_res, BOUND_PSI),
        check(S, "homogeneity_F", hf, BOUND_HOMOGENEITY),
        check(S, "homogeneity_G", hg, BOUND_HOMOGENEITY),
        check(S, "weighted_homogeneity_f", hw, BOUND_HOMOGENEITY),
    ]
}

fn rot(axis: usize, a: f64, v: [f64; 3]) -> [f64; 3] {
    let (s, c) = a.sin_cos();
    let [x, y, z] = v;
    match axis {
        1 => [x, c * y - s * z, s * y + c * z],
        2 => [c * x + s * z, y, -s * x + c * z],
        _ => [c * x - s * y, s * x + c * y, z],
    }
}

fn tables(cfg: &RunConfig) -> CliResult<Vec<Check>> {
    const S: &str = "tables";
    let b = basis::<i64>();
    let gram = b.gram();
    let gram_dev = (0..16)
        .flat_map(|i| (0..16).map(move |j| (i, j)))
        .map(|(i, j)| (gram[i][j] - if i == j { 4 } else { 0 }).abs())
        .max()
        .unwrap_or(0) as f64;

    let l = resonant_l::<i64>();
    let commuting: Vec<String> = (1..=8)
        .filter(|&i| !l.commutator(&basis_m(i)).is_zero())
        .map(|i| format!("[L,M{i}] != 0"))
        .collect();
    let orthogonal: Vec<String> = (1..=8)
        .flat_map(|i| (1..=8).map(move |j| (i, j)))
        .filter(|&(i, j)| basis_m::<i64>(i).frobenius_inner(&basis_p(j)) != 0)
        .map(|(i, j)| format!("<M{i},P{j}> != 0"))
        .collect();

    let table = commutator_table()?;
    let mut table_bad = Vec::new();
    for (a, &i) in TABLE_INDICES.iter().enumerate() {
        for (bj, &j) in TABLE_INDICES.iter().enumerate() {
            let want = REFERENCE_TABLE
                .iter()
                .find(|e| e.0 == i && e.1 == j)
                .map_or(CommutatorEntry::Zero, |&(_, _, coeff, index)| {
                    CommutatorEntry::Multiple { coeff, index }
                });
            if table[a][bj] != want {
                table_bad.push(format!("[M{i},M{j}]"));
            }
        }
    }

    let t = 0.37;
    let mut rot_dev = 0.0f64;
    for k in 6..=8 {
        for j in TABLE_INDICES {
            let unit = CentralizerCoords::unit(j, 1.0);
            let got = adjoint_action(k, t, &unit)?;
            let (ax, sx, sy) = match k {
                6 => (1, -2.0 * t, 2.0 * t),
                7 => (2, -2.0 * t, 2.0 * t),
                _ => (3, 2.0 * t, 2.0 * t),
            };
            let want = CentralizerCoords::from_parts(
                0.0,
                rot(ax, sx, unit.x()),
                0.0,
                rot(ax, sy, unit.y()),
            );
            for i in 0..8 {
                rot_dev = rot_dev.max((got.mu[i] - want.mu[i]).abs());
            }
        }
    }

    let mut config_bad = Vec::new();
    for rep in representatives(cfg.nu5) {
        let a = homogeneous_reduced(&rep.point.with_nu5(rep.nu5));
        let name = rep.label.to_string();
        let tag = classify_configuration(&a, cfg.tol).map(|c| c.code.tag());
        let label = classify_point_with(&rep.point, rep.nu5, cfg.tol, cfg.cluster_tol);
        match (tag, label) {
            (Ok(tag), Ok(l)) if tag == reference_tag(&name) && l == rep.label => {}
            (tag, label) => config_bad.push(format!("{name}: {tag:?} / {label:?}")),
        }
    }

    Ok(vec![
        check(S, "basis_gram", gram_dev, 0.0),
        count_check(S, "centralizer_commutes", commuting),
        count_check(S, "m_p_orthogonal", orthogonal),
        count_check(S, "commutator_table", table_bad),
        check(S, "adjoint_action_table", rot_dev, BOUND_ROTATION),
        count_check(S, "configuration_table", config_bad),
    ])
}

fn strata(cfg: &RunConfig) -> CliResult<Vec<Check>> {
    const S: &str = "strata";
    let atlas = build_atlas(cfg.grid, cfg.nu5)?;
    let mut reference = BTreeSet::new();
    for (a, b) in REFERENCE_EDGES {
        let (a, b): (StratumLabel, StratumLabel) = (a.parse()?, b.parse()?);
        reference.insert((a, b));
    }
    let mut edge_bad: Vec<String> = reference
        .difference(&atlas.graph.edges)
        .map(|(a, b)| format!("missing {a}-{b}"))
        .collect();
    edge_bad.extend(
        atlas
            .graph
            .edges
            .difference(&reference)
            .map(|(a, b)| format!("extra {a}-{b}")),
    );
    let (_, boundary_ok) = stable_boundary(&atlas.graph);

    let samples = sphere_samples(STABILITY_SAMPLES, cfg.seed);
    let rep = stability_report_with(&samples, cfg.nu5, cfg.tol, cfg.cluster_tol);
    let mut stab_bad = Vec::new();
    if rep.failures > 0 {
        stab_bad.push(format!("{} unclassified samples", rep.failures));
    }
    if !rep.stable_only_in_v3() {
        stab_bad.push(format!("stable samples in {:?}", rep.stable_strata));
    }
    let v3 = rep.counts.get(&StratumLabel::V3).copied().unwrap_or(0);
    if v3 == 0 {
        stab_bad.push("no samples in V3".into());
    }

    let mut rank_bad = Vec::new();
    for label in StratumLabel::of_dimension(0) {
        let p = SpherePoint::new(p_point(label).expect("special point"))?;
        let a = homogeneous_reduced(&p.with_nu5(cfg.nu5));
        let sp = spectrum_with(&a, cfg.tol, cfg.cluster_tol)?;
        let up = sp.upper();
        let umbrella = matches!(
            label,
            StratumLabel::P1 | StratumLabel::P2 | StratumLabel::P3 | StratumLabel::P4
        );
        if umbrella {
            let r = up
                .first()
                .map(|&(_, z)| pair_rank(&a, Complex::new(0.0, z.im), cfg.tol));
            if r != Some(2) || up.len() != 2 {
                rank_bad.push(format!("{label}: rank {r:?}"));
            }
        } else {
            let defects: Vec<isize> = up
                .iter()
                .map(|&(k, z)| jordan_defect(&a, z, sp.multiplicity(k), cfg.tol))
                .collect();
            if defects.is_empty() || defects.iter().any(|&d| d != 0) {
                rank_bad.push(format!("{label}: defects {defects:?}"));
            }
        }
    }
    let rl = pair_rank(&resonant_l::<f64>(), Complex::new(0.0, 1.0), cfg.tol);
    if rl != 0 {
        rank_bad.push(format!("L: rank {rl}"));
    }

    Ok(vec![
        count_check(S, "incidence_graph", edge_bad),
        count_check(
            S,
            "stable_boundary",
            if boundary_ok {
                vec![]
            } else {
                vec!["boundary of V3 differs".into()]
            },
        ),
        count_check(S, "stability_domain", stab_bad),
        count_check(S, "semisimplicity_ranks", rank_bad),
    ])
}

fn diag(d: [Rational64; 4]) -> [[Rational64; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            if i == j {
                d[i]
            } else {
                Rational64::from_integer(0)
            }
        })
    })
}

fn normal_forms(cfg: &RunConfig) -> CliResult<Vec<Check>> {
    const S: &str = "normal-forms";
    let mut nf = 0.0f64;
    let mut nf_bad = Vec::new();
    for label in StratumLabel::of_dimension(0) {
        let kind = match label {
            StratumLabel::P5 | StratumLabel::P6 => NormalFormKind::SelfTangency,
            _ => NormalFormKind::Umbrella,
        };
        let c = SpherePoint::new(p_point(label).expect("special point"))?;
        let rep = normal_form_residual(kind, &c, NF_RADIUS)?;
        if rep.samples.is_empty() {
            nf_bad.push(format!("{label}: no zero-set samples"));
        }
        nf = nf.max(rep.max_residual);
    }
    let mut nf_check = check(S, "local_normal_forms", nf, BOUND_NORMAL_FORM);
    if !nf_bad.is_empty() {
        nf_check.pass = false;
        nf_check.detail = nf_bad.join("; ");
    }

    let (mut on, mut two) = (0.0f64, 0.0f64);
    for disc in [Disc::Plus, Disc::Minus] {
        for i in 0..100 {
            let s = -1.0 + 2.0 * (i as f64 / 99.0);
            let a = param_phi(disc, s, PI / 2.0)?;
            let b = param_phi(disc, -s, 3.0 * PI / 2.0)?;
            two = two.max(a.distance(&b.nu4));
            for j in 0..100 {
                let t = TAU * (j as f64 / 99.0);
                on = on.max(g_sphere(&param_phi(disc, s, t)?.nu4).abs());
                if i == 0 {
                    let c = param_phi(disc, 0.0, t)?;
                    let d = param_phi(disc, 0.0, TAU - t)?;
                    two = two.max(c.distance(&d.nu4));
                }
            }
        }
    }

    // Closed forms on the two coordinate planes through the self-tangency
    // points, checked exactly.
    let q = Rational64::new;
    let (zero, two_q) = (q(0, 1), q(2, 1));
    let mut hess_bad = Vec::new();
    for (s, t) in [
        (q(1, 1), q(1, 1)),
        (q(3, 10), q(7, 10)),
        (q(-2, 3), q(5, 4)),
    ] {
        let want_a = diag([two_q * (s * s + t * t), -two_q * t * t, zero, zero]);
        let want_b = diag([two_q * (t * t - s * s), zero, zero, -two_q * s * s]);
        if hessian_f(&[zero, zero, s, t]) != want_a {
            hess_bad.push(format!("(0,0,{s},{t})"));
        }
        if hessian_f(&[zero, s, t, zero]) != want_b {
            hess_bad.push(format!("(0,{s},{t},0)"));
        }
    }
    let mut fd = 0.0f64;
    let h = FD_STEP;
    for k in 0..100 {
        let x: [f64; 4] = kronecker(k, cfg.seed + 3, -1.0, 1.0);
        let an = hessian_f(&x);
        for i in 0..4 {
            for j in 0..4 {
                let f = |di: f64, dj: f64| {
                    let mut y = x;
                    y[i] += di;
                    y[j] += dj;
                    f_critical(&y)
                };
                let d2 = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4.0 * h * h);
                fd = fd.max((d2 - an[i][j]).abs());
            }
        }
    }
    let mut hess = check(S, "hessian", fd, BOUND_FD);
    if !hess_bad.is_empty() {
        hess.pass = false;
        hess.detail = format!("closed form mismatch at {}", hess_bad.join(", "));
    }

    Ok(vec![
        nf_check,
        check(S, "conoid_on_surface", on, BOUND_ON_SURFACE),
        check(S, "conoid_two_to_one", two, BOUND_TWO_TO_ONE),
        hess,
    ])
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Identities => "identities",
        Suite::Tables => "tables",
        Suite::Strata => "strata",
        Suite::NormalForms => "normal-forms",
        Suite::All => "all",
    }
}

pub fn collect(suite: Suite, cfg: &RunConfig) -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(identities(cfg));
    }
    if matches!(suite, Suite::Tables | Suite::All) {
        checks.extend(tables(cfg)?);
    }
    if matches!(suite, Suite::Strata | Suite::All) {
        checks.extend(strata(cfg)?);
    }
    if matches!(suite, Suite::NormalForms | Suite::All) {
        checks.extend(normal_forms(cfg)?);
    }
    Ok(checks)
}

pub fn run(suite: Suite, cfg: &RunConfig) -> CliResult<()> {
    let start = Instant::now();
    let checks = collect(suite, cfg)?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    for c in &checks {
        eprintln!(
            "{} {:<13} {:<30} {:.3e} (bound {:.0e}){}",
            if c.pass { "PASS" } else { "FAIL" },
            c.suite,
            c.name,
            c.max_residual,
            c.bound,
            if c.detail.is_empty() {
                String::new()
            } else {
                format!(": {}", c.detail)
            }
        );
    }
    eprintln!(
        "{}/{} checks passed in {:.1}s",
        checks.len() - failed,
        checks.len(),
        start.elapsed().as_secs_f64()
    );
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "suite": suite_name(suite),
        "config": cfg,
        "checks": checks,
        "passed": checks.len() - failed,
        "failed": failed,
        "pass": failed == 0,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    if failed > 0 {
        return Err(CliError::Numerical(format!("{failed} checks failed")));
    }
    Ok(())
}
