use resonance_core::critical::SpherePoint;
use resonance_core::strata::classify_point_detailed_with;
use serde_json::json;

use crate::config::{check_nu5, RunConfig};
use crate::error::{CliError, CliResult};
use crate::SCHEMA_VERSION;

pub fn run(nu: &[f64], as_json: bool, cfg: &RunConfig) -> CliResult<()> {
    let v = [nu[0], nu[1], nu[2], nu[3]];
    let nu5 = nu.get(4).copied().unwrap_or(cfg.nu5);
    check_nu5(nu5)?;
    if v.iter().all(|&x| x == 0.0) {
        return Err(CliError::Usage(
            "the zero vector has no direction on the sphere".into(),
        ));
    }
    let p = SpherePoint::normalize(v).map_err(|e| CliError::Usage(e.to_string()))?;
    let c = classify_point_detailed_with(&p, nu5, cfg.tol, cfg.cluster_tol)?;

    if as_json {
        let record = json!({
            "schema_version": SCHEMA_VERSION,
            "input": nu,
            "normalized": p.nu4,
            "nu5": nu5,
            "stratum": c.stratum,
            "dimension": c.stratum.dimension(),
            "eigenvalues": c.spectrum.eigenvalues.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            "config": c.config.code.tag(),
            "config_symbol": c.config.code.symbol(),
            "max_real_part": c.spectrum.max_real_part,
            "stable": c.stable,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&record).expect("serializable")
        );
    } else {
        println!(
            "{} {} max_re={:.6e} stable={}",
            c.stratum, c.config.code, c.spectrum.max_real_part, c.stable
        );
    }
    Ok(())
}
