use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use resonance_core::strata::{sphere_samples, stability_report_with, StratumLabel};
use serde_json::json;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{float, write_file, write_json};
use crate::SCHEMA_VERSION;

/// `<out>.summary.json` next to the CSV.
pub fn summary_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".summary.json");
    PathBuf::from(s)
}

pub fn run(n: usize, out: &Path, cfg: &RunConfig) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let samples = sphere_samples(n, cfg.seed);
    let rep = stability_report_with(&samples, cfg.nu5, cfg.tol, cfg.cluster_tol);

    write_file(out, |w| {
        writeln!(w, "nu1,nu2,nu3,nu4,stratum,config,max_re,stable")?;
        for r in &rep.samples {
            let [a, b, c, d] = r.nu.map(float);
            let stratum = r.stratum.map_or("error".to_string(), |l| l.to_string());
            let config = r.config.map_or("error", |c| c.tag());
            writeln!(
                w,
                "{a},{b},{c},{d},{stratum},{config},{},{}",
                float(r.max_real_part),
                r.stable
            )?;
        }
        Ok(())
    })?;

    let counts: BTreeMap<String, usize> = StratumLabel::ALL
        .iter()
        .map(|l| (l.to_string(), rep.counts.get(l).copied().unwrap_or(0)))
        .collect();
    let summary = json!({
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "seed": cfg.seed,
        "nu5": cfg.nu5,
        "tol": cfg.tol,
        "cluster_tol": cfg.cluster_tol,
        "counts": counts,
        "failures": rep.failures,
        "stable_fraction": rep.stable_fraction,
        "stable_strata": rep.stable_strata,
        "stable_only_in_v3": rep.stable_only_in_v3(),
    });
    write_json(&summary_path(out), &summary)?;
    eprintln!(
        "{n} samples, stable fraction {:.4}, {} failures -> {}",
        rep.stable_fraction,
        rep.failures,
        out.display()
    );
    if rep.failures > 0 {
        return Err(CliError::Numerical(format!(
            "{} samples could not be classified",
            rep.failures
        )));
    }
    Ok(())
}
