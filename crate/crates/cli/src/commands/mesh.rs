use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use resonance_core::critical::Disc;
use resonance_core::strata::{mesh_surface, SurfaceMesh};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{float, write_file};
use crate::{DiscArg, MeshFormat};

fn disc_name(d: Disc) -> &'static str {
    match d {
        Disc::Plus => "plus",
        Disc::Minus => "minus",
    }
}

pub fn run(
    disc: DiscArg,
    resolution: usize,
    format: MeshFormat,
    out: &Path,
    cfg: &RunConfig,
) -> CliResult<()> {
    if resolution < 8 || !resolution.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "--resolution must be even and at least 8, got {resolution}"
        )));
    }
    let discs = match disc {
        DiscArg::Plus => vec![Disc::Plus],
        DiscArg::Minus => vec![Disc::Minus],
        DiscArg::Both => vec![Disc::Plus, Disc::Minus],
    };
    let meshes = discs
        .par_iter()
        .map(|&d| mesh_surface(d, resolution, cfg.nu5))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        MeshFormat::Obj => write_file(out, |w| write_obj(w, &meshes, cfg.nu5))?,
        MeshFormat::Csv => write_file(out, |w| write_csv(w, &meshes))?,
    }
    let (v, f) = meshes.iter().fold((0, 0), |(v, f), m| {
        (v + m.vertices.len(), f + m.triangles.len())
    });
    eprintln!("{v} vertices, {f} triangles -> {}", out.display());
    Ok(())
}

/// Vertices are projected to the chart `(ν₁, ν₂, ν₄)`; `ν₃` and the
/// stratum ride along in a comment line before each vertex.
fn write_obj(w: &mut impl Write, meshes: &[SurfaceMesh], nu5: f64) -> std::io::Result<()> {
    writeln!(w, "# resonance-atlas critical surface")?;
    writeln!(w, "# coordinates: x=nu1 y=nu2 z=nu4; nu5={}", float(nu5))?;
    let mut offset = 0;
    for m in meshes {
        writeln!(w, "o conoid_{}", disc_name(m.disc))?;
        for v in &m.vertices {
            writeln!(w, "# stratum {} nu3 {}", v.stratum, float(v.nu[2]))?;
            writeln!(
                w,
                "v {} {} {}",
                float(v.nu[0]),
                float(v.nu[1]),
                float(v.nu[3])
            )?;
        }
        for t in &m.triangles {
            writeln!(
                w,
                "f {} {} {}",
                t[0] + offset + 1,
                t[1] + offset + 1,
                t[2] + offset + 1
            )?;
        }
        offset += m.vertices.len();
    }
    Ok(())
}

fn write_csv(w: &mut impl Write, meshes: &[SurfaceMesh]) -> std::io::Result<()> {
    writeln!(w, "s,t,nu1,nu2,nu3,nu4,stratum,disc")?;
    for m in meshes {
        for v in &m.vertices {
            let [a, b, c, d] = v.nu.map(float);
            writeln!(
                w,
                "{},{},{a},{b},{c},{d},{},{}",
                float(v.s),
                float(v.t),
                v.stratum,
                disc_name(m.disc)
            )?;
        }
    }
    Ok(())
}
