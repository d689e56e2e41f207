use super::{nonempty, Outcome};
use crate::error::{Context, LabError, Result};
use crate::scenario::{parse_variant, variant_tag, EigenSweep, MinSplitting};
use crate::table::Table;
use polariton_core::models::{
    alternative_model_equivalence, dipole_dressed_matter, linearized_eigenfrequencies, min_splitting as core_min,
    spc_lower_branch_exists, CoupledModel, ModelVariant, OscillatorPair,
};
use polariton_core::Error;
use rayon::prelude::*;
use serde_json::json;

fn variants(names: &[String], path: &str) -> Result<Vec<ModelVariant>> {
    names.iter().enumerate().map(|(i, s)| parse_variant(s, &format!("{path}[{i}]"))).collect()
}

fn check_positive(v: f64, path: &str) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(LabError::schema(path, format!("must be positive, got {v}")))
    }
}

/// (ω₊, ω₋) of `v` with NaN for a lower branch that is not real.
fn branches(v: ModelVariant, wc: f64, wm: f64, g: f64) -> polariton_core::Result<(f64, f64)> {
    let pair = OscillatorPair::lossless(wc, wm)?;
    let model = match v {
        ModelVariant::Linearized => return linearized_eigenfrequencies(wc, wm, g.into()),
        ModelVariant::SpC | ModelVariant::MoC => CoupledModel::new(pair, v, g)?,
        ModelVariant::AltCoulombDressedCavity => alternative_model_equivalence(&CoupledModel::moc(wc, wm, g)?)?,
        ModelVariant::AltDipoleDressedMatter => dipole_dressed_matter(&CoupledModel::moc(wc, wm, g)?)?,
        ModelVariant::AltDipoleDipoleDressedCavity => {
            match alternative_model_equivalence(&CoupledModel::spc(wc, wm, g)?) {
                Ok(m) => m,
                // the dressing fails exactly where the SpC lower branch does
                Err(Error::InvalidDressing(_)) => return Ok((f64::NAN, f64::NAN)),
                Err(e) => return Err(e),
            }
        }
    };
    let e = model.eigenfrequencies();
    let lower_real = match v {
        ModelVariant::SpC => spc_lower_branch_exists(wc, wm, g),
        _ => e.lower_branch_real,
    };
    Ok((e.omega_plus.re, if lower_real { e.omega_minus.re } else { f64::NAN }))
}

pub fn eigen_sweep(p: &EigenSweep) -> Result<Outcome> {
    let wm = check_positive(p.omega_mat, "params.omega_mat")?;
    let ratios = p.cavity_ratio.values("params.cavity_ratio")?;
    nonempty(&p.variants, "params.variants")?;
    let vs = variants(&p.variants, "params.variants")?;
    let scaled = variants(&p.sqrt_scaled, "params.sqrt_scaled")?;
    let mut t = Table::new();
    t.push("omega_cav/omega_mat", "1", ratios.clone());
    for &v in &vs {
        let sqrt = scaled.contains(&v);
        let rows = ratios
            .par_iter()
            .map(|&r| {
                let g = if sqrt { p.g * r.sqrt() } else { p.g };
                branches(v, r * wm, wm, g).context(|| format!("{} at omega_cav/omega_mat = {r}", v.name()))
            })
            .collect::<Result<Vec<_>>>()?;
        let tag = variant_tag(v);
        t.push(format!("omega_plus_{tag}"), "omega_mat", rows.iter().map(|r| r.0 / wm).collect());
        t.push(format!("omega_minus_{tag}"), "omega_mat", rows.iter().map(|r| r.1 / wm).collect());
    }
    let details = json!({
        "omega_mat": wm,
        "g": p.g,
        "variants": vs.iter().map(|&v| variant_tag(v)).collect::<Vec<_>>(),
        "sqrt_scaled": scaled.iter().map(|&v| variant_tag(v)).collect::<Vec<_>>(),
        "spc_cutoff_ratio": (2.0 * p.g / wm).powi(2),
    });
    Ok(Outcome::new(t, details))
}

pub fn min_splitting(p: &MinSplitting) -> Result<Outcome> {
    let wm = check_positive(p.omega_mat, "params.omega_mat")?;
    let gs = p.g_ratio.values("params.g_ratio")?;
    let sweep: Vec<f64> = p.cavity_ratio.values("params.cavity_ratio")?.iter().map(|r| r * wm).collect();
    nonempty(&p.variants, "params.variants")?;
    let vs = variants(&p.variants, "params.variants")?;
    let mut t = Table::new();
    t.push("g/omega_mat", "1", gs.clone());
    for &v in &vs {
        let rows = gs
            .par_iter()
            .map(|&g| core_min(v, g * wm, wm, &sweep).context(|| format!("{} at g/omega_mat = {g}", v.name())))
            .collect::<Result<Vec<_>>>()?;
        let tag = variant_tag(v);
        t.push(format!("omega_min_{tag}"), "omega_mat", rows.iter().map(|r| r.0 / wm).collect());
        t.push(format!("omega_cav_at_min_{tag}"), "omega_mat", rows.iter().map(|r| r.1 / wm).collect());
    }
    let details = json!({
        "omega_mat": wm,
        "variants": vs.iter().map(|&v| variant_tag(v)).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(t, details))
}
