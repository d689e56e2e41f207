use super::{nonempty, Outcome};
use crate::error::{Context, LabError, Result};
use crate::scenario::{BulkName, Dispersion, Permittivity, PermittivityName};
use crate::table::Table;
use polariton_core::material::{
    bulk_dispersion, coupling_profiles, permittivity_mc, permittivity_spc, reststrahlen_band, BulkModel, BulkParams,
    PermittivityModel, PermittivityVariant,
};
use polariton_core::units::HBAR_C;
use polariton_core::Error;
use serde_json::json;

/// ε at ω, NaN on a pole.
fn epsilon(m: &PermittivityModel, w: f64) -> polariton_core::Result<f64> {
    let e = match m.variant {
        PermittivityVariant::SpC => permittivity_spc(m, w),
        _ => permittivity_mc(m, w),
    };
    match e {
        Err(Error::Pole(_)) => Ok(f64::NAN),
        e => e,
    }
}

pub fn permittivity(p: &Permittivity) -> Result<Outcome> {
    let omegas = p.omega.values("params.omega")?;
    let models: Vec<(&str, PermittivityModel)> = match p.fit {
        Some(f) => {
            if p.omega_mat.is_some() || p.g.is_some() || !p.variants.is_empty() {
                return Err(LabError::schema("params.fit", "a fit excludes `omega_mat`, `g` and `variants`"));
            }
            let m =
                PermittivityModel::fit_polar(f.omega_to, f.omega_lo, f.epsilon_inf).context(|| "params.fit".into())?;
            vec![("polar", m)]
        }
        None => {
            let (Some(wm), Some(g)) = (p.omega_mat, p.g) else {
                return Err(LabError::schema("params", "give `omega_mat` and `g`, or a `fit` table"));
            };
            let names = if p.variants.is_empty() {
                vec![PermittivityName::Moc, PermittivityName::Spc]
            } else {
                p.variants.clone()
            };
            names
                .iter()
                .map(|n| {
                    PermittivityModel::new(wm, g, p.epsilon_inf, n.variant())
                        .map(|m| (n.tag(), m))
                        .context(|| "params".into())
                })
                .collect::<Result<_>>()?
        }
    };
    let wm = models[0].1.omega_mat;
    let mut t = Table::new();
    t.push("omega", "eV", omegas.clone());
    t.push("omega/omega_mat", "1", omegas.iter().map(|w| w / wm).collect());
    for (tag, m) in &models {
        let eps = omegas
            .iter()
            .map(|&w| epsilon(m, w).context(|| format!("eps_{tag} at omega = {w}")))
            .collect::<Result<Vec<_>>>()?;
        t.push(format!("eps_{tag}"), "1", eps);
    }
    let (to, lo) = reststrahlen_band(&models[0].1);
    let details = json!({
        "omega_mat": wm,
        "g": models[0].1.g,
        "epsilon_inf": models[0].1.epsilon_inf,
        "band": [to, lo],
    });
    Ok(Outcome::new(t, details))
}

fn bulk_tag(m: BulkModel) -> &'static str {
    match m {
        BulkModel::MoC => "mc",
        m => m.name(),
    }
}

pub fn dispersion(p: &Dispersion) -> Result<Outcome> {
    nonempty(&p.models, "params.models")?;
    let bp = BulkParams::new(p.omega_to, p.g, p.epsilon_inf).context(|| "params".into())?;
    let ratios = p.ck_ratio.values("params.ck_ratio")?;
    let ks: Vec<f64> = ratios.iter().map(|r| r * p.omega_to / HBAR_C).collect();
    let mut t = Table::new();
    t.push("ck/omega_to", "1", ratios);
    t.push("k", "1/nm", ks.clone());
    let norm = |v: &[f64]| v.iter().map(|x| x / p.omega_to).collect::<Vec<_>>();
    for name in &p.models {
        let m: BulkModel = BulkName::model(*name);
        let [lower, upper] = bulk_dispersion(m, &bp, &ks).context(|| format!("{} dispersion", m.name()))?;
        let g = coupling_profiles(m, &bp, &ks).context(|| format!("{} coupling", m.name()))?;
        let tag = bulk_tag(m);
        t.push(format!("omega_lower_{tag}"), "omega_to", norm(&lower.omega));
        t.push(format!("omega_upper_{tag}"), "omega_to", norm(&upper.omega));
        t.push(format!("g_{tag}"), "omega_to", norm(&g));
    }
    let details = json!({
        "omega_to": p.omega_to,
        "omega_lo": bp.omega_lo(),
        "g": p.g,
        "epsilon_inf": p.epsilon_inf,
    });
    Ok(Outcome::new(t, details))
}
