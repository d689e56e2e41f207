use super::{nano_scene, nonempty, Outcome};
use crate::error::{Context, Result};
use crate::scenario::{parse_variant, variant_tag, Loss, Spectrum};
use crate::table::Table;
use polariton_core::driven::{
    driven_mc, driven_response, driven_spc, local_maxima, scattering_cross_section, DriveSpec, LossModel,
    ResponseAmplitudes,
};
use polariton_core::fields::NanoparticleScene;
use polariton_core::models::{CoupledModel, ModelVariant};
use rayon::prelude::*;
use serde_json::json;

/// Response to a unit incident field, through the dedicated entry points
/// where the loss convention allows.
pub(super) fn respond(
    model: &CoupledModel,
    scene: &NanoparticleScene,
    omega: f64,
    loss: LossModel,
) -> polariton_core::Result<ResponseAmplitudes> {
    let drive = DriveSpec::new(1.0, omega, scene.f_cav, scene.f_mat)?;
    match (model.variant, loss) {
        (ModelVariant::SpC, LossModel::ComplexFrequency) => driven_spc(model, &drive),
        (ModelVariant::MoC, LossModel::ComplexFrequency) => driven_mc(model, &drive),
        _ => driven_response(model, &drive, loss),
    }
}

pub fn spectrum(p: &Spectrum) -> Result<Outcome> {
    let base = nano_scene(&p.scene, "params.scene")?;
    let omegas = p.omega.values("params.omega")?;
    nonempty(&p.curves, "params.curves")?;
    let loss = p.loss.model();
    let mut t = Table::new();
    t.push("omega", "eV", omegas.clone());
    t.push("omega-omega_cav", "eV", omegas.iter().map(|w| w - base.omega_cav).collect());
    let mut curves = Vec::new();
    for (i, c) in p.curves.iter().enumerate() {
        let path = format!("params.curves[{i}]");
        let variant = parse_variant(&c.variant, &format!("{path}.variant"))?;
        let mut scene = base;
        if let Some(wm) = c.omega_mat {
            scene.omega_mat = wm;
        }
        let ctx = || format!("curve `{}`", c.label);
        let g = match c.g {
            Some(g) => g,
            None => scene.coupling().context(ctx)?,
        };
        let model = CoupledModel::new(scene.pair().context(ctx)?, variant, g).context(ctx)?;
        let sigma = omegas
            .par_iter()
            .map(|&w| {
                let r = respond(&model, &scene, w, loss)?;
                scattering_cross_section(&r, &scene.n_dcav, &scene.n_dmat, 1.0, w)
            })
            .collect::<polariton_core::Result<Vec<f64>>>()
            .context(ctx)?;
        let e = model.eigenfrequencies();
        let peaks: Vec<[f64; 2]> = local_maxima(&omegas, &sigma).into_iter().map(|(x, y)| [x, y]).collect();
        curves.push(json!({
            "label": c.label,
            "variant": variant_tag(variant),
            "g": g,
            "omega_mat": scene.omega_mat,
            "omega_plus": [e.omega_plus.re, e.omega_plus.im],
            "omega_minus": [e.omega_minus.re, e.omega_minus.im],
            "peaks": peaks,
        }));
        t.push(format!("sigma_{}", c.label), "nm^2", sigma);
    }
    let details = json!({
        "loss": match p.loss { Loss::ComplexFrequency => "complex_frequency", Loss::Viscous => "viscous" },
        "f_cav_charge": base.f_cav.charge(),
        "f_mat_charge": base.f_mat.charge(),
        "geometric_g": base.coupling().ok(),
        "curves": curves,
    });
    Ok(Outcome::new(t, details))
}
