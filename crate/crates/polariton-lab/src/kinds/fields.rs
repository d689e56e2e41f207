use super::spectrum::respond;
use super::{emitter_strength, line_points, nano_scene, nonempty, Outcome};
use crate::error::{Context, LabError, Result};
use crate::scenario::{parse_variant, variant_tag, vec3, Axis, BoxScene, FieldScene, Fieldmap, Fractions};
use crate::table::Table;
use polariton_core::driven::LossModel;
use polariton_core::fields::{
    contribution_fractions, hybrid_field_map_dielectric, mode_profile_box, quasistatic_field_map, realified_ratio,
    realifying_phase, BoxCavityScene, FieldSample, DEFAULT_CORE_RADIUS,
};
use polariton_core::models::{CoupledModel, ModelVariant};
use polariton_core::units::{coupling_from_mode_volume, oscillator_strength_to_dipole_moment};
use polariton_core::C64;
use rayon::prelude::*;
use serde_json::json;

fn box_scene(s: &BoxScene, omega_mat: f64, path: &str) -> Result<BoxCavityScene> {
    let f = emitter_strength(&s.emitter, omega_mat, &format!("{path}.emitter"))?;
    BoxCavityScene::new(s.l, s.v_eff, s.omega_cav, vec3(s.r_mat), vec3(s.n_d), f, omega_mat)
        .context(|| path.to_string())
}

/// Momentum coupling from the mode volume: field profile at the emitter
/// times the projection of the dipole on the z-polarized mode.
fn box_coupling(scene: &BoxCavityScene) -> polariton_core::Result<f64> {
    let xi = mode_profile_box(scene, &scene.r_mat)?;
    coupling_from_mode_volume(scene.f_mat, scene.v_eff, xi, scene.n_d.z)
}

fn component(s: &FieldSample, axis: Axis, phase: C64) -> [f64; 3] {
    if s.excluded {
        return [f64::NAN; 3];
    }
    let i = axis.index();
    [s.e_cav[i], s.e_mat[i], s.e_total[i]].map(|z| (z * phase).re)
}

pub fn fieldmap(p: &Fieldmap) -> Result<Outcome> {
    let positions = line_points(vec3(p.line.from), vec3(p.line.to), p.line.points, "params.line")?;
    nonempty(&p.branches, "params.branches")?;
    let core = p.core_radius.unwrap_or(DEFAULT_CORE_RADIUS);
    let from = vec3(p.line.from);
    let mut t = Table::new();
    t.push("s", "nm", positions.iter().map(|r| (r - from).norm()).collect());
    for (i, a) in ["x", "y", "z"].iter().enumerate() {
        t.push(*a, "nm", positions.iter().map(|r| r[i]).collect());
    }
    let mut branch_details = Vec::new();
    let (axis, g, geometry) = match &p.scene {
        FieldScene::Box(b) => {
            if p.variant.is_some() {
                return Err(LabError::schema("params.variant", "the box cavity is always a momentum-coupled model"));
            }
            let scene = box_scene(b, b.omega_mat, "params.scene")?;
            let g = match p.g {
                Some(g) => g,
                None => box_coupling(&scene).context(|| "mode-volume coupling".into())?,
            };
            let axis = p.component.unwrap_or(Axis::Z);
            let modes = scene.model(g).context(|| "box model".into())?.eigenfrequencies();
            for b in &p.branches {
                let samples = hybrid_field_map_dielectric(&scene, g, b.branch(), &positions, core)
                    .context(|| format!("{} branch", b.tag()))?;
                push_fields(&mut t, &samples, axis, b.tag(), C64::new(1.0, 0.0));
                let model = scene.model(g).context(|| "box model".into())?;
                branch_details.push(json!({
                    "branch": b.tag(),
                    "omega": modes.omega(b.branch()).re,
                    "realified_ratio": realified_ratio(&model, b.branch()).context(|| format!("{} branch", b.tag()))?,
                }));
            }
            (axis, g, "box")
        }
        FieldScene::Nanoparticle(n) => {
            let scene = nano_scene(n, "params.scene")?;
            let variant = match &p.variant {
                Some(v) => parse_variant(v, "params.variant")?,
                None => ModelVariant::SpC,
            };
            let g = match p.g {
                Some(g) => g,
                None => scene.coupling().context(|| "geometric coupling".into())?,
            };
            let axis = p.component.unwrap_or(Axis::X);
            let model = CoupledModel::new(scene.pair().context(|| "scene".into())?, variant, g)
                .context(|| "nanoparticle model".into())?;
            let modes = model.eigenfrequencies();
            for b in &p.branches {
                let w = modes.omega(b.branch()).re;
                let ctx = || format!("{} branch at omega = {w}", b.tag());
                let resp = respond(&model, &scene, w, LossModel::ComplexFrequency).context(ctx)?;
                let samples = quasistatic_field_map(&scene, &resp, &positions, core).context(ctx)?;
                let phase = realifying_phase(resp.d_cav);
                push_fields(&mut t, &samples, axis, b.tag(), phase);
                let (dc, dm) = (resp.d_cav * phase, resp.d_mat * phase);
                branch_details.push(json!({
                    "branch": b.tag(),
                    "omega": w,
                    "d_cav": [dc.re, dc.im],
                    "d_mat": [dm.re, dm.im],
                    "variant": variant_tag(variant),
                }));
            }
            (axis, g, "nanoparticle")
        }
    };
    let details = json!({
        "geometry": geometry,
        "g": g,
        "component": axis.tag(),
        "core_radius": core,
        "branches": branch_details,
    });
    Ok(Outcome::new(t, details))
}

fn push_fields(t: &mut Table, samples: &[FieldSample], axis: Axis, tag: &str, phase: C64) {
    let rows: Vec<[f64; 3]> = samples.iter().map(|s| component(s, axis, phase)).collect();
    for (k, name) in ["e_cav", "e_mat", "e_total"].iter().enumerate() {
        t.push(format!("{name}_{tag}_{}", axis.tag()), "arb.", rows.iter().map(|r| r[k]).collect());
    }
}

pub fn fractions(p: &Fractions) -> Result<Outcome> {
    let wms = p.omega_mat.values("params.omega_mat")?;
    let position = vec3(p.position);
    let rows = wms
        .par_iter()
        .map(|&wm| {
            let scene = box_scene(&p.scene, wm, "params.scene")?;
            let ctx = || format!("omega_mat = {wm}");
            let g = match p.g {
                Some(g) => g,
                None => box_coupling(&scene).context(ctx)?,
            };
            let mut out = [0.0; 4];
            for (k, b) in
                [polariton_core::models::Branch::Plus, polariton_core::models::Branch::Minus].into_iter().enumerate()
            {
                let (c, m) = contribution_fractions(&scene, g, b, &position).context(ctx)?;
                out[2 * k] = c;
                out[2 * k + 1] = m;
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let wc = p.scene.omega_cav;
    let mut t = Table::new();
    t.push("omega_mat-omega_cav", "eV", wms.iter().map(|w| w - wc).collect());
    t.push("omega_mat", "eV", wms.clone());
    for (k, name) in ["sigma_cav_plus", "sigma_mat_plus", "sigma_cav_minus", "sigma_mat_minus"].iter().enumerate() {
        t.push(*name, "1", rows.iter().map(|r| r[k]).collect());
    }
    let reference = box_scene(&p.scene, p.scene.omega_mat, "params.scene")?;
    let mu = oscillator_strength_to_dipole_moment(reference.f_mat, reference.omega_mat)
        .context(|| "dipole moment".into())?;
    let details = json!({
        "position": p.position,
        "g": p.g,
        "mode_volume_g": box_coupling(&reference).ok(),
        "omega_cav": wc,
        "dipole_moment_debye_at_scene_omega_mat": mu,
    });
    Ok(Outcome::new(t, details))
}
