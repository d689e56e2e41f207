use super::{nano_scene, nonempty, Outcome};
use crate::error::{Context, LabError, Result};
use crate::scenario::Oracle;
use crate::table::Table;
use polariton_core::driven::{driven_response, polarizability_oracle, DriveSpec, LossModel};
use polariton_core::hopfield::{
    fock_single_excitation_gaps, frame_equivalence_check, hopfield_quartic_eigen, truncated_fock_spectrum,
    HopfieldParams,
};
use polariton_core::models::{CoupledModel, ModelVariant};
use polariton_core::C64;
use rayon::prelude::*;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleCheck {
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl OracleCheck {
    pub fn pass(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

fn tolerance(t: f64) -> Result<f64> {
    if t >= 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(LabError::schema("params.tolerance", format!("must be a finite non-negative number, got {t}")))
    }
}

pub fn oracle(p: &Oracle) -> Result<Outcome> {
    match p {
        Oracle::Hopfield { points, n_max, tolerance: tol } => hopfield(points, *n_max, tolerance(*tol)?),
        Oracle::Polarizability { scene, omega, tolerance: tol } => {
            let scene = nano_scene(scene, "params.scene")?;
            let omegas = omega.values("params.omega")?;
            polarizability(&scene, &omegas, tolerance(*tol)?)
        }
    }
}

fn hopfield(points: &[crate::scenario::HopfieldPoint], n_max: usize, tol: f64) -> Result<Outcome> {
    nonempty(points, "params.points")?;
    if n_max < 2 {
        return Err(LabError::schema("params.n_max", "must be at least 2"));
    }
    let rows = points
        .par_iter()
        .enumerate()
        .map(|(i, q)| {
            let ctx = || format!("params.points[{i}]");
            let p = HopfieldParams::new(q.omega_cav, q.omega_mat, q.g, q.d).context(ctx)?;
            let (wp, wm) = hopfield_quartic_eigen(&p).context(ctx)?;
            let f = fock_single_excitation_gaps(&p, n_max).context(ctx)?;
            let spectrum = truncated_fock_spectrum(&p, n_max, 1).context(ctx)?;
            let frames = frame_equivalence_check(&p, n_max).context(ctx)?;
            Ok([
                q.omega_cav,
                q.omega_mat,
                q.g,
                q.d,
                wp,
                wm,
                f.omega_plus,
                f.omega_minus,
                spectrum.excitation_energies[0],
                (f.omega_plus - wp).abs().max((f.omega_minus - wm).abs()),
                frames,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let names = [
        ("omega_cav", "eV"),
        ("omega_mat", "eV"),
        ("g_qed", "eV"),
        ("d", "eV"),
        ("quartic_plus", "eV"),
        ("quartic_minus", "eV"),
        ("fock_plus", "eV"),
        ("fock_minus", "eV"),
        ("fock_first_excitation", "eV"),
        ("gap_deviation", "eV"),
        ("frame_deviation", "eV"),
    ];
    let mut t = Table::new();
    for (k, (n, u)) in names.iter().enumerate() {
        t.push(*n, *u, rows.iter().map(|r| r[k]).collect());
    }
    let max_dev = rows.iter().map(|r| r[9]).fold(0.0, f64::max);
    let max_frame = rows.iter().map(|r| r[10]).fold(0.0, f64::max);
    let details = json!({ "check": "hopfield", "n_max": n_max, "max_frame_deviation": max_frame });
    Ok(Outcome { table: t, details, check: Some(OracleCheck { max_deviation: max_dev, tolerance: tol }) })
}

fn polarizability(scene: &polariton_core::fields::NanoparticleScene, omegas: &[f64], tol: f64) -> Result<Outcome> {
    let g = scene.coupling().context(|| "geometric coupling".into())?;
    let model = CoupledModel::new(scene.pair().context(|| "scene".into())?, ModelVariant::SpC, g)
        .context(|| "spring-coupled model".into())?;
    let rel = |a: C64, b: C64| if b.norm() == 0.0 { a.norm() } else { (a - b).norm() / b.norm() };
    let rows = omegas
        .par_iter()
        .map(|&w| {
            let ctx = || format!("omega = {w}");
            let drive = DriveSpec::new(1.0, w, scene.f_cav, scene.f_mat).context(ctx)?;
            let a = driven_response(&model, &drive, LossModel::Viscous).context(ctx)?;
            let b = polarizability_oracle(scene, 1.0, w).context(ctx)?;
            let dev = rel(a.d_cav, b.d_cav).max(rel(a.d_mat, b.d_mat));
            Ok([w, a.d_cav.re, a.d_cav.im, a.d_mat.re, a.d_mat.im, b.d_cav.re, b.d_cav.im, b.d_mat.re, b.d_mat.im, dev])
        })
        .collect::<Result<Vec<_>>>()?;
    let names = [
        ("omega", "eV"),
        ("d_cav_re", "arb."),
        ("d_cav_im", "arb."),
        ("d_mat_re", "arb."),
        ("d_mat_im", "arb."),
        ("oracle_d_cav_re", "arb."),
        ("oracle_d_cav_im", "arb."),
        ("oracle_d_mat_re", "arb."),
        ("oracle_d_mat_im", "arb."),
        ("relative_deviation", "1"),
    ];
    let mut t = Table::new();
    for (k, (n, u)) in names.iter().enumerate() {
        t.push(*n, *u, rows.iter().map(|r| r[k]).collect());
    }
    let max_dev = rows.iter().map(|r| r[9]).fold(0.0, f64::max);
    let details = json!({ "check": "polarizability", "g": g, "loss": "viscous" });
    Ok(Outcome { table: t, details, check: Some(OracleCheck { max_deviation: max_dev, tolerance: tol }) })
}
