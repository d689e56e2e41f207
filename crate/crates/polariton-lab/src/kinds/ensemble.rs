use super::{nonempty, Outcome};
use crate::error::{Context, LabError, Result};
use crate::scenario::{vec3, Ensemble, LatticeSpec};
use crate::table::Table;
use polariton_core::ensemble::{
    build_full_system, full_vs_reduced_check, CavityMode, DipoleLattice, DipoleSum, FabryPerotSpec,
};
use polariton_core::units::{OscillatorStrength, HBAR_C};
use serde_json::json;
use std::f64::consts::PI;

fn cavity(p: &Ensemble) -> Result<FabryPerotSpec> {
    let c = &p.cavity;
    nonempty(&c.modes, "params.cavity.modes")?;
    let l = match (c.l_cav, c.fundamental) {
        (Some(l), None) => l,
        (None, Some(w)) if w > 0.0 && c.epsilon_inf > 0.0 => PI * HBAR_C / (c.epsilon_inf.sqrt() * w),
        (None, Some(w)) => {
            return Err(LabError::schema("params.cavity.fundamental", format!("must be positive, got {w}")))
        }
        _ => return Err(LabError::schema("params.cavity", "give exactly one of `l_cav` and `fundamental`")),
    };
    let modes = c.modes.iter().map(|m| CavityMode { n: m.n, k_par: m.k_par }).collect();
    FabryPerotSpec::new(l, c.period, modes, c.epsilon_inf).context(|| "params.cavity".into())
}

fn lattice(spec: &LatticeSpec, fp: &FabryPerotSpec) -> Result<DipoleLattice> {
    let ctx = || "params.lattice".to_string();
    match *spec {
        LatticeSpec::Filling { counts, orientation, charge, omega_dip } => {
            let f = OscillatorStrength::from_charge(charge).context(ctx)?;
            DipoleLattice::filling(fp, counts, vec3(orientation), f, omega_dip).context(ctx)
        }
        LatticeSpec::CubicBlock { counts, spacing, origin, orientation, charge, omega_dip } => {
            let f = OscillatorStrength::from_charge(charge).context(ctx)?;
            DipoleLattice::cubic_block(counts, spacing, vec3(origin), vec3(orientation), f, omega_dip).context(ctx)
        }
    }
}

pub fn ensemble(p: &Ensemble) -> Result<Outcome> {
    let fp = cavity(p)?;
    let lat = lattice(&p.lattice, &fp)?;
    let sum = match p.dipole_sum {
        None => DipoleSum::OFF,
        Some(s) => DipoleSum { enabled: s.enabled, images: s.images, cutoff_factor: s.cutoff_factor },
    };
    let sys = build_full_system(&lat, &fp, sum).context(|| "full system".into())?;
    let reports = fp
        .modes
        .iter()
        .map(|m| full_vs_reduced_check(&lat, &fp, m, sum).context(|| format!("mode n = {}, k = {:?}", m.n, m.k_par)))
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new();
    let col = |f: &dyn Fn(usize) -> f64| (0..reports.len()).map(f).collect::<Vec<f64>>();
    t.push("n", "1", col(&|i| fp.modes[i].n as f64));
    t.push("k_x", "1/nm", col(&|i| fp.modes[i].k_par[0]));
    t.push("k_y", "1/nm", col(&|i| fp.modes[i].k_par[1]));
    t.push("omega_cav", "eV", col(&|i| reports[i].collective.omega_cav));
    t.push("n_eff", "1", col(&|i| reports[i].collective.n_eff));
    t.push("g_shift", "eV", col(&|i| reports[i].collective.g_shift));
    t.push("omega_mat_collective", "eV", col(&|i| reports[i].collective.omega_mat));
    t.push("g_collective", "eV", col(&|i| reports[i].collective.g_coll));
    t.push("full_plus", "eV", col(&|i| reports[i].full.0));
    t.push("full_minus", "eV", col(&|i| reports[i].full.1));
    t.push("reduced_plus", "eV", col(&|i| reports[i].reduced.omega_plus.re));
    t.push("reduced_minus", "eV", col(&|i| reports[i].reduced.omega_minus.re));
    t.push("max_relative_deviation", "1", col(&|i| reports[i].max_relative_deviation));
    let details = json!({
        "n_dipoles": lat.len(),
        "l_cav": fp.l_cav,
        "period": fp.period,
        "dipole_sum": {
            "enabled": sum.enabled,
            "images": sum.images,
            "cutoff_factor": sum.cutoff_factor,
        },
        "system_size": sys.n_dip + sys.n_modes,
        "structure_defect": sys.structure_defect(),
    });
    Ok(Outcome::new(t, details))
}
