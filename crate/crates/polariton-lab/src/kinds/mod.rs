//! One evaluator per scenario kind. Evaluators are pure: they turn
//! parameters into a table plus kind-specific details and never touch the
//! filesystem.

mod bulk;
mod coupled;
mod ensemble;
mod fields;
mod oracle;
mod spectrum;

use crate::error::{LabError, Result};
use crate::scenario::{Emitter, NanoScene, Params, Scenario};
use crate::table::Table;
use polariton_core::fields::NanoparticleScene;
use polariton_core::units::{dipole_moment_to_oscillator_strength, plasmon_oscillator_strength, OscillatorStrength};
use polariton_core::Vec3;

pub use oracle::OracleCheck;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub details: serde_json::Value,
    pub check: Option<OracleCheck>,
}

impl Outcome {
    fn new(table: Table, details: serde_json::Value) -> Self {
        Self { table, details, check: None }
    }
}

pub fn evaluate(s: &Scenario) -> Result<Outcome> {
    match &s.params {
        Params::EigenSweep(p) => coupled::eigen_sweep(p),
        Params::MinSplitting(p) => coupled::min_splitting(p),
        Params::Spectrum(p) => spectrum::spectrum(p),
        Params::Fieldmap(p) => fields::fieldmap(p),
        Params::Fractions(p) => fields::fractions(p),
        Params::Ensemble(p) => ensemble::ensemble(p),
        Params::Permittivity(p) => bulk::permittivity(p),
        Params::Dispersion(p) => bulk::dispersion(p),
        Params::Oracle(p) => oracle::oracle(p),
    }
}

use crate::error::Context;

fn emitter_strength(e: &Emitter, omega_mat: f64, path: &str) -> Result<OscillatorStrength> {
    match (e.charge, e.mu_debye) {
        (Some(q), None) => OscillatorStrength::from_charge(q).context(|| format!("{path}.charge")),
        (None, Some(mu)) => dipole_moment_to_oscillator_strength(mu, omega_mat).context(|| format!("{path}.mu_debye")),
        _ => Err(LabError::schema(path, "give exactly one of `charge` and `mu_debye`")),
    }
}

fn nano_scene(s: &NanoScene, path: &str) -> Result<NanoparticleScene> {
    let f_cav = match s.cavity_charge {
        Some(q) => OscillatorStrength::from_charge(q),
        None => plasmon_oscillator_strength(s.radius, s.omega_cav),
    }
    .context(|| format!("{path}: plasmon strength"))?;
    let scene = NanoparticleScene {
        radius: s.radius,
        r_cav: crate::scenario::vec3(s.r_cav),
        r_mat: crate::scenario::vec3(s.r_mat),
        n_dcav: crate::scenario::vec3(s.n_dcav),
        n_dmat: crate::scenario::vec3(s.n_dmat),
        f_cav,
        f_mat: emitter_strength(&s.emitter, s.omega_mat, &format!("{path}.emitter"))?,
        omega_cav: s.omega_cav,
        omega_mat: s.omega_mat,
        kappa: s.kappa,
        gamma: s.gamma,
    };
    scene.validate().context(|| path.to_string())?;
    Ok(scene)
}

fn line_points(from: Vec3, to: Vec3, n: usize, path: &str) -> Result<Vec<Vec3>> {
    match n {
        0 => Err(LabError::schema(format!("{path}.points"), "must be at least 1")),
        1 => Ok(vec![from]),
        n if n > 10_000_000 => Err(LabError::schema(format!("{path}.points"), "more than 10^7 points")),
        n => {
            Ok((0..n).map(|i| if i == n - 1 { to } else { from + (to - from) * (i as f64 / (n - 1) as f64) }).collect())
        }
    }
}

fn nonempty<T>(v: &[T], path: &str) -> Result<()> {
    if v.is_empty() {
        Err(LabError::schema(path, "must not be empty"))
    } else {
        Ok(())
    }
}
