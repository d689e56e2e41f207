//! Steady-state response of the coupled oscillators to a plane wave, the
//! resulting scattering cross section, and an independent solver built from
//! two Lorentz polarizabilities coupled by their near fields.

use crate::error::{positive, Error, Result};
use crate::fields::NanoparticleScene;
use crate::models::{CoupledModel, ModelVariant};
use crate::quadratic::Quadratic2;
use crate::units::{angular_factor, OscillatorStrength, DIPOLE_FIELD, HBAR_C};
use crate::{Vec3, C64};
use std::f64::consts::PI;

/// How decay rates enter the driven equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LossModel {
    /// ω_α → ω_α − i·rate/2 wherever ω_α appears, including the coupling
    /// prefactor √(ω_cav ω_mat).
    #[default]
    ComplexFrequency,
    /// Lorentz damping: ω_α² − ω² − iω·rate on the diagonal, real coupling.
    Viscous,
}

/// Plane-wave drive. The forces √f·|E| follow from the strengths and are
/// never set independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveSpec {
    pub e_inc: f64,
    pub omega: f64,
    pub f_cav: OscillatorStrength,
    pub f_mat: OscillatorStrength,
}

impl DriveSpec {
    pub fn new(e_inc: f64, omega: f64, f_cav: OscillatorStrength, f_mat: OscillatorStrength) -> Result<Self> {
        Ok(Self { e_inc: positive("E_inc", e_inc)?, omega: positive("omega", omega)?, f_cav, f_mat })
    }

    pub fn force_cav(&self) -> f64 {
        self.f_cav.charge() * self.e_inc
    }

    pub fn force_mat(&self) -> f64 {
        self.f_mat.charge() * self.e_inc
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseAmplitudes {
    pub x_cav: C64,
    pub x_mat: C64,
    pub d_cav: C64,
    pub d_mat: C64,
}

impl ResponseAmplitudes {
    fn from_x(x_cav: C64, x_mat: C64, f_cav: OscillatorStrength, f_mat: OscillatorStrength) -> Self {
        Self { x_cav, x_mat, d_cav: x_cav * f_cav.charge(), d_mat: x_mat * f_mat.charge() }
    }
}

/// The 2×2 system of `model` at drive frequency `omega`.
fn driven_system(model: &CoupledModel, omega: f64, loss: LossModel) -> Result<Quadratic2> {
    let p = model.pair;
    match loss {
        LossModel::ComplexFrequency => {
            model.system().ok_or_else(|| Error::Domain("the linearized model has no driven form".into()))
        }
        LossModel::Viscous => {
            let c = C64::new(p.omega_cav * p.omega_cav, -omega * p.kappa).sqrt();
            let m = C64::new(p.omega_mat * p.omega_mat, -omega * p.gamma).sqrt();
            let spring = matches!(
                model.variant,
                ModelVariant::SpC | ModelVariant::AltCoulombDressedCavity | ModelVariant::AltDipoleDressedMatter
            );
            match model.variant {
                ModelVariant::Linearized => Err(Error::Domain("the linearized model has no driven form".into())),
                _ if spring => Ok(Quadratic2 {
                    omega_c: c,
                    omega_m: m,
                    k: (2.0 * model.g * (p.omega_cav * p.omega_mat).sqrt()).into(),
                    g: 0.0.into(),
                }),
                _ => Ok(Quadratic2 { omega_c: c, omega_m: m, k: 0.0.into(), g: model.g.into() }),
            }
        }
    }
}

/// Response of any quadratic model variant under the given loss convention.
pub fn driven_response(model: &CoupledModel, drive: &DriveSpec, loss: LossModel) -> Result<ResponseAmplitudes> {
    let q = driven_system(model, drive.omega, loss)?;
    let x = q.solve(drive.omega.into(), [drive.force_cav().into(), drive.force_mat().into()])?;
    Ok(ResponseAmplitudes::from_x(x[0], x[1], drive.f_cav, drive.f_mat))
}

fn expect(model: &CoupledModel, v: ModelVariant) -> Result<()> {
    if model.variant == v {
        Ok(())
    } else {
        Err(Error::Domain(format!("expected a {} model, got {}", v.name(), model.variant.name())))
    }
}

/// Driven SpC amplitudes with complex bare frequencies.
pub fn driven_spc(model: &CoupledModel, drive: &DriveSpec) -> Result<ResponseAmplitudes> {
    expect(model, ModelVariant::SpC)?;
    driven_response(model, drive, LossModel::ComplexFrequency)
}

/// Driven MoC amplitudes with complex bare frequencies.
pub fn driven_mc(model: &CoupledModel, drive: &DriveSpec) -> Result<ResponseAmplitudes> {
    expect(model, ModelVariant::MoC)?;
    driven_response(model, drive, LossModel::ComplexFrequency)
}

/// σ = (8π/3)(ω/c)⁴|α|², with α the total induced dipole per unit field
/// expressed as a volume. Returns nm².
pub fn scattering_cross_section(
    resp: &ResponseAmplitudes,
    n_dcav: &Vec3,
    n_dmat: &Vec3,
    e_inc: f64,
    omega: f64,
) -> Result<f64> {
    let e_inc = positive("E_inc", e_inc)?;
    let omega = positive("omega", omega)?;
    let a = (n_dcav.map(C64::from) * resp.d_cav + n_dmat.map(C64::from) * resp.d_mat) / C64::from(e_inc);
    let k = omega / HBAR_C;
    Ok(8.0 * PI / 3.0 * k.powi(4) * DIPOLE_FIELD * DIPOLE_FIELD * a.norm_squared())
}

/// σ_sca over a frequency grid for a plane wave of unit amplitude.
pub fn cross_section_spectrum(
    model: &CoupledModel,
    f_cav: OscillatorStrength,
    f_mat: OscillatorStrength,
    n_dcav: &Vec3,
    n_dmat: &Vec3,
    omegas: &[f64],
    loss: LossModel,
) -> Result<Vec<f64>> {
    omegas
        .iter()
        .map(|&w| {
            let drive = DriveSpec::new(1.0, w, f_cav, f_mat)?;
            let r = driven_response(model, &drive, loss)?;
            scattering_cross_section(&r, n_dcav, n_dmat, 1.0, w)
        })
        .collect()
}

/// Interior local maxima of a sampled curve as (x, y), refined by a
/// parabola through the three samples around each maximum.
pub fn local_maxima(x: &[f64], y: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 1..y.len().saturating_sub(1) {
        if y[i] > y[i - 1] && y[i] >= y[i + 1] {
            let (a, b, c) = (y[i - 1], y[i], y[i + 1]);
            let den = a - 2.0 * b + c;
            let t = if den != 0.0 { 0.5 * (a - c) / den } else { 0.0 };
            let h = 0.5 * (x[i + 1] - x[i - 1]);
            out.push((x[i] + t * h, b - 0.25 * (a - c) * t));
        }
    }
    out
}

/// Two Lorentz polarizabilities α_j = f_j/(ω_j² − ω² − iωΓ_j), each driven
/// by the incident field plus the quasistatic field of the other dipole.
pub fn polarizability_oracle(scene: &NanoparticleScene, e_inc: f64, omega: f64) -> Result<ResponseAmplitudes> {
    let e_inc = positive("E_inc", e_inc)?;
    let omega = positive("omega", omega)?;
    let lorentz = |f: OscillatorStrength, w0: f64, rate: f64| {
        C64::from(f.value()) / C64::new(w0 * w0 - omega * omega, -omega * rate)
    };
    let a_cav = lorentz(scene.f_cav, scene.omega_cav, scene.kappa);
    let a_mat = lorentz(scene.f_mat, scene.omega_mat, scene.gamma);
    let rel = scene.r_cav - scene.r_mat;
    let r = rel.norm();
    if r == 0.0 {
        return Err(Error::Domain("coincident dipole positions".into()));
    }
    // n_c·E_mat(r_c) = κ·(3(n_c·r̂)(n_m·r̂) − n_c·n_m)·d_m/r³
    let t = -DIPOLE_FIELD * angular_factor(&scene.n_dcav, &scene.n_dmat, &(rel / r)) / r.powi(3);
    // d_c = α_c(E + t d_m), d_m = α_m(E + t d_c)
    let det = C64::from(1.0) - a_cav * a_mat * t * t;
    if det.norm() <= 1e-15 {
        return Err(Error::Pole(format!("coupled polarizabilities are singular at ω = {omega}")));
    }
    let e = C64::from(e_inc);
    let d_cav = (a_cav * e + a_cav * t * a_mat * e) / det;
    let d_mat = (a_mat * e + a_mat * t * a_cav * e) / det;
    let x = |d: C64, f: OscillatorStrength| {
        if f.value() > 0.0 {
            d / f.charge()
        } else {
            C64::new(0.0, 0.0)
        }
    };
    Ok(ResponseAmplitudes { x_cav: x(d_cav, scene.f_cav), x_mat: x(d_mat, scene.f_mat), d_cav, d_mat })
}
