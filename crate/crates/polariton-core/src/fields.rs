//! Electric-field maps of the hybrid modes for an emitter in a closed box
//! cavity and for an emitter next to a small metallic sphere.

use crate::driven::ResponseAmplitudes;
use crate::error::{positive, Error, Result};
use crate::models::{Branch, CoupledModel, OscillatorPair};
use crate::units::{coupling_dipole_dipole, OscillatorStrength, COULOMB, DIPOLE_FIELD, HBAR_C, PROTON_MASS};
use crate::{Vec3, C64};
use nalgebra::Vector3;
use std::f64::consts::PI;

pub type CVec3 = Vector3<C64>;

/// Default radius around a point dipole inside which fields are not evaluated (nm).
pub const DEFAULT_CORE_RADIUS: f64 = 0.1;

/// Emitter in a rectangular box with perfect mirrors. The origin is the
/// centre of the box and the fundamental mode is polarized along z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxCavityScene {
    pub l: [f64; 3],
    pub v_eff: f64,
    pub omega_cav: f64,
    pub r_mat: Vec3,
    pub n_d: Vec3,
    pub f_mat: OscillatorStrength,
    pub omega_mat: f64,
}

/// Emitter next to a sphere whose dipolar plasmon acts as the cavity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NanoparticleScene {
    pub radius: f64,
    pub r_cav: Vec3,
    pub r_mat: Vec3,
    pub n_dcav: Vec3,
    pub n_dmat: Vec3,
    pub f_cav: OscillatorStrength,
    pub f_mat: OscillatorStrength,
    pub omega_cav: f64,
    pub omega_mat: f64,
    pub kappa: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub position: Vec3,
    pub e_total: CVec3,
    pub e_cav: CVec3,
    pub e_mat: CVec3,
    /// Point lies inside a source and carries zero fields.
    pub excluded: bool,
}

impl FieldSample {
    fn new(position: Vec3, e_cav: CVec3, e_mat: CVec3) -> Self {
        Self { position, e_total: e_cav + e_mat, e_cav, e_mat, excluded: false }
    }

    fn excluded(position: Vec3) -> Self {
        Self { position, e_total: CVec3::zeros(), e_cav: CVec3::zeros(), e_mat: CVec3::zeros(), excluded: true }
    }

    /// Multiplies every field by `phase`.
    pub fn rotated(&self, phase: C64) -> Self {
        Self { e_total: self.e_total * phase, e_cav: self.e_cav * phase, e_mat: self.e_mat * phase, ..*self }
    }
}

/// 3(n·r̂)r̂ − n.
pub fn dipole_kernel(n: &Vec3, r_hat: &Vec3) -> Vec3 {
    3.0 * n.dot(r_hat) * r_hat - n
}

/// Quasistatic field at `r` of a dipole √f·x = `d` at `r0` along `n`.
fn dipole_field(d: C64, n: &Vec3, r0: &Vec3, r: &Vec3) -> CVec3 {
    let rel = r - r0;
    let dist = rel.norm();
    let k = dipole_kernel(n, &(rel / dist)) * (DIPOLE_FIELD / dist.powi(3));
    k.map(|c| d * c)
}

impl BoxCavityScene {
    pub fn new(
        l: [f64; 3],
        v_eff: f64,
        omega_cav: f64,
        r_mat: Vec3,
        n_d: Vec3,
        f_mat: OscillatorStrength,
        omega_mat: f64,
    ) -> Result<Self> {
        for (i, &li) in l.iter().enumerate() {
            positive(&format!("L[{i}]"), li)?;
        }
        let s = Self {
            l,
            v_eff: positive("V_eff", v_eff)?,
            omega_cav: positive("omega_cav", omega_cav)?,
            r_mat,
            n_d,
            f_mat,
            omega_mat: positive("omega_mat", omega_mat)?,
        };
        if !s.inside(&r_mat) {
            return Err(Error::Domain(format!("emitter at {r_mat:?} lies outside the box")));
        }
        if (n_d.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::Domain("n_d must be a unit vector".into()));
        }
        Ok(s)
    }

    fn inside(&self, r: &Vec3) -> bool {
        (0..3).all(|i| r[i].abs() <= 0.5 * self.l[i])
    }

    /// Lossless MoC model of this scene.
    pub fn model(&self, g: f64) -> Result<CoupledModel> {
        CoupledModel::moc(self.omega_cav, self.omega_mat, g)
    }
}

/// Ξ = cos(πx/L_x)·cos(πy/L_y).
pub fn mode_profile_box(scene: &BoxCavityScene, r: &Vec3) -> Result<f64> {
    if !scene.inside(r) {
        return Err(Error::Domain(format!("point {r:?} lies outside the box")));
    }
    Ok((PI * r.x / scene.l[0]).cos() * (PI * r.y / scene.l[1]).cos())
}

/// Mode amplitudes normalized so that (√ω_cav x_cav, √ω_mat x_mat) has unit
/// length and x_mat is real and non-negative.
fn normalized_amplitudes(model: &CoupledModel, w: C64) -> Result<(C64, C64)> {
    let q = model.system().ok_or_else(|| Error::Domain("field maps need a quadratic model".into()))?;
    let v = q.null_vector(w);
    let (mut xc, mut xm) = (v[0], v[1]);
    let (sc, sm) = (model.pair.omega_cav.sqrt(), model.pair.omega_mat.sqrt());
    let norm = ((sc * xc).norm_sqr() + (sm * xm).norm_sqr()).sqrt();
    xc /= norm;
    xm /= norm;
    let phase = if xm.norm() > 0.0 {
        xm.conj() / xm.norm()
    } else {
        // pure cavity mode: make iω·x_cav real positive
        let e = C64::i() * xc;
        e.conj() / e.norm()
    };
    Ok((xc * phase, xm * phase))
}

/// Field amplitude of the cavity mode per unit x_cav at Ξ = 1 (same units
/// as `DIPOLE_FIELD·√f·x/r³`).
fn cavity_field_scale(omega: f64, v_eff: f64) -> f64 {
    omega * HBAR_C * (4.0 * PI * COULOMB / (PROTON_MASS * v_eff)).sqrt()
}

/// x_cav/x_mat with the cavity amplitude rotated by −i so that the two are
/// real for a lossless MoC mode. Positive on the upper branch.
pub fn realified_ratio(model: &CoupledModel, branch: Branch) -> Result<f64> {
    let r = model.eigenvector_ratio(branch)?;
    Ok((-C64::i() * r).re)
}

/// Field of one hybrid MoC mode. The overall scale is set so that the
/// cavity part of the upper mode peaks at |E| = 1.
pub fn hybrid_field_map_dielectric(
    scene: &BoxCavityScene,
    g: f64,
    branch: Branch,
    positions: &[Vec3],
    core_radius: f64,
) -> Result<Vec<FieldSample>> {
    let model = scene.model(g)?;
    let modes = model.eigenfrequencies();
    let w = modes.omega(branch);
    if w.im != 0.0 || !modes.lower_branch_real {
        return Err(Error::Domain("branch frequency is not real".into()));
    }
    let (xc_up, _) = normalized_amplitudes(&model, modes.omega_plus)?;
    let up = cavity_field_scale(modes.omega_plus.re, scene.v_eff) * xc_up.norm();
    let scale = if up > 0.0 { 1.0 / up } else { 1.0 };
    let (xc, xm) = normalized_amplitudes(&model, w)?;
    let cav = C64::i() * xc * (cavity_field_scale(w.re, scene.v_eff) * scale);
    let dm = xm * scene.f_mat.charge() * scale;
    positions
        .iter()
        .map(|r| {
            if (r - scene.r_mat).norm() <= core_radius {
                return Ok(FieldSample::excluded(*r));
            }
            let xi = mode_profile_box(scene, r)?;
            let e_cav = CVec3::new(0.0.into(), 0.0.into(), cav * xi);
            let e_mat = dipole_field(dm, &scene.n_d, &scene.r_mat, r);
            Ok(FieldSample::new(*r, e_cav, e_mat))
        })
        .collect()
}

/// (Σ_cav, Σ_mat) = (|E_cav|², |E_mat|²)/(|E_cav|² + |E_mat|²).
pub fn contribution_fractions(scene: &BoxCavityScene, g: f64, branch: Branch, position: &Vec3) -> Result<(f64, f64)> {
    let s = hybrid_field_map_dielectric(scene, g, branch, std::slice::from_ref(position), 0.0)?[0];
    fractions(&s)
}

/// Σ fractions of a single sample.
pub fn fractions(s: &FieldSample) -> Result<(f64, f64)> {
    let c = s.e_cav.norm_squared();
    let m = s.e_mat.norm_squared();
    if c + m == 0.0 || s.excluded {
        return Err(Error::Domain(format!("no field at {:?}", s.position)));
    }
    Ok((c / (c + m), m / (c + m)))
}

impl NanoparticleScene {
    pub fn validate(&self) -> Result<()> {
        positive("R_cav", self.radius)?;
        if (self.r_mat - self.r_cav).norm() <= self.radius {
            return Err(Error::Domain("emitter lies inside the nanoparticle".into()));
        }
        OscillatorPair::new(self.omega_cav, self.omega_mat, self.kappa, self.gamma)?;
        Ok(())
    }

    pub fn pair(&self) -> Result<OscillatorPair> {
        OscillatorPair::new(self.omega_cav, self.omega_mat, self.kappa, self.gamma)
    }

    /// Signed dipole-dipole coupling set by the geometry.
    pub fn coupling(&self) -> Result<f64> {
        coupling_dipole_dipole(
            self.f_cav,
            self.f_mat,
            &self.r_cav,
            &self.r_mat,
            &self.n_dcav,
            &self.n_dmat,
            self.omega_cav,
            self.omega_mat,
        )
    }
}

/// Sum of the two dipole fields. Points inside the sphere or within
/// `core_radius` of the emitter are flagged and left empty.
pub fn quasistatic_field_map(
    scene: &NanoparticleScene,
    resp: &ResponseAmplitudes,
    positions: &[Vec3],
    core_radius: f64,
) -> Result<Vec<FieldSample>> {
    scene.validate()?;
    Ok(positions
        .iter()
        .map(|r| {
            if (r - scene.r_cav).norm() <= scene.radius || (r - scene.r_mat).norm() <= core_radius {
                return FieldSample::excluded(*r);
            }
            FieldSample::new(
                *r,
                dipole_field(resp.d_cav, &scene.n_dcav, &scene.r_cav, r),
                dipole_field(resp.d_mat, &scene.n_dmat, &scene.r_mat, r),
            )
        })
        .collect())
}

/// Phase factor that makes `z` real and positive.
pub fn realifying_phase(z: C64) -> C64 {
    if z.norm() == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        z.conj() / z.norm()
    }
}
