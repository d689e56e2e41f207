//! Unit system and conversions between experimental quantities and model
//! parameters.
//!
//! Internally ħ = c = 1 with energies in eV and lengths in nm. An oscillator
//! strength q²/m is stored as a plain number in units of e²/m_p.

use crate::error::{finite, non_negative, positive, Error, Result};
use crate::Vec3;
use std::f64::consts::PI;

/// ħc in eV·nm.
pub const HBAR_C: f64 = 197.3269804;
/// e²/(4πε₀) in eV·nm.
pub const COULOMB: f64 = 1.43996448;
/// m_p c² in eV.
pub const PROTON_MASS: f64 = 9.38272088e8;
/// One Debye in e·nm.
pub const DEBYE: f64 = 0.020819434;

/// Prefactor turning `√f_a √f_b / r³` (strengths in e²/m_p, r in nm) into
/// an energy squared, i.e. (ħc)² e²/(4πε₀ m_p c²). Units: eV²·nm³.
pub const DIPOLE_FIELD: f64 = HBAR_C * HBAR_C * COULOMB / PROTON_MASS;

/// Set of physical constants used by every conversion in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    /// ħc (eV·nm).
    pub hbar_c: f64,
    /// e²/(4πε₀) (eV·nm).
    pub coulomb_const: f64,
    /// m_p c² (eV).
    pub proton_mass_energy: f64,
    /// e·nm per Debye.
    pub debye_in_e_nm: f64,
    /// Speed of light, 1 in natural units.
    pub light_speed: f64,
}

impl UnitSystem {
    pub const CODATA: UnitSystem = UnitSystem {
        hbar_c: HBAR_C,
        coulomb_const: COULOMB,
        proton_mass_energy: PROTON_MASS,
        debye_in_e_nm: DEBYE,
        light_speed: 1.0,
    };

    /// Named constants, in a fixed order, for display.
    pub fn entries(&self) -> [(&'static str, f64, &'static str); 5] {
        [
            ("hbar_c", self.hbar_c, "eV nm"),
            ("coulomb_const", self.coulomb_const, "eV nm / e^2"),
            ("proton_mass_energy", self.proton_mass_energy, "eV"),
            ("debye_in_e_nm", self.debye_in_e_nm, "e nm"),
            ("light_speed", self.light_speed, "1"),
        ]
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::CODATA
    }
}

/// Oscillator strength q²/m in units of e²/m_p.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct OscillatorStrength(f64);

impl OscillatorStrength {
    pub fn new(value: f64) -> Result<Self> {
        non_negative("oscillator strength", value).map(Self)
    }

    /// Strength of a charge `q` (in e) bound to one proton mass, i.e. (q e)²/m_p.
    pub fn from_charge(q: f64) -> Result<Self> {
        Self::new(finite("charge", q)? * q)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The `q` in (q e)²/m_p.
    pub fn charge(self) -> f64 {
        self.0.sqrt()
    }

    /// e²f/(4πε₀) expressed as a length in nm.
    pub fn coulomb_length(self) -> f64 {
        self.0 * COULOMB / PROTON_MASS
    }
}

/// f = 2ωμ²/ħ for a transition dipole `mu` (Debye) at `omega` (eV).
pub fn dipole_moment_to_oscillator_strength(mu: f64, omega: f64) -> Result<OscillatorStrength> {
    let mu = non_negative("dipole moment", mu)?;
    let omega = positive("omega", omega)?;
    let mu_e_nm = mu * DEBYE;
    OscillatorStrength::new(2.0 * omega * mu_e_nm * mu_e_nm * PROTON_MASS / (HBAR_C * HBAR_C))
}

/// μ = √(ħf/2ω) in Debye.
pub fn oscillator_strength_to_dipole_moment(f: OscillatorStrength, omega: f64) -> Result<f64> {
    let omega = positive("omega", omega)?;
    Ok((f.value() * HBAR_C * HBAR_C / (2.0 * omega * PROTON_MASS)).sqrt() / DEBYE)
}

/// Momentum-coupling strength ½√(f/ε₀V)·Ξ·cosθ of a dipole in a mode of
/// effective volume `v_eff` (nm³). Returns eV.
pub fn coupling_from_mode_volume(f_mat: OscillatorStrength, v_eff: f64, xi: f64, cos_theta: f64) -> Result<f64> {
    let v_eff = positive("V_eff", v_eff)?;
    let xi = finite("xi", xi)?;
    let cos_theta = finite("cos_theta", cos_theta)?;
    if xi.abs() > 1.0 || cos_theta.abs() > 1.0 {
        return Err(Error::Domain(format!("xi and cos_theta must lie in [-1, 1], got {xi} and {cos_theta}")));
    }
    Ok(0.5 * HBAR_C * (4.0 * PI * f_mat.coulomb_length() / v_eff).sqrt() * xi * cos_theta)
}

/// n₁·n₂ − 3(n₁·r̂)(n₂·r̂).
pub fn angular_factor(n1: &Vec3, n2: &Vec3, r_hat: &Vec3) -> f64 {
    n1.dot(n2) - 3.0 * n1.dot(r_hat) * n2.dot(r_hat)
}

fn unit_vector(name: &str, n: &Vec3) -> Result<()> {
    if n.iter().all(|c| c.is_finite()) && (n.norm() - 1.0).abs() <= 1e-12 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be a unit vector, got {n:?}")))
    }
}

/// Quasistatic dipole-dipole coupling strength between two oscillators
/// (signed, eV).
#[allow(clippy::too_many_arguments)]
pub fn coupling_dipole_dipole(
    f_cav: OscillatorStrength,
    f_mat: OscillatorStrength,
    r_cav: &Vec3,
    r_mat: &Vec3,
    n_dcav: &Vec3,
    n_dmat: &Vec3,
    omega_cav: f64,
    omega_mat: f64,
) -> Result<f64> {
    let omega_cav = positive("omega_cav", omega_cav)?;
    let omega_mat = positive("omega_mat", omega_mat)?;
    unit_vector("n_dcav", n_dcav)?;
    unit_vector("n_dmat", n_dmat)?;
    let rel = r_cav - r_mat;
    let r = rel.norm();
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Domain("coincident dipole positions".into()));
    }
    let a = angular_factor(n_dcav, n_dmat, &(rel / r));
    let k = DIPOLE_FIELD * (f_cav.value() * f_mat.value()).sqrt() / (r * r * r);
    Ok(0.5 * k * a / (omega_cav * omega_mat).sqrt())
}

/// Oscillator strength 4πε₀R³ω² of the dipolar plasmon of a small sphere.
pub fn plasmon_oscillator_strength(radius: f64, omega_cav: f64) -> Result<OscillatorStrength> {
    let radius = positive("radius", radius)?;
    let omega_cav = positive("omega_cav", omega_cav)?;
    let k = omega_cav / HBAR_C;
    OscillatorStrength::new(radius.powi(3) * k * k * PROTON_MASS / COULOMB)
}
