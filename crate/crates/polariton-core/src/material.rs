//! Permittivities implied by the SpC and MoC ensembles, the Reststrahlen
//! band of a polar material, and bulk polariton dispersion.

use crate::error::{non_negative, positive, Error, Result};
use crate::quadratic::Quadratic2;
use crate::units::HBAR_C;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermittivityVariant {
    MoC,
    SpC,
    /// ε_∞(ω_LO² − ω²)/(ω_TO² − ω²), the MoC form scaled by ε_∞.
    PolarLorentz,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermittivityModel {
    pub omega_mat: f64,
    pub g: f64,
    pub epsilon_inf: f64,
    pub variant: PermittivityVariant,
}

impl PermittivityModel {
    pub fn new(omega_mat: f64, g: f64, epsilon_inf: f64, variant: PermittivityVariant) -> Result<Self> {
        let epsilon_inf = positive("epsilon_inf", epsilon_inf)?;
        if epsilon_inf < 1.0 {
            return Err(Error::Domain(format!("epsilon_inf must be ≥ 1, got {epsilon_inf}")));
        }
        Ok(Self { omega_mat: positive("Omega_mat", omega_mat)?, g: non_negative("G", g)?, epsilon_inf, variant })
    }

    /// Polar material with given phonon frequencies: G = √(ω_LO² − ω_TO²)/2.
    pub fn fit_polar(omega_to: f64, omega_lo: f64, epsilon_inf: f64) -> Result<Self> {
        positive("omega_TO", omega_to)?;
        positive("omega_LO", omega_lo)?;
        if omega_lo < omega_to {
            return Err(Error::Domain(format!("omega_LO = {omega_lo} is below omega_TO = {omega_to}")));
        }
        let g = 0.5 * ((omega_lo - omega_to) * (omega_lo + omega_to)).sqrt();
        Self::new(omega_to, g, epsilon_inf, PermittivityVariant::PolarLorentz)
    }

    pub fn epsilon(&self, omega: f64) -> Result<f64> {
        match self.variant {
            PermittivityVariant::MoC | PermittivityVariant::PolarLorentz => permittivity_mc(self, omega),
            PermittivityVariant::SpC => permittivity_spc(self, omega),
        }
    }
}

fn check_omega(m: &PermittivityModel, omega: f64) -> Result<()> {
    non_negative("omega", omega)?;
    if omega == m.omega_mat {
        return Err(Error::Pole(format!("ε has a pole at ω = {omega}")));
    }
    Ok(())
}

/// ε = ε_∞(1 + 4G²/(Ω² − ω²)).
pub fn permittivity_mc(m: &PermittivityModel, omega: f64) -> Result<f64> {
    check_omega(m, omega)?;
    let d = (m.omega_mat - omega) * (m.omega_mat + omega);
    Ok(m.epsilon_inf * (1.0 + 4.0 * m.g * m.g / d))
}

/// ε = ε_∞(X + √(1 + X²))² with X = 2G²Ω/(ω(Ω² − ω²)).
pub fn permittivity_spc(m: &PermittivityModel, omega: f64) -> Result<f64> {
    check_omega(m, omega)?;
    if omega == 0.0 {
        return Err(Error::Pole("the SpC permittivity diverges as ω → 0".into()));
    }
    let x = 2.0 * m.g * m.g * m.omega_mat / (omega * (m.omega_mat - omega) * (m.omega_mat + omega));
    // X + √(1 + X²) written without cancellation for X < 0
    let s = if x >= 0.0 { x + x.hypot(1.0) } else { 1.0 / (x.hypot(1.0) - x) };
    Ok(m.epsilon_inf * s * s)
}

/// (ω_TO, ω_LO) = (Ω, √(Ω² + 4G²)).
pub fn reststrahlen_band(m: &PermittivityModel) -> (f64, f64) {
    (m.omega_mat, m.omega_mat.hypot(2.0 * m.g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BulkModel {
    MoC,
    /// Photon dressed to √(ω_k² + 4G²), spring coupling.
    A1,
    /// Matter dressed to ω_LO, spring coupling that vanishes with ω_k.
    A2,
}

impl BulkModel {
    pub const ALL: [BulkModel; 3] = [BulkModel::MoC, BulkModel::A1, BulkModel::A2];

    pub fn name(self) -> &'static str {
        match self {
            BulkModel::MoC => "moc",
            BulkModel::A1 => "a1",
            BulkModel::A2 => "a2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BulkParams {
    pub omega_to: f64,
    pub g: f64,
    pub epsilon_inf: f64,
}

impl BulkParams {
    pub fn new(omega_to: f64, g: f64, epsilon_inf: f64) -> Result<Self> {
        Ok(Self {
            omega_to: positive("omega_TO", omega_to)?,
            g: non_negative("G", g)?,
            epsilon_inf: positive("epsilon_inf", epsilon_inf)?,
        })
    }

    pub fn omega_lo(&self) -> f64 {
        self.omega_to.hypot(2.0 * self.g)
    }

    /// Photon line c·k/√ε_∞ (k in nm⁻¹).
    pub fn photon(&self, k: f64) -> f64 {
        HBAR_C * k / self.epsilon_inf.sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchLabel {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DispersionBranch {
    pub k: Vec<f64>,
    pub omega: Vec<f64>,
    pub label: BranchLabel,
    pub model: BulkModel,
}

/// Coupling strength of `model` at photon frequency `wk`.
fn coupling_at(model: BulkModel, p: &BulkParams, wk: f64) -> f64 {
    match model {
        BulkModel::MoC => p.g,
        BulkModel::A1 => -p.g * (p.omega_to / wk.hypot(2.0 * p.g)).sqrt(),
        BulkModel::A2 => p.g * (wk / p.omega_lo()).sqrt(),
    }
}

fn system_at(model: BulkModel, p: &BulkParams, wk: f64) -> Quadratic2 {
    match model {
        BulkModel::MoC => Quadratic2::real(wk, p.omega_to, 0.0, p.g),
        // 2g√(cΩ) with g = −G√(Ω/c) is exactly −2GΩ
        BulkModel::A1 => Quadratic2::real(wk.hypot(2.0 * p.g), p.omega_to, -2.0 * p.g * p.omega_to, 0.0),
        BulkModel::A2 => {
            let m = p.omega_lo();
            let g = coupling_at(model, p, wk);
            Quadratic2::real(wk, m, 2.0 * g * (wk * m).sqrt(), 0.0)
        }
    }
}

/// Lower and upper polariton branches over `k_grid` (nm⁻¹), lossless.
pub fn bulk_dispersion(model: BulkModel, p: &BulkParams, k_grid: &[f64]) -> Result<[DispersionBranch; 2]> {
    let mut lower = Vec::with_capacity(k_grid.len());
    let mut upper = Vec::with_capacity(k_grid.len());
    for &k in k_grid {
        non_negative("k", k)?;
        let r = system_at(model, p, p.photon(k)).roots();
        lower.push(r.minus.re);
        upper.push(r.plus.re);
    }
    Ok([
        DispersionBranch { k: k_grid.to_vec(), omega: lower, label: BranchLabel::Lower, model },
        DispersionBranch { k: k_grid.to_vec(), omega: upper, label: BranchLabel::Upper, model },
    ])
}

/// Coupling strength of each model as a function of k.
pub fn coupling_profiles(model: BulkModel, p: &BulkParams, k_grid: &[f64]) -> Result<Vec<f64>> {
    k_grid.iter().map(|&k| Ok(coupling_at(model, p, p.photon(non_negative("k", k)?)))).collect()
}

/// Solves ω = ω_cav/√ε(ω) on the branch containing `guess` (below or
/// above Ω). ε(ω)ω² is monotone on either side of the pole, so the root is
/// bracketed and found by bisection in ω².
pub fn dispersion_fixed_point(m: &PermittivityModel, omega_cav: f64, guess: f64) -> Result<f64> {
    positive("omega_cav", omega_cav)?;
    positive("guess", guess)?;
    if m.variant == PermittivityVariant::SpC {
        return Err(Error::Domain("the fixed point is defined for the MoC form only".into()));
    }
    let (eps_inf, g2, o2, c2) = (m.epsilon_inf, 4.0 * m.g * m.g, m.omega_mat * m.omega_mat, omega_cav * omega_cav);
    let h = |w2: f64| eps_inf * w2 * (1.0 + g2 / (o2 - w2)) - c2;
    if m.g == 0.0 {
        return Ok(omega_cav / eps_inf.sqrt());
    }
    let (mut lo, mut hi) = if guess < m.omega_mat {
        (0.0, o2)
    } else {
        let mut hi = 2.0 * o2.max(c2 / eps_inf);
        while h(hi) <= 0.0 {
            hi *= 2.0;
        }
        (o2, hi)
    };
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let w = (0.5 * (lo + hi)).sqrt();
    if !w.is_finite() || w == 0.0 {
        return Err(Error::Domain("no root on the requested branch".into()));
    }
    Ok(w)
}
