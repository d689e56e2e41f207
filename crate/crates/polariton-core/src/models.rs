//! Classical two-oscillator models: spring coupling (SpC), momentum
//! coupling (MoC), the linearized model and the three dressed-frequency
//! alternatives.

use crate::error::{non_negative, positive, Error, Result};
use crate::quadratic::Quadratic2;
use crate::C64;

/// Bare cavity-like and matter-like oscillators with their decay rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorPair {
    pub omega_cav: f64,
    pub omega_mat: f64,
    pub kappa: f64,
    pub gamma: f64,
}

impl OscillatorPair {
    pub fn new(omega_cav: f64, omega_mat: f64, kappa: f64, gamma: f64) -> Result<Self> {
        Ok(Self {
            omega_cav: positive("omega_cav", omega_cav)?,
            omega_mat: positive("omega_mat", omega_mat)?,
            kappa: non_negative("kappa", kappa)?,
            gamma: non_negative("gamma", gamma)?,
        })
    }

    pub fn lossless(omega_cav: f64, omega_mat: f64) -> Result<Self> {
        Self::new(omega_cav, omega_mat, 0.0, 0.0)
    }

    pub fn is_lossless(&self) -> bool {
        self.kappa == 0.0 && self.gamma == 0.0
    }

    /// ω_cav − iκ/2.
    pub fn cav(&self) -> C64 {
        C64::new(self.omega_cav, -0.5 * self.kappa)
    }

    /// ω_mat − iγ/2.
    pub fn mat(&self) -> C64 {
        C64::new(self.omega_mat, -0.5 * self.gamma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelVariant {
    SpC,
    MoC,
    Linearized,
    /// SpC-form equations with the cavity dressed to √(ω_cav² + 4g²).
    AltCoulombDressedCavity,
    /// SpC-form equations with the matter dressed to √(ω_mat² + 4g²).
    AltDipoleDressedMatter,
    /// MoC-form equations with the cavity dressed to √(ω_cav² − 4g′²).
    AltDipoleDipoleDressedCavity,
}

impl ModelVariant {
    pub const ALL: [ModelVariant; 6] = [
        ModelVariant::SpC,
        ModelVariant::MoC,
        ModelVariant::Linearized,
        ModelVariant::AltCoulombDressedCavity,
        ModelVariant::AltDipoleDressedMatter,
        ModelVariant::AltDipoleDipoleDressedCavity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelVariant::SpC => "spc",
            ModelVariant::MoC => "moc",
            ModelVariant::Linearized => "linearized",
            ModelVariant::AltCoulombDressedCavity => "alt_coulomb_dressed_cavity",
            ModelVariant::AltDipoleDressedMatter => "alt_dipole_dressed_matter",
            ModelVariant::AltDipoleDipoleDressedCavity => "alt_dipole_dipole_dressed_cavity",
        }
    }

    /// True for variants whose equations have the spring-coupling form.
    fn spring_form(self) -> bool {
        matches!(self, ModelVariant::SpC | ModelVariant::AltCoulombDressedCavity | ModelVariant::AltDipoleDressedMatter)
    }
}

impl std::str::FromStr for ModelVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModelVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown model variant `{s}`")))
    }
}

/// Which branch of the hybrid spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

/// A model variant applied to an oscillator pair. For the alternative
/// variants `pair` already holds the dressed frequencies and `g` the
/// transformed coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoupledModel {
    pub pair: OscillatorPair,
    pub variant: ModelVariant,
    pub g: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridModes {
    pub omega_plus: C64,
    pub omega_minus: C64,
    /// x_cav/x_mat on the upper branch; `None` for a purely cavity-like mode.
    pub ratio_plus: Option<C64>,
    pub ratio_minus: Option<C64>,
    pub lower_branch_real: bool,
}

impl HybridModes {
    pub fn splitting(&self) -> f64 {
        (self.omega_plus - self.omega_minus).re
    }

    pub fn omega(&self, branch: Branch) -> C64 {
        match branch {
            Branch::Plus => self.omega_plus,
            Branch::Minus => self.omega_minus,
        }
    }
}

impl CoupledModel {
    pub fn new(pair: OscillatorPair, variant: ModelVariant, g: f64) -> Result<Self> {
        if !g.is_finite() {
            return Err(Error::Domain(format!("g must be finite, got {g}")));
        }
        if matches!(variant, ModelVariant::MoC | ModelVariant::Linearized) && g < 0.0 {
            return Err(Error::Domain(format!("{} coupling must be ≥ 0", variant.name())));
        }
        Ok(Self { pair, variant, g })
    }

    pub fn spc(omega_cav: f64, omega_mat: f64, g: f64) -> Result<Self> {
        Self::new(OscillatorPair::lossless(omega_cav, omega_mat)?, ModelVariant::SpC, g)
    }

    pub fn moc(omega_cav: f64, omega_mat: f64, g: f64) -> Result<Self> {
        Self::new(OscillatorPair::lossless(omega_cav, omega_mat)?, ModelVariant::MoC, g)
    }

    /// Diamagnetic coefficient of the equivalent Hopfield Hamiltonian, for
    /// the two base variants.
    pub fn diamagnetic_d(&self) -> Option<f64> {
        match self.variant {
            ModelVariant::SpC => Some(0.0),
            ModelVariant::MoC => Some(self.g * self.g / self.pair.omega_cav),
            _ => None,
        }
    }

    /// The 2×2 system, with losses entering as complex bare frequencies.
    /// `None` for the linearized model, which is not of this form.
    pub fn system(&self) -> Option<Quadratic2> {
        let (c, m) = (self.pair.cav(), self.pair.mat());
        if self.variant == ModelVariant::Linearized {
            None
        } else if self.variant.spring_form() {
            Some(Quadratic2 { omega_c: c, omega_m: m, k: 2.0 * self.g * (c * m).sqrt(), g: C64::new(0.0, 0.0) })
        } else {
            Some(Quadratic2 { omega_c: c, omega_m: m, k: C64::new(0.0, 0.0), g: self.g.into() })
        }
    }

    pub fn eigenfrequencies(&self) -> HybridModes {
        match self.system() {
            None => {
                let (plus, minus) = linearized_complex(self.pair.cav(), self.pair.mat(), self.g);
                let ratio = |w: C64| {
                    let d = self.pair.cav() - w;
                    if d.norm() == 0.0 {
                        None
                    } else {
                        Some(-self.g / d)
                    }
                };
                HybridModes {
                    omega_plus: plus,
                    omega_minus: minus,
                    ratio_plus: ratio(plus),
                    ratio_minus: ratio(minus),
                    lower_branch_real: true,
                }
            }
            Some(q) => {
                let r = q.roots();
                HybridModes {
                    omega_plus: r.plus,
                    omega_minus: r.minus,
                    ratio_plus: q.ratio(r.plus).ok(),
                    ratio_minus: q.ratio(r.minus).ok(),
                    lower_branch_real: r.lower_real,
                }
            }
        }
    }

    /// x_cav/x_mat on one branch.
    pub fn eigenvector_ratio(&self, branch: Branch) -> Result<C64> {
        let modes = self.eigenfrequencies();
        let w = modes.omega(branch);
        match self.system() {
            Some(q) => q.ratio(w),
            None => {
                let d = self.pair.cav() - w;
                if d.norm() == 0.0 {
                    Err(Error::Pole("cavity-like linearized mode".into()))
                } else {
                    Ok(-self.g / d)
                }
            }
        }
    }
}

/// Linearized eigenfrequencies [ωc + ωm ± √((ωc − ωm)² + 4|g|²)]/2.
pub fn linearized_eigenfrequencies(omega_cav: f64, omega_mat: f64, g_lin: C64) -> Result<(f64, f64)> {
    positive("omega_cav", omega_cav)?;
    positive("omega_mat", omega_mat)?;
    let d = ((omega_cav - omega_mat).powi(2) + 4.0 * g_lin.norm_sqr()).sqrt();
    Ok((0.5 * (omega_cav + omega_mat + d), 0.5 * (omega_cav + omega_mat - d)))
}

fn linearized_complex(c: C64, m: C64, g: f64) -> (C64, C64) {
    let d = ((c - m) * (c - m) + 4.0 * g * g).sqrt();
    let a = 0.5 * (c + m + d);
    let b = 0.5 * (c + m - d);
    if (a.re, a.im) >= (b.re, b.im) {
        (a, b)
    } else {
        (b, a)
    }
}

/// ω₋ of the SpC model is real iff ω_cav·ω_mat ≥ 4g².
pub fn spc_lower_branch_exists(omega_cav: f64, omega_mat: f64, g: f64) -> bool {
    omega_cav * omega_cav * omega_mat * omega_mat - 4.0 * g * g * omega_cav * omega_mat >= 0.0
}

/// Maps an SpC or MoC model to its dressed-frequency equivalent.
///
/// MoC maps to [`ModelVariant::AltCoulombDressedCavity`]; SpC maps to
/// [`ModelVariant::AltDipoleDipoleDressedCavity`]. Losses are carried over
/// unchanged, so the spectra coincide only for lossless pairs.
pub fn alternative_model_equivalence(base: &CoupledModel) -> Result<CoupledModel> {
    match base.variant {
        ModelVariant::MoC => coulomb_dressed_cavity(base),
        ModelVariant::SpC => dipole_dipole_dressed_cavity(base),
        v => Err(Error::Domain(format!("no alternative model for variant {}", v.name()))),
    }
}

/// MoC → SpC form with cavity √(ω_cav² + 4g²) and coupling −g·√(ω_mat/Ω̃_cav).
pub fn coulomb_dressed_cavity(base: &CoupledModel) -> Result<CoupledModel> {
    expect_variant(base, ModelVariant::MoC)?;
    let p = base.pair;
    let dressed = (p.omega_cav * p.omega_cav + 4.0 * base.g * base.g).sqrt();
    let g = -base.g * (p.omega_mat / dressed).sqrt();
    CoupledModel::new(
        OscillatorPair::new(dressed, p.omega_mat, p.kappa, p.gamma)?,
        ModelVariant::AltCoulombDressedCavity,
        g,
    )
}

/// MoC → SpC form with matter √(ω_mat² + 4g²) and coupling g·√(ω_cav/Ω̃_mat).
pub fn dipole_dressed_matter(base: &CoupledModel) -> Result<CoupledModel> {
    expect_variant(base, ModelVariant::MoC)?;
    let p = base.pair;
    let dressed = (p.omega_mat * p.omega_mat + 4.0 * base.g * base.g).sqrt();
    let g = base.g * (p.omega_cav / dressed).sqrt();
    CoupledModel::new(
        OscillatorPair::new(p.omega_cav, dressed, p.kappa, p.gamma)?,
        ModelVariant::AltDipoleDressedMatter,
        g,
    )
}

/// SpC → MoC form with cavity √(ω_cav² − 4g′²), g′ = g·√(ω_cav/ω_mat).
pub fn dipole_dipole_dressed_cavity(base: &CoupledModel) -> Result<CoupledModel> {
    expect_variant(base, ModelVariant::SpC)?;
    let p = base.pair;
    let g1 = base.g.abs() * (p.omega_cav / p.omega_mat).sqrt();
    let dressed2 = p.omega_cav * p.omega_cav - 4.0 * g1 * g1;
    if dressed2 <= 0.0 {
        return Err(Error::InvalidDressing(format!("ω_cav² − 4g′² = {dressed2} is not positive")));
    }
    CoupledModel::new(
        OscillatorPair::new(dressed2.sqrt(), p.omega_mat, p.kappa, p.gamma)?,
        ModelVariant::AltDipoleDipoleDressedCavity,
        g1,
    )
}

fn expect_variant(m: &CoupledModel, v: ModelVariant) -> Result<()> {
    if m.variant == v {
        Ok(())
    } else {
        Err(Error::Domain(format!("expected a {} model, got {}", v.name(), m.variant.name())))
    }
}

/// Minimum splitting ω₊ − ω₋ over a sweep of cavity frequencies.
///
/// Only points with a real lower branch contribute. The coarse minimum is
/// refined by golden-section search to 1e-6·ω_mat.
pub fn min_splitting(variant: ModelVariant, g: f64, omega_mat: f64, sweep: &[f64]) -> Result<(f64, f64)> {
    positive("omega_mat", omega_mat)?;
    let split = |wc: f64| -> Option<f64> {
        let pair = OscillatorPair::lossless(wc, omega_mat).ok()?;
        let m = CoupledModel::new(pair, variant, g).ok()?;
        let modes = m.eigenfrequencies();
        modes.lower_branch_real.then(|| modes.splitting())
    };
    let vals: Vec<(usize, f64)> = sweep.iter().enumerate().filter_map(|(i, &wc)| split(wc).map(|s| (i, s))).collect();
    let &(i_min, _) = vals
        .iter()
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .ok_or_else(|| Error::Empty("no sweep point has a real lower branch".into()))?;
    let lo = sweep[i_min.saturating_sub(1)];
    let hi = sweep[(i_min + 1).min(sweep.len() - 1)];
    let f = |x: f64| split(x).unwrap_or(f64::INFINITY);
    let x = golden_min(f, lo.min(hi), lo.max(hi), 1e-6 * omega_mat);
    let (x, s) =
        [(x, f(x)), (sweep[i_min], f(sweep[i_min]))].into_iter().min_by(|a, b| a.1.partial_cmp(&b.1).unwrap()).unwrap();
    Ok((s, x))
}

fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}
