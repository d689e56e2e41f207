//! Scenario documents. A scenario is a TOML file with a `kind`, an optional
//! `[output]` table and a `[params]` table whose schema depends on the kind.
//! Unknown keys are rejected everywhere.

use crate::error::{LabError, Result};
use polariton_core::driven::LossModel;
use polariton_core::material::{BulkModel, PermittivityVariant};
use polariton_core::models::{Branch, ModelVariant};
use polariton_core::Vec3;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use std::path::PathBuf;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    EigenSweep,
    MinSplitting,
    Spectrum,
    Fieldmap,
    Fractions,
    Ensemble,
    Permittivity,
    Dispersion,
    Oracle,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::EigenSweep,
        Kind::MinSplitting,
        Kind::Spectrum,
        Kind::Fieldmap,
        Kind::Fractions,
        Kind::Ensemble,
        Kind::Permittivity,
        Kind::Dispersion,
        Kind::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::EigenSweep => "eigen_sweep",
            Kind::MinSplitting => "min_splitting",
            Kind::Spectrum => "spectrum",
            Kind::Fieldmap => "fieldmap",
            Kind::Fractions => "fractions",
            Kind::Ensemble => "ensemble",
            Kind::Permittivity => "permittivity",
            Kind::Dispersion => "dispersion",
            Kind::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    /// CSV plus a line plot of every column against the first.
    Svg,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    pub path: PathBuf,
    #[serde(default)]
    pub format: Format,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    version: Option<u32>,
    kind: Kind,
    output: Option<Output>,
    #[serde(default = "empty_table")]
    params: toml::Value,
}

fn empty_table() -> toml::Value {
    toml::Value::Table(toml::Table::new())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub kind: Kind,
    pub output: Output,
    pub params: Params,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Params {
    EigenSweep(EigenSweep),
    MinSplitting(MinSplitting),
    Spectrum(Spectrum),
    Fieldmap(Fieldmap),
    Fractions(Fractions),
    Ensemble(Ensemble),
    Permittivity(Permittivity),
    Dispersion(Dispersion),
    Oracle(Oracle),
}

fn path_error<E: std::fmt::Display>(prefix: &str, e: serde_path_to_error::Error<E>) -> LabError {
    let p = e.path().to_string();
    let path = match (prefix, p.as_str()) {
        ("", _) => p.clone(),
        (pre, ".") => pre.to_string(),
        (pre, rest) => format!("{pre}.{rest}"),
    };
    LabError::schema(path, e.inner().to_string())
}

fn params_as<T: DeserializeOwned>(v: toml::Value) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| path_error("params", e))
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self> {
        let de = toml::de::Deserializer::parse(text).map_err(|e| LabError::schema(".", e.to_string()))?;
        let env: Envelope = serde_path_to_error::deserialize(de).map_err(|e| path_error("", e))?;
        if let Some(v) = env.version {
            if v != SCHEMA_VERSION {
                return Err(LabError::schema(
                    "version",
                    format!("unsupported schema version {v}, expected {SCHEMA_VERSION}"),
                ));
            }
        }
        let params = match env.kind {
            Kind::EigenSweep => Params::EigenSweep(params_as(env.params)?),
            Kind::MinSplitting => Params::MinSplitting(params_as(env.params)?),
            Kind::Spectrum => Params::Spectrum(params_as(env.params)?),
            Kind::Fieldmap => Params::Fieldmap(params_as(env.params)?),
            Kind::Fractions => Params::Fractions(params_as(env.params)?),
            Kind::Ensemble => Params::Ensemble(params_as(env.params)?),
            Kind::Permittivity => Params::Permittivity(params_as(env.params)?),
            Kind::Dispersion => Params::Dispersion(params_as(env.params)?),
            Kind::Oracle => Params::Oracle(params_as(env.params)?),
        };
        let output = env
            .output
            .unwrap_or_else(|| Output { path: PathBuf::from(format!("{}.csv", env.kind.name())), format: Format::Csv });
        Ok(Scenario { kind: env.kind, output, params })
    }
}

/// Evenly spaced grid including both ends.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl Sweep {
    pub fn values(&self, path: &str) -> Result<Vec<f64>> {
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(LabError::schema(path, "sweep bounds must be finite"));
        }
        match self.points {
            0 => Err(LabError::schema(format!("{path}.points"), "must be at least 1")),
            1 => Ok(vec![self.start]),
            n if n > 10_000_000 => Err(LabError::schema(format!("{path}.points"), "more than 10^7 points")),
            n => {
                let step = (self.stop - self.start) / (n - 1) as f64;
                Ok((0..n).map(|i| if i == n - 1 { self.stop } else { self.start + step * i as f64 }).collect())
            }
        }
    }
}

pub(crate) fn vec3(a: [f64; 3]) -> Vec3 {
    Vec3::new(a[0], a[1], a[2])
}

/// Model names accepted in scenarios. `mc` is an alias of `moc`.
pub fn parse_variant(s: &str, path: &str) -> Result<ModelVariant> {
    match s {
        "mc" => Ok(ModelVariant::MoC),
        "lin" => Ok(ModelVariant::Linearized),
        _ => s.parse().map_err(|e: polariton_core::Error| LabError::schema(path, e.to_string())),
    }
}

/// Column tag for a model variant.
pub fn variant_tag(v: ModelVariant) -> &'static str {
    match v {
        ModelVariant::MoC => "mc",
        ModelVariant::Linearized => "lin",
        v => v.name(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchName {
    Plus,
    Minus,
}

impl BranchName {
    pub fn branch(self) -> Branch {
        match self {
            BranchName::Plus => Branch::Plus,
            BranchName::Minus => Branch::Minus,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            BranchName::Plus => "plus",
            BranchName::Minus => "minus",
        }
    }
}

fn both_branches() -> Vec<BranchName> {
    vec![BranchName::Plus, BranchName::Minus]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Loss {
    #[default]
    ComplexFrequency,
    Viscous,
}

impl Loss {
    pub fn model(self) -> LossModel {
        match self {
            Loss::ComplexFrequency => LossModel::ComplexFrequency,
            Loss::Viscous => LossModel::Viscous,
        }
    }
}

fn one() -> f64 {
    1.0
}

/// ω± over a sweep of ω_cav/ω_mat.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenSweep {
    #[serde(default = "one")]
    pub omega_mat: f64,
    /// Coupling strength in eV.
    pub g: f64,
    pub variants: Vec<String>,
    /// ω_cav/ω_mat.
    pub cavity_ratio: Sweep,
    /// Variants whose coupling scales as g·√(ω_cav/ω_mat).
    #[serde(default)]
    pub sqrt_scaled: Vec<String>,
}

/// Minimum splitting as a function of g.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinSplitting {
    #[serde(default = "one")]
    pub omega_mat: f64,
    pub variants: Vec<String>,
    /// g/ω_mat.
    pub g_ratio: Sweep,
    /// ω_cav/ω_mat grid searched for the minimum.
    pub cavity_ratio: Sweep,
}

/// Emitter strength given either as a charge (e) or as a dipole moment.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Emitter {
    /// Oscillator strength as an effective charge, f = q²/m_p.
    pub charge: Option<f64>,
    /// Transition dipole moment in Debye.
    pub mu_debye: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NanoScene {
    pub radius: f64,
    #[serde(default)]
    pub r_cav: [f64; 3],
    pub r_mat: [f64; 3],
    pub n_dcav: [f64; 3],
    pub n_dmat: [f64; 3],
    pub omega_cav: f64,
    pub omega_mat: f64,
    pub kappa: f64,
    pub gamma: f64,
    /// Plasmon strength as an effective charge; defaults to 4πε₀R³ω_cav².
    pub cavity_charge: Option<f64>,
    pub emitter: Emitter,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Curve {
    pub label: String,
    pub variant: String,
    /// Coupling in eV; the geometric value when absent.
    pub g: Option<f64>,
    /// Overrides the scene's ω_mat.
    pub omega_mat: Option<f64>,
}

/// Scattering cross-section spectra of a nanoparticle scene.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spectrum {
    pub scene: NanoScene,
    /// Drive frequency in eV.
    pub omega: Sweep,
    #[serde(default)]
    pub loss: Loss,
    pub curves: Vec<Curve>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxScene {
    pub l: [f64; 3],
    pub v_eff: f64,
    pub omega_cav: f64,
    pub omega_mat: f64,
    #[serde(default)]
    pub r_mat: [f64; 3],
    pub n_d: [f64; 3],
    pub emitter: Emitter,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(tag = "geometry", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldScene {
    Box(BoxScene),
    Nanoparticle(NanoScene),
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Line {
    pub from: [f64; 3],
    pub to: [f64; 3],
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn tag(self) -> &'static str {
        ["x", "y", "z"][self.index()]
    }
}

/// Hybrid-mode fields sampled along a line.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fieldmap {
    pub scene: FieldScene,
    pub line: Line,
    /// Coupling in eV; derived from the scene when absent.
    pub g: Option<f64>,
    #[serde(default = "both_branches")]
    pub branches: Vec<BranchName>,
    /// Field component written out; z for the box, x for the nanoparticle.
    pub component: Option<Axis>,
    pub core_radius: Option<f64>,
    /// Nanoparticle only: `spc` or `mc`.
    pub variant: Option<String>,
}

/// Σ_cav and Σ_mat at a point as ω_mat is swept.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fractions {
    pub scene: BoxScene,
    pub position: [f64; 3],
    /// Coupling in eV; derived from the mode volume when absent.
    pub g: Option<f64>,
    /// ω_mat in eV.
    pub omega_mat: Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeSpec {
    pub n: usize,
    #[serde(default)]
    pub k_par: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CavitySpec {
    /// Mirror separation in nm; alternatively `fundamental` in eV.
    pub l_cav: Option<f64>,
    pub fundamental: Option<f64>,
    pub period: f64,
    #[serde(default = "one")]
    pub epsilon_inf: f64,
    pub modes: Vec<ModeSpec>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "layout", rename_all = "snake_case", deny_unknown_fields)]
pub enum LatticeSpec {
    /// Cell midpoints of the whole cavity cell.
    Filling { counts: [usize; 3], orientation: [f64; 3], charge: f64, omega_dip: f64 },
    CubicBlock {
        counts: [usize; 3],
        spacing: f64,
        origin: [f64; 3],
        orientation: [f64; 3],
        charge: f64,
        omega_dip: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SumSpec {
    #[serde(default = "yes")]
    pub enabled: bool,
    #[serde(default = "yes")]
    pub images: bool,
    /// Cutoff radius in lattice spacings; all pairs of the cell when absent.
    pub cutoff_factor: Option<f64>,
}

fn yes() -> bool {
    true
}

/// Full dipole-ensemble system against its collective reduction.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ensemble {
    pub cavity: CavitySpec,
    pub lattice: LatticeSpec,
    /// Dipole-dipole sums; off when absent.
    pub dipole_sum: Option<SumSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PermittivityName {
    Moc,
    Spc,
}

impl PermittivityName {
    pub fn variant(self) -> PermittivityVariant {
        match self {
            PermittivityName::Moc => PermittivityVariant::MoC,
            PermittivityName::Spc => PermittivityVariant::SpC,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            PermittivityName::Moc => "mc",
            PermittivityName::Spc => "spc",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarFit {
    pub omega_to: f64,
    pub omega_lo: f64,
    #[serde(default = "one")]
    pub epsilon_inf: f64,
}

/// ε(ω) of the ensemble models, or of a polar material fitted to its
/// phonon frequencies.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Permittivity {
    pub omega_mat: Option<f64>,
    pub g: Option<f64>,
    #[serde(default = "one")]
    pub epsilon_inf: f64,
    #[serde(default)]
    pub variants: Vec<PermittivityName>,
    pub fit: Option<PolarFit>,
    /// ω in eV.
    pub omega: Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BulkName {
    Moc,
    A1,
    A2,
}

impl BulkName {
    pub fn model(self) -> BulkModel {
        match self {
            BulkName::Moc => BulkModel::MoC,
            BulkName::A1 => BulkModel::A1,
            BulkName::A2 => BulkModel::A2,
        }
    }
}

/// Bulk polariton branches and coupling profiles.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dispersion {
    pub omega_to: f64,
    pub g: f64,
    #[serde(default = "one")]
    pub epsilon_inf: f64,
    pub models: Vec<BulkName>,
    /// ck/ω_TO.
    pub ck_ratio: Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfieldPoint {
    pub omega_cav: f64,
    pub omega_mat: f64,
    pub g: f64,
    pub d: f64,
}

/// Independent-method comparisons.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case", deny_unknown_fields)]
pub enum Oracle {
    /// Truncated Fock diagonalization against the quartic roots, plus the
    /// two Hamiltonian frames against each other.
    Hopfield { points: Vec<HopfieldPoint>, n_max: usize, tolerance: f64 },
    /// Driven spring-coupled amplitudes against coupled polarizabilities.
    Polarizability { scene: NanoScene, omega: Sweep, tolerance: f64 },
}
