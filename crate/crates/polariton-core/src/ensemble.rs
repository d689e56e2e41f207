//! Ensembles of identical dipoles in a Fabry-Pérot cavity.
//!
//! Every dipole couples to every cavity mode through momentum coupling and
//! to every other dipole through the quasistatic spring coupling. For one
//! mode the bright superposition of dipoles reduces the problem to a single
//! MoC pair with a collective coupling and a shifted matter frequency.

use crate::error::{positive, Error, Result};
use crate::models::{CoupledModel, HybridModes};
use crate::units::{angular_factor, OscillatorStrength, DIPOLE_FIELD, HBAR_C};
use crate::{Vec3, C64};
use nalgebra::DMatrix;
use std::f64::consts::PI;

/// Default upper bound on the number of dipoles in a full eigensolve.
pub const MAX_FULL_DIPOLES: usize = 500;

/// Cutoff radius of the dipole sums in units of the lattice spacing.
pub const DEFAULT_CUTOFF_FACTOR: f64 = 10.0;

/// Mode (n, k∥) of a planar cavity: Ξ = sin(nπz/L)·e^{ik∥·r∥}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityMode {
    pub n: usize,
    pub k_par: [f64; 2],
}

impl CavityMode {
    pub fn normal(n: usize) -> Self {
        Self { n, k_par: [0.0, 0.0] }
    }

    fn is_normal(&self) -> bool {
        self.k_par == [0.0, 0.0]
    }
}

/// Mirrors at z = 0 and z = L, periodic laterally with period `period`.
#[derive(Debug, Clone, PartialEq)]
pub struct FabryPerotSpec {
    pub l_cav: f64,
    pub period: f64,
    pub modes: Vec<CavityMode>,
    pub epsilon_inf: f64,
}

impl FabryPerotSpec {
    pub fn new(l_cav: f64, period: f64, modes: Vec<CavityMode>, epsilon_inf: f64) -> Result<Self> {
        positive("L_cav", l_cav)?;
        positive("period", period)?;
        positive("epsilon_inf", epsilon_inf)?;
        if modes.iter().any(|m| m.n == 0) {
            return Err(Error::Domain("mode index n must be ≥ 1".into()));
        }
        Ok(Self { l_cav, period, modes, epsilon_inf })
    }

    pub fn mode_frequency(&self, m: &CavityMode) -> f64 {
        let kz = m.n as f64 * PI / self.l_cav;
        let k2 = kz * kz + m.k_par[0] * m.k_par[0] + m.k_par[1] * m.k_par[1];
        HBAR_C * k2.sqrt() / self.epsilon_inf.sqrt()
    }

    pub fn profile(&self, m: &CavityMode, r: &Vec3) -> C64 {
        let s = (m.n as f64 * PI * r.z / self.l_cav).sin();
        C64::from_polar(s, m.k_par[0] * r.x + m.k_par[1] * r.y)
    }

    /// ∫|Ξ|² over one lateral cell.
    pub fn mode_volume(&self) -> f64 {
        0.5 * self.l_cav * self.period * self.period
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DipoleLattice {
    pub positions: Vec<Vec3>,
    pub orientation: Vec3,
    pub f_dip: OscillatorStrength,
    pub omega_dip: f64,
    pub spacing: f64,
}

impl DipoleLattice {
    pub fn new(
        positions: Vec<Vec3>,
        orientation: Vec3,
        f_dip: OscillatorStrength,
        omega_dip: f64,
        spacing: f64,
    ) -> Result<Self> {
        positive("omega_dip", omega_dip)?;
        positive("spacing", spacing)?;
        if (orientation.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::Domain("orientation must be a unit vector".into()));
        }
        Ok(Self { positions, orientation, f_dip, omega_dip, spacing })
    }

    /// nx × ny × nz dipoles at the cell midpoints of a box
    /// [0, period]² × [0, L_cav].
    pub fn filling(
        fp: &FabryPerotSpec,
        counts: [usize; 3],
        orientation: Vec3,
        f_dip: OscillatorStrength,
        omega_dip: f64,
    ) -> Result<Self> {
        let [nx, ny, nz] = counts;
        let step = [fp.period / nx as f64, fp.period / ny as f64, fp.l_cav / nz as f64];
        let mut positions = Vec::with_capacity(nx * ny * nz);
        for k in 0..nz {
            for j in 0..ny {
                for i in 0..nx {
                    positions.push(Vec3::new(
                        (i as f64 + 0.5) * step[0],
                        (j as f64 + 0.5) * step[1],
                        (k as f64 + 0.5) * step[2],
                    ));
                }
            }
        }
        let spacing = step.iter().copied().fold(f64::INFINITY, f64::min);
        Self::new(positions, orientation, f_dip, omega_dip, spacing)
    }

    /// Simple cubic block of n³ dipoles with spacing `a`, first site at `origin`.
    pub fn cubic_block(
        n: [usize; 3],
        a: f64,
        origin: Vec3,
        orientation: Vec3,
        f_dip: OscillatorStrength,
        omega_dip: f64,
    ) -> Result<Self> {
        let mut positions = Vec::with_capacity(n[0] * n[1] * n[2]);
        for k in 0..n[2] {
            for j in 0..n[1] {
                for i in 0..n[0] {
                    positions.push(origin + a * Vec3::new(i as f64, j as f64, k as f64));
                }
            }
        }
        Self::new(positions, orientation, f_dip, omega_dip, a)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    fn check(&self, fp: &FabryPerotSpec) -> Result<()> {
        if self.is_empty() {
            return Err(Error::Empty("lattice has no dipoles".into()));
        }
        for r in &self.positions {
            if !(r.z > 0.0 && r.z < fp.l_cav) {
                return Err(Error::Domain(format!("dipole at z = {} lies outside the cavity", r.z)));
            }
        }
        Ok(())
    }

    /// Spring coupling g_ij between dipoles separated by `rel`.
    fn pair_coupling(&self, rel: &Vec3) -> f64 {
        let r = rel.norm();
        let a = angular_factor(&self.orientation, &self.orientation, &(rel / r));
        0.5 * DIPOLE_FIELD * self.f_dip.value() * a / (r.powi(3) * self.omega_dip)
    }
}

/// Options for the dipole-dipole sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleSum {
    /// Include dipole-dipole coupling at all.
    pub enabled: bool,
    /// Add lateral periodic images of the cell.
    pub images: bool,
    /// Cutoff radius in units of the lattice spacing; `None` means all
    /// pairs in the cell with no images.
    pub cutoff_factor: Option<f64>,
}

impl DipoleSum {
    pub const OFF: DipoleSum = DipoleSum { enabled: false, images: false, cutoff_factor: None };
    pub const CELL: DipoleSum = DipoleSum { enabled: true, images: false, cutoff_factor: None };
    pub const LATTICE: DipoleSum =
        DipoleSum { enabled: true, images: true, cutoff_factor: Some(DEFAULT_CUTOFF_FACTOR) };
}

/// Coupling matrix g_ij (eV) including images, zero diagonal unless an
/// image of a dipole lies within the cutoff.
fn dipole_couplings(lat: &DipoleLattice, fp: &FabryPerotSpec, sum: DipoleSum) -> Result<DMatrix<f64>> {
    let n = lat.len();
    let mut g = DMatrix::<f64>::zeros(n, n);
    if !sum.enabled {
        return Ok(g);
    }
    let cutoff = sum.cutoff_factor.map(|c| c * lat.spacing);
    let reach = match (sum.images, cutoff) {
        (true, Some(c)) => (c / fp.period).ceil() as i64,
        _ => 0,
    };
    for j in 0..n {
        for i in 0..n {
            for mx in -reach..=reach {
                for my in -reach..=reach {
                    let shift = Vec3::new(mx as f64 * fp.period, my as f64 * fp.period, 0.0);
                    let rel = lat.positions[i] + shift - lat.positions[j];
                    let r = rel.norm();
                    if r == 0.0 {
                        if i != j {
                            return Err(Error::Domain(format!("dipoles {i} and {j} overlap")));
                        }
                        continue;
                    }
                    if cutoff.is_some_and(|c| r > c) {
                        continue;
                    }
                    g[(i, j)] += lat.pair_coupling(&rel);
                }
            }
        }
    }
    Ok(g)
}

/// Peak single-dipole coupling ½√(f/ε₀V) to any mode of the cavity.
pub fn g_max(lat: &DipoleLattice, fp: &FabryPerotSpec) -> f64 {
    0.5 * HBAR_C * (4.0 * PI * lat.f_dip.coulomb_length() / fp.mode_volume()).sqrt()
}

/// Full second-order system ẍ + C x + B ẋ = 0 over N dipoles then M modes.
#[derive(Debug, Clone, PartialEq)]
pub struct FullSystem {
    pub c: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub n_dip: usize,
    pub n_modes: usize,
}

impl FullSystem {
    /// C symmetric and B antisymmetric, so the lossless problem is
    /// Hermitian in the first-order form.
    pub fn structure_defect(&self) -> f64 {
        let cs = (&self.c - self.c.transpose()).abs().max();
        let ba = (&self.b + self.b.transpose()).abs().max();
        cs.max(ba)
    }

    /// All positive eigenfrequencies in ascending order.
    pub fn eigenfrequencies(&self) -> Result<Vec<f64>> {
        let n = self.c.nrows();
        let mut a = DMatrix::<f64>::zeros(2 * n, 2 * n);
        for i in 0..n {
            a[(i, n + i)] = 1.0;
        }
        a.view_mut((n, 0), (n, n)).copy_from(&(-&self.c));
        a.view_mut((n, n), (n, n)).copy_from(&(-&self.b));
        let lambdas = a.complex_eigenvalues();
        let mut w: Vec<f64> = lambdas
            .iter()
            .map(|l| C64::i() * l)
            .filter(|w| w.re > 0.0)
            .map(|w| {
                if w.im.abs() > 1e-8 * w.re.max(1.0) {
                    Err(Error::Eigen(format!("unstable eigenfrequency {w}")))
                } else {
                    Ok(w.re)
                }
            })
            .collect::<Result<_>>()?;
        w.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if w.len() != n {
            return Err(Error::Eigen(format!("expected {n} positive roots, found {}", w.len())));
        }
        Ok(w)
    }

    /// Fraction |x_α|²/|x|² of cavity mode `alpha` in the eigenmode at `omega`,
    /// read from the null vector of the Hermitian matrix C − ω² − iωB.
    pub fn mode_weight(&self, omega: f64, alpha: usize) -> f64 {
        let n = self.c.nrows();
        let q = DMatrix::<C64>::from_fn(n, n, |i, j| {
            let d = if i == j { omega * omega } else { 0.0 };
            C64::new(self.c[(i, j)] - d, -omega * self.b[(i, j)])
        });
        let e = q.symmetric_eigen();
        let k = e
            .eigenvalues
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .map(|(k, _)| k)
            .unwrap();
        let v = e.eigenvectors.column(k);
        v[self.n_dip + alpha].norm_sqr() / v.norm_squared()
    }
}

/// Assembles the full system for the normal-incidence modes of `fp`.
pub fn build_full_system(lat: &DipoleLattice, fp: &FabryPerotSpec, sum: DipoleSum) -> Result<FullSystem> {
    if lat.len() > MAX_FULL_DIPOLES {
        return Err(Error::Domain(format!("{} dipoles exceed the limit of {MAX_FULL_DIPOLES}", lat.len())));
    }
    if lat.is_empty() && fp.modes.is_empty() {
        return Err(Error::Empty("no dipoles and no modes".into()));
    }
    if !lat.is_empty() {
        lat.check(fp)?;
    }
    if fp.modes.iter().any(|m| !m.is_normal()) {
        return Err(Error::Domain("the full system supports k∥ = 0 modes only".into()));
    }
    let (nd, nm) = (lat.len(), fp.modes.len());
    let n = nd + nm;
    let mut c = DMatrix::<f64>::zeros(n, n);
    let mut b = DMatrix::<f64>::zeros(n, n);
    let gdd = dipole_couplings(lat, fp, sum)?;
    let w = lat.omega_dip;
    for i in 0..nd {
        for j in 0..nd {
            c[(i, j)] = 2.0 * w * gdd[(i, j)];
        }
        c[(i, i)] += w * w;
    }
    let gm = g_max(lat, fp);
    for (a, mode) in fp.modes.iter().enumerate() {
        let wa = fp.mode_frequency(mode);
        c[(nd + a, nd + a)] = wa * wa;
        for (i, r) in lat.positions.iter().enumerate() {
            let g = gm * fp.profile(mode, r).re;
            b[(i, nd + a)] = 2.0 * g;
            b[(nd + a, i)] = -2.0 * g;
        }
    }
    Ok(FullSystem { c, b, n_dip: nd, n_modes: nm })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollectiveMode {
    pub omega_mat: f64,
    pub g_coll: f64,
    pub n_eff: f64,
    pub g_shift: f64,
    pub omega_cav: f64,
    pub mode: CavityMode,
}

impl CollectiveMode {
    pub fn model(&self) -> Result<CoupledModel> {
        CoupledModel::moc(self.omega_cav, self.omega_mat, self.g_coll)
    }
}

/// Σ_i |Ξ(r_i)|².
pub fn n_eff(lat: &DipoleLattice, fp: &FabryPerotSpec, mode: &CavityMode) -> f64 {
    lat.positions.iter().map(|r| fp.profile(mode, r).norm_sqr()).sum()
}

/// Σ_i Ξ_α(r_i)*·Ξ_β(r_i).
pub fn mode_overlap(lat: &DipoleLattice, fp: &FabryPerotSpec, a: &CavityMode, b: &CavityMode) -> C64 {
    lat.positions.iter().map(|r| fp.profile(a, r).conj() * fp.profile(b, r)).sum()
}

/// Collective frequency shift: the dipole couplings averaged over the
/// bright superposition, Σ_ij Ξ_j* g_ij Ξ_i / Σ_j |Ξ_j|².
pub fn g_shift(lat: &DipoleLattice, fp: &FabryPerotSpec, mode: &CavityMode, sum: DipoleSum) -> Result<f64> {
    lat.check(fp)?;
    let g = dipole_couplings(lat, fp, sum)?;
    let xi: Vec<C64> = lat.positions.iter().map(|r| fp.profile(mode, r)).collect();
    let mut num = C64::new(0.0, 0.0);
    for j in 0..lat.len() {
        for i in 0..lat.len() {
            num += xi[j].conj() * g[(i, j)] * xi[i];
        }
    }
    let den: f64 = xi.iter().map(|x| x.norm_sqr()).sum();
    if den == 0.0 {
        return Err(Error::Domain("every dipole sits on a node of the mode".into()));
    }
    Ok(num.re / den)
}

/// Reduces the ensemble to one MoC pair for `mode`.
pub fn collective_reduce(
    lat: &DipoleLattice,
    fp: &FabryPerotSpec,
    mode: &CavityMode,
    sum: DipoleSum,
) -> Result<CollectiveMode> {
    lat.check(fp)?;
    let ne = n_eff(lat, fp, mode);
    let shift = g_shift(lat, fp, mode, sum)?;
    let w = lat.omega_dip;
    let om2 = w * w + 2.0 * w * shift;
    if om2 <= 0.0 {
        return Err(Error::InvalidDressing(format!(
            "collective frequency squared {om2} is not positive (g_shift = {shift})"
        )));
    }
    Ok(CollectiveMode {
        omega_mat: om2.sqrt(),
        g_coll: g_max(lat, fp) * ne.sqrt(),
        n_eff: ne,
        g_shift: shift,
        omega_cav: fp.mode_frequency(mode),
        mode: *mode,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionReport {
    pub full: (f64, f64),
    pub reduced: HybridModes,
    pub collective: CollectiveMode,
    pub max_relative_deviation: f64,
}

/// Compares the two polaritons of the full system with the reduced pair.
/// The polaritons are the two eigenmodes with the largest weight on the
/// cavity mode.
pub fn full_vs_reduced_check(
    lat: &DipoleLattice,
    fp: &FabryPerotSpec,
    mode: &CavityMode,
    sum: DipoleSum,
) -> Result<ReductionReport> {
    let coll = collective_reduce(lat, fp, mode, sum)?;
    let reduced = coll.model()?.eigenfrequencies();
    let alpha = fp
        .modes
        .iter()
        .position(|m| m == mode)
        .ok_or_else(|| Error::Domain("mode is not part of the cavity spec".into()))?;
    let sys = build_full_system(lat, fp, sum)?;
    let mut ranked: Vec<(f64, f64)> =
        sys.eigenfrequencies()?.into_iter().map(|w| (sys.mode_weight(w, alpha), w)).collect();
    ranked.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    if ranked.len() < 2 {
        return Err(Error::Eigen("fewer than two eigenmodes".into()));
    }
    let (a, b) = (ranked[0].1, ranked[1].1);
    let full = (a.max(b), a.min(b));
    let (rp, rm) = (reduced.omega_plus.re, reduced.omega_minus.re);
    let dev = ((full.0 - rp) / rp).abs().max(((full.1 - rm) / rm).abs());
    Ok(ReductionReport { full, reduced, collective: coll, max_relative_deviation: dev })
}
