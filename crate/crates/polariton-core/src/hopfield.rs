//! Hopfield Hamiltonian with a diamagnetic term,
//!
//! ```text
//! H = ω_cav(a†a + ½) + ω_mat(b†b + ½) + D(a + a†)² + g(a + a†)(b + b†)
//! ```
//!
//! solved exactly through its quartic and numerically in a truncated Fock
//! basis. The rotated frame replaces the coupling by ig(a + a†)(b − b†).

use crate::error::{finite, non_negative, positive, Error, Result};
use crate::quadratic::Quadratic2;
use crate::C64;
use nalgebra::DMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HopfieldParams {
    pub omega_cav: f64,
    pub omega_mat: f64,
    pub g_qed: f64,
    pub d: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumSpectrum {
    /// E_k − E_0 for the lowest levels above the ground state.
    pub excitation_energies: Vec<f64>,
    pub ground_state_energy: f64,
    pub truncation: usize,
}

/// Which form of the light-matter coupling to assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    /// g(a + a†)(b + b†)
    Original,
    /// ig(a + a†)(b − b†)
    Rotated,
}

impl HopfieldParams {
    pub fn new(omega_cav: f64, omega_mat: f64, g_qed: f64, d: f64) -> Result<Self> {
        Ok(Self {
            omega_cav: positive("omega_cav", omega_cav)?,
            omega_mat: positive("omega_mat", omega_mat)?,
            g_qed: finite("g_qed", g_qed)?,
            d: non_negative("D", d)?,
        })
    }

    /// Parameters equivalent to the SpC model (D = 0).
    pub fn spc(omega_cav: f64, omega_mat: f64, g_spc: f64) -> Result<Self> {
        Self::new(omega_cav, omega_mat, g_spc, 0.0)
    }

    /// Parameters equivalent to the MoC model: g_QED = g_MoC·√(ω_mat/ω_cav),
    /// D = g_QED²/ω_mat.
    pub fn moc(omega_cav: f64, omega_mat: f64, g_moc: f64) -> Result<Self> {
        let g = g_moc * (omega_mat / omega_cav).sqrt();
        Self::new(omega_cav, omega_mat, g, g * g / omega_mat)
    }

    /// ω_cav² + 4Dω_cav.
    fn dressed_cav2(&self) -> f64 {
        self.omega_cav * self.omega_cav + 4.0 * self.d * self.omega_cav
    }

    pub fn is_stable(&self) -> bool {
        self.dressed_cav2() * self.omega_mat * self.omega_mat
            > 4.0 * self.g_qed * self.g_qed * self.omega_cav * self.omega_mat
    }

    fn system(&self) -> Quadratic2 {
        Quadratic2::real(
            self.dressed_cav2().sqrt(),
            self.omega_mat,
            2.0 * self.g_qed * (self.omega_cav * self.omega_mat).sqrt(),
            0.0,
        )
    }
}

/// Normal-mode frequencies (ω₊, ω₋) from
/// (ω² − ω_cav² − 4Dω_cav)(ω² − ω_mat²) = 4g²ω_cav ω_mat.
pub fn hopfield_quartic_eigen(p: &HopfieldParams) -> Result<(f64, f64)> {
    let r = p.system().roots();
    if !p.is_stable() || !r.lower_real {
        return Err(Error::Unstable(format!(
            "lower branch is imaginary: ω₋ = {} (g = {}, D = {})",
            r.minus, p.g_qed, p.d
        )));
    }
    Ok((r.plus.re, r.minus.re))
}

/// Product Fock states (n_a, n_b) with n_a + n_b of the given parity.
fn parity_basis(n_max: usize, parity: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for na in 0..=n_max {
        for nb in 0..=n_max {
            if (na + nb) % 2 == parity {
                v.push((na, nb));
            }
        }
    }
    v
}

fn index_of(n_max: usize, basis: &[(usize, usize)]) -> Vec<Option<usize>> {
    let mut idx = vec![None; (n_max + 1) * (n_max + 1)];
    for (i, &(na, nb)) in basis.iter().enumerate() {
        idx[na * (n_max + 1) + nb] = Some(i);
    }
    idx
}

/// Hamiltonian block of one parity sector, as complex Hermitian matrix.
fn block(p: &HopfieldParams, n_max: usize, parity: usize, frame: Frame) -> DMatrix<C64> {
    let basis = parity_basis(n_max, parity);
    let idx = index_of(n_max, &basis);
    let at = |na: usize, nb: usize| idx[na * (n_max + 1) + nb];
    let n = basis.len();
    let mut h = DMatrix::<C64>::zeros(n, n);
    for (j, &(na, nb)) in basis.iter().enumerate() {
        let (fa, fb) = (na as f64, nb as f64);
        h[(j, j)] += C64::from(p.omega_cav * (fa + 0.5) + p.omega_mat * (fb + 0.5) + p.d * (2.0 * fa + 1.0));
        // D(a² + a†²)
        if na + 2 <= n_max {
            let v = p.d * ((fa + 1.0) * (fa + 2.0)).sqrt();
            let i = at(na + 2, nb).unwrap();
            h[(i, j)] += C64::from(v);
            h[(j, i)] += C64::from(v);
        }
        // coupling: (a + a†) ⊗ (b ± b†)
        for (na2, xa) in [(na + 1, (fa + 1.0).sqrt()), (na.wrapping_sub(1), fa.sqrt())] {
            if na2 > n_max || xa == 0.0 {
                continue;
            }
            for (nb2, xb, sign) in [(nb + 1, (fb + 1.0).sqrt(), -1.0), (nb.wrapping_sub(1), fb.sqrt(), 1.0)] {
                if nb2 > n_max || xb == 0.0 {
                    continue;
                }
                let Some(i) = at(na2, nb2) else { continue };
                let v = match frame {
                    Frame::Original => C64::from(p.g_qed * xa * xb),
                    // <nb−1|b|nb> = √nb, <nb+1|−b†|nb> = −√(nb+1)
                    Frame::Rotated => C64::new(0.0, p.g_qed * xa * xb * sign),
                };
                h[(i, j)] += v;
            }
        }
    }
    h
}

fn block_levels(p: &HopfieldParams, n_max: usize, parity: usize, frame: Frame) -> Vec<f64> {
    let h = block(p, n_max, parity, frame);
    let n = h.nrows();
    let e = match frame {
        Frame::Original => {
            faer::Mat::<f64>::from_fn(n, n, |i, j| h[(i, j)].re).self_adjoint_eigenvalues(faer::Side::Lower)
        }
        Frame::Rotated => faer::Mat::<faer::c64>::from_fn(n, n, |i, j| {
            let z = h[(i, j)];
            faer::c64::new(z.re, z.im)
        })
        .self_adjoint_eigenvalues(faer::Side::Lower),
    };
    let mut e = e.unwrap_or_else(|_| {
        // dense fallback
        h.symmetric_eigenvalues().iter().copied().collect()
    });
    e.sort_by(|a, b| a.partial_cmp(b).unwrap());
    e
}

/// Both parity sectors, each sorted ascending: (even, odd).
fn sector_levels(p: &HopfieldParams, n_max: usize, frame: Frame) -> Result<(Vec<f64>, Vec<f64>)> {
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max must be ≥ 2, got {n_max}")));
    }
    Ok((block_levels(p, n_max, 0, frame), block_levels(p, n_max, 1, frame)))
}

fn merged(even: &[f64], odd: &[f64]) -> Vec<f64> {
    let mut all: Vec<f64> = even.iter().chain(odd).copied().collect();
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    all
}

/// Lowest `n_levels` excitation energies of the truncated Hamiltonian.
pub fn truncated_fock_spectrum(p: &HopfieldParams, n_max: usize, n_levels: usize) -> Result<QuantumSpectrum> {
    truncated_fock_spectrum_in(p, n_max, n_levels, Frame::Original)
}

pub fn truncated_fock_spectrum_in(
    p: &HopfieldParams,
    n_max: usize,
    n_levels: usize,
    frame: Frame,
) -> Result<QuantumSpectrum> {
    let (even, odd) = sector_levels(p, n_max, frame)?;
    let all = merged(&even, &odd);
    if n_levels + 1 > all.len() {
        return Err(Error::Domain(format!(
            "asked for {n_levels} excitations, only {} levels available",
            all.len() - 1
        )));
    }
    let e0 = all[0];
    Ok(QuantumSpectrum {
        excitation_energies: all[1..=n_levels].iter().map(|e| e - e0).collect(),
        ground_state_energy: e0,
        truncation: n_max,
    })
}

/// Single-excitation gaps read from the Fock spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockGaps {
    pub omega_plus: f64,
    pub omega_minus: f64,
    pub ground_state_energy: f64,
}

/// One-quantum states flip the parity of n_a + n_b. ω₋ is the lowest odd
/// level; ω₊ is the lowest odd level that is not an odd overtone of ω₋.
pub fn fock_single_excitation_gaps(p: &HopfieldParams, n_max: usize) -> Result<FockGaps> {
    let (even, odd) = sector_levels(p, n_max, Frame::Original)?;
    let e0 = even[0].min(odd[0]);
    let w_minus = odd[0] - e0;
    let tol = 1e-6 * p.omega_mat.max(p.omega_cav);
    let w_plus = odd[1..]
        .iter()
        .map(|e| e - e0)
        .find(|&w| {
            let k = (w / w_minus).round();
            !(k >= 3.0 && k as i64 % 2 == 1 && (w - k * w_minus).abs() < tol)
        })
        .ok_or_else(|| Error::Eigen("no upper single-excitation level found".into()))?;
    Ok(FockGaps { omega_plus: w_plus, omega_minus: w_minus, ground_state_energy: e0 })
}

/// Largest difference between the lowest five eigenvalues of the two frames.
pub fn frame_equivalence_check(p: &HopfieldParams, n_max: usize) -> Result<f64> {
    let (e1, o1) = sector_levels(p, n_max, Frame::Original)?;
    let (e2, o2) = sector_levels(p, n_max, Frame::Rotated)?;
    let a = merged(&e1, &o1);
    let b = merged(&e2, &o2);
    Ok(a.iter().zip(&b).take(5).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}
