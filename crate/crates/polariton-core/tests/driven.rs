use polariton_core::driven::*;
use polariton_core::fields::NanoparticleScene;
use polariton_core::models::{CoupledModel, ModelVariant, OscillatorPair};
use polariton_core::quadratic::Quadratic2;
use polariton_core::units::{plasmon_oscillator_strength, OscillatorStrength};
use polariton_core::{Vec3, C64};
use proptest::prelude::*;

fn fig3_scene() -> NanoparticleScene {
    NanoparticleScene {
        radius: 5.0,
        r_cav: Vec3::zeros(),
        r_mat: Vec3::new(6.0, 0.0, 0.0),
        n_dcav: Vec3::x(),
        n_dmat: Vec3::x(),
        f_cav: plasmon_oscillator_strength(5.0, 3.0).unwrap(),
        f_mat: OscillatorStrength::from_charge(118.74).unwrap(),
        omega_cav: 3.0,
        omega_mat: 3.0,
        kappa: 0.02,
        gamma: 0.01,
    }
}

fn spc_of(scene: &NanoparticleScene) -> CoupledModel {
    CoupledModel::new(scene.pair().unwrap(), ModelVariant::SpC, scene.coupling().unwrap()).unwrap()
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn oracle_matches_on_fig3_grid() {
    let s = fig3_scene();
    let m = spc_of(&s);
    for i in 0..200 {
        let w = 2.4 + 1.2 * i as f64 / 199.0;
        let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let a = driven_response(&m, &d, LossModel::Viscous).unwrap();
        let b = polarizability_oracle(&s, 1.0, w).unwrap();
        assert!(rel(a.d_cav, b.d_cav) <= 1e-9, "{w}: {}", rel(a.d_cav, b.d_cav));
        assert!(rel(a.d_mat, b.d_mat) <= 1e-9, "{w}: {}", rel(a.d_mat, b.d_mat));
    }
}

#[test]
fn oracle_matches_at_lower_polariton_for_strong_coupling() {
    // rescale the plasmon strength so that |g| = 0.1 ω_cav
    let mut s = fig3_scene();
    let g0 = s.coupling().unwrap().abs();
    s.f_cav = OscillatorStrength::new(s.f_cav.value() * (0.3 / g0).powi(2)).unwrap();
    assert!((s.coupling().unwrap().abs() - 0.3).abs() < 1e-12);
    let m = spc_of(&s);
    let w = m.eigenfrequencies().omega_minus.re;
    let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
    let a = driven_response(&m, &d, LossModel::Viscous).unwrap();
    let b = polarizability_oracle(&s, 1.0, w).unwrap();
    assert!((a.x_cav.norm() - b.x_cav.norm()).abs() <= 1e-9 * b.x_cav.norm());
}

#[test]
fn swapping_solvers_keeps_cross_section() {
    let s = fig3_scene();
    let m = spc_of(&s);
    for i in 0..50 {
        let w = 2.4 + 1.2 * i as f64 / 49.0;
        let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let a = driven_response(&m, &d, LossModel::Viscous).unwrap();
        let b = polarizability_oracle(&s, 1.0, w).unwrap();
        let mixed = ResponseAmplitudes { d_cav: b.d_cav, x_cav: b.x_cav, ..a };
        let sa = scattering_cross_section(&a, &s.n_dcav, &s.n_dmat, 1.0, w).unwrap();
        let sm = scattering_cross_section(&mixed, &s.n_dcav, &s.n_dmat, 1.0, w).unwrap();
        assert!((sa - sm).abs() <= 1e-9 * sa);
    }
}

#[test]
fn oracle_without_partner_is_lorentzian() {
    let mut s = fig3_scene();
    s.r_mat = Vec3::new(1e7, 0.0, 0.0);
    let w = 2.9;
    let b = polarizability_oracle(&s, 1.0, w).unwrap();
    let alpha = C64::from(s.f_cav.value()) / C64::new(9.0 - w * w, -w * s.kappa);
    assert!(rel(b.d_cav, alpha) < 1e-12);
}

#[test]
fn viscous_uncoupled_is_lorentzian() {
    let s = fig3_scene();
    let m = CoupledModel::new(s.pair().unwrap(), ModelVariant::SpC, 0.0).unwrap();
    let w = 3.05;
    let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
    let r = driven_response(&m, &d, LossModel::Viscous).unwrap();
    let expect = d.force_cav() / C64::new(9.0 - w * w, -w * s.kappa);
    assert!(rel(r.x_cav, expect) < 1e-14);
}

#[test]
fn static_limit_of_spc() {
    let (wc, wm, g) = (3.0, 2.5, 0.4);
    let m = CoupledModel::spc(wc, wm, g).unwrap();
    let fc = OscillatorStrength::from_charge(100.0).unwrap();
    let d = DriveSpec::new(1.0, 1e-7, fc, OscillatorStrength::new(0.0).unwrap()).unwrap();
    let r = driven_spc(&m, &d).unwrap();
    let expect = d.force_cav() * wm * wm / (wc * wc * wm * wm - 4.0 * g * g * wc * wm);
    assert!((r.x_cav.re - expect).abs() <= 1e-10 * expect.abs());
}

#[test]
fn moc_and_spc_agree_without_coupling() {
    let s = fig3_scene();
    let p = s.pair().unwrap();
    let a = CoupledModel::new(p, ModelVariant::SpC, 0.0).unwrap();
    let b = CoupledModel::new(p, ModelVariant::MoC, 0.0).unwrap();
    for w in [2.5, 2.99, 3.0, 3.4] {
        let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let x = driven_spc(&a, &d).unwrap();
        let y = driven_mc(&b, &d).unwrap();
        assert_eq!(x, y);
    }
}

#[test]
fn residual_of_forced_system() {
    let s = fig3_scene();
    let m = CoupledModel::new(s.pair().unwrap(), ModelVariant::SpC, 0.3).unwrap();
    let q = m.system().unwrap();
    for w in [2.6, 2.7, 3.0, 3.3] {
        let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let r = driven_spc(&m, &d).unwrap();
        let mm = q.matrix(w.into());
        let f = [d.force_cav(), d.force_mat()];
        for (i, fi) in f.iter().enumerate() {
            let res = mm[i][0] * r.x_cav + mm[i][1] * r.x_mat - fi;
            assert!(res.norm() <= 1e-10 * fi);
        }
    }
}

#[test]
fn cavity_dominates_spectrum() {
    let s = fig3_scene();
    let m = spc_of(&s);
    let mut peak = [0.0f64; 3];
    for i in 0..601 {
        let w = 2.4 + 1.2 * i as f64 / 600.0;
        let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let r = driven_spc(&m, &d).unwrap();
        let zero = C64::new(0.0, 0.0);
        let parts = [r, ResponseAmplitudes { d_mat: zero, ..r }, ResponseAmplitudes { d_cav: zero, ..r }];
        for (p, x) in peak.iter_mut().zip(parts) {
            *p = p.max(scattering_cross_section(&x, &s.n_dcav, &s.n_dmat, 1.0, w).unwrap());
        }
    }
    // the matter dipole alone scatters under 1% of the total; through
    // interference it still moves the peak by a few percent
    assert!(peak[2] / peak[0] < 0.01, "{}", peak[2] / peak[0]);
    assert!((peak[0] / peak[1] - 1.0).abs() < 0.06, "{}", peak[0] / peak[1]);
}

#[test]
fn cross_section_scales_as_omega_to_fourth() {
    let r = ResponseAmplitudes {
        x_cav: C64::new(1.0, 0.5),
        x_mat: C64::new(0.1, -0.2),
        d_cav: C64::new(2.0, 1.0),
        d_mat: C64::new(0.3, -0.1),
    };
    let a = scattering_cross_section(&r, &Vec3::x(), &Vec3::y(), 1.0, 1.5).unwrap();
    let b = scattering_cross_section(&r, &Vec3::x(), &Vec3::y(), 1.0, 3.0).unwrap();
    assert!((b / a - 16.0).abs() < 1e-12);
}

fn peaks_near(x: &[f64], y: &[f64], targets: [f64; 2]) -> [(f64, f64); 2] {
    let m = local_maxima(x, y);
    targets.map(|t| *m.iter().min_by(|a, b| (a.0 - t).abs().partial_cmp(&(b.0 - t).abs()).unwrap()).unwrap())
}

type Peaks = [(f64, f64); 2];

fn peak_pair(g: f64) -> (Peaks, Peaks) {
    let s = fig3_scene();
    let p = s.pair().unwrap();
    let grid: Vec<f64> = (0..30001).map(|i| 1.5 + 3.0 * i as f64 / 30000.0).collect();
    let mut out = Vec::new();
    for v in [ModelVariant::SpC, ModelVariant::MoC] {
        let m = CoupledModel::new(p, v, g).unwrap();
        let e = m.eigenfrequencies();
        let y = cross_section_spectrum(&m, s.f_cav, s.f_mat, &s.n_dcav, &s.n_dmat, &grid, LossModel::ComplexFrequency)
            .unwrap();
        out.push(peaks_near(&grid, &y, [e.omega_plus.re, e.omega_minus.re]));
    }
    (out[0], out[1])
}

#[test]
fn spectra_agree_for_weak_coupling() {
    let (spc, moc) = peak_pair(0.03);
    for i in 0..2 {
        let d = (moc[i].1 / spc[i].1 - 1.0).abs();
        assert!(d < 0.10, "peak {i}: {d}");
    }
}

#[test]
fn moc_upper_peak_doubles_at_ultrastrong_coupling() {
    let (spc, moc) = peak_pair(0.9);
    let ratio = moc[0].1 / spc[0].1;
    assert!((ratio - 2.0).abs() <= 0.3, "{ratio}");
}

#[test]
fn drive_rejects_bad_inputs() {
    let f = OscillatorStrength::from_charge(1.0).unwrap();
    assert!(DriveSpec::new(0.0, 1.0, f, f).is_err());
    assert!(DriveSpec::new(1.0, -1.0, f, f).is_err());
    assert!(DriveSpec::new(f64::NAN, 1.0, f, f).is_err());
}

fn rotation(a: f64, b: f64, c: f64) -> nalgebra::Rotation3<f64> {
    nalgebra::Rotation3::from_euler_angles(a, b, c)
}

proptest! {
    #[test]
    fn response_is_linear(e in -3.0f64..3.0, w in 2.0f64..4.0) {
        let s = fig3_scene();
        let m = spc_of(&s);
        let e = 10f64.powf(e);
        let d1 = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let de = DriveSpec::new(e, w, s.f_cav, s.f_mat).unwrap();
        let a = driven_spc(&m, &d1).unwrap();
        let b = driven_spc(&m, &de).unwrap();
        prop_assert!(rel(b.x_cav, a.x_cav * e) <= 1e-12);
        prop_assert!(rel(b.x_mat, a.x_mat * e) <= 1e-12);
        let sa = scattering_cross_section(&a, &s.n_dcav, &s.n_dmat, 1.0, w).unwrap();
        let sb = scattering_cross_section(&b, &s.n_dcav, &s.n_dmat, e, w).unwrap();
        prop_assert!((sa - sb).abs() <= 1e-12 * sa);
    }

    #[test]
    fn spc_response_is_reciprocal(wc in 1.0f64..4.0, wm in 1.0f64..4.0, g in -0.5f64..0.5, w in 0.5f64..5.0,
                                   k in 0.0f64..0.1, gm in 0.0f64..0.1) {
        let p = OscillatorPair::new(wc, wm, k, gm).unwrap();
        let m = CoupledModel::new(p, ModelVariant::SpC, g).unwrap();
        let q: Quadratic2 = m.system().unwrap();
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        if let (Ok(a), Ok(b)) = (q.solve(w.into(), [one, zero]), q.solve(w.into(), [zero, one])) {
            prop_assert!((a[1] - b[0]).norm() <= 1e-12 * a[1].norm().max(1e-300));
        }
    }

    #[test]
    fn cross_section_rotation_invariant(a in 0.0f64..6.3, b in 0.0f64..6.3, c in 0.0f64..6.3, w in 2.4f64..3.6) {
        let s = fig3_scene();
        let m = spc_of(&s);
        let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let r = driven_spc(&m, &d).unwrap();
        let rot = rotation(a, b, c);
        let n1 = Vec3::new(1.0, 0.0, 0.0);
        let n2 = Vec3::new(0.6, 0.8, 0.0);
        let s0 = scattering_cross_section(&r, &n1, &n2, 1.0, w).unwrap();
        let s1 = scattering_cross_section(&r, &(rot * n1), &(rot * n2), 1.0, w).unwrap();
        prop_assert!((s0 - s1).abs() <= 1e-12 * s0);
    }

    #[test]
    fn lossy_peaks_track_eigenfrequencies(
        det in 0.8f64..1.25, g in 0.05f64..0.3, k in 0.001f64..0.01, gm in 0.001f64..0.01,
        moc in any::<bool>(),
    ) {
        let p = OscillatorPair::new(det, 1.0, k, gm).unwrap();
        let v = if moc { ModelVariant::MoC } else { ModelVariant::SpC };
        let lossy = CoupledModel::new(p, v, g).unwrap();
        let bare = CoupledModel::new(OscillatorPair::lossless(det, 1.0).unwrap(), v, g).unwrap();
        let e = bare.eigenfrequencies();
        let f = OscillatorStrength::from_charge(1.0).unwrap();
        let lo = e.omega_minus.re - 0.1;
        let grid: Vec<f64> = (0..20001).map(|i| lo + (e.omega_plus.re + 0.1 - lo) * i as f64 / 20000.0).collect();
        let y: Vec<f64> = grid
            .iter()
            .map(|&w| driven_response(&lossy, &DriveSpec::new(1.0, w, f, f).unwrap(), LossModel::ComplexFrequency)
                .unwrap().x_cav.norm())
            .collect();
        let peaks = peaks_near(&grid, &y, [e.omega_plus.re, e.omega_minus.re]);
        prop_assert!((peaks[0].0 - e.omega_plus.re).abs() <= k + gm, "{:?} {}", peaks, e.omega_plus);
        prop_assert!((peaks[1].0 - e.omega_minus.re).abs() <= k + gm, "{:?} {}", peaks, e.omega_minus);
    }
}

#[test]
fn complex_frequency_convention_differs_from_oracle_at_second_order() {
    let s = fig3_scene();
    let m = spc_of(&s);
    let mut worst = 0.0f64;
    for i in 0..200 {
        let w = 2.4 + 1.2 * i as f64 / 199.0;
        let d = DriveSpec::new(1.0, w, s.f_cav, s.f_mat).unwrap();
        let a = driven_spc(&m, &d).unwrap();
        let b = polarizability_oracle(&s, 1.0, w).unwrap();
        worst = worst.max(rel(a.d_cav, b.d_cav));
    }
    println!("complex-frequency vs oracle: {worst:e}");
    assert!(worst > 1e-9 && worst < 1e-2);
}
