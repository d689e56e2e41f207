use polariton_core::models::*;
use polariton_core::C64;
use proptest::prelude::*;

// Closed forms evaluated directly, independent of the library's solver.
fn spc_oracle(wc: f64, wm: f64, g: f64) -> (f64, f64) {
    let s = wc * wc + wm * wm;
    let d = ((wc * wc - wm * wm).powi(2) + 16.0 * g * g * wc * wm).sqrt();
    (((s + d) / 2.0).sqrt(), ((s - d) / 2.0).sqrt())
}

fn moc_oracle(wc: f64, wm: f64, g: f64) -> (f64, f64) {
    let s = wc * wc + wm * wm + 4.0 * g * g;
    let d = (s * s - 4.0 * wc * wc * wm * wm).sqrt();
    (((s + d) / 2.0).sqrt(), ((s - d) / 2.0).sqrt())
}

fn sweep(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

#[test]
fn moc_resonant_splitting_is_twice_g() {
    for g in [0.05, 0.1, 0.3, 0.5] {
        let h = CoupledModel::moc(1.0, 1.0, g).unwrap().eigenfrequencies();
        assert!((h.splitting() / (2.0 * g) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn spc_resonant_splitting() {
    let g = 0.3;
    let h = CoupledModel::spc(1.0, 1.0, g).unwrap().eigenfrequencies();
    assert!((h.splitting() / (2.11 * g) - 1.0).abs() < 5e-3, "{}", h.splitting() / g);
    let (p, m) = spc_oracle(1.0, 1.0, g);
    assert!((h.omega_plus.re - p).abs() < 1e-14 && (h.omega_minus.re - m).abs() < 1e-14);
}

#[test]
fn moc_cavity_to_zero_asymptote() {
    let h = CoupledModel::moc(1e-4, 1.0, 0.3).unwrap().eigenfrequencies();
    assert!((h.omega_plus.re / 1.16619 - 1.0).abs() < 1e-3);
    assert!((h.omega_plus.re / (1.0f64 + 0.36).sqrt() - 1.0).abs() < 1e-3);
}

#[test]
fn lower_branch_cutoff() {
    assert!(!spc_lower_branch_exists(0.35, 1.0, 0.3));
    let m = CoupledModel::spc(0.37, 1.0, 0.3).unwrap();
    assert!(spc_lower_branch_exists(0.37, 1.0, 0.3));
    let h = m.eigenfrequencies();
    assert!(h.lower_branch_real && h.omega_minus.im == 0.0 && h.omega_minus.re > 0.0);
    let h = CoupledModel::spc(0.35, 1.0, 0.3).unwrap().eigenfrequencies();
    assert!(!h.lower_branch_real);
}

#[test]
fn min_splitting_moc() {
    let grid = sweep(0.2, 3.0, 2001);
    let (s, at) = min_splitting(ModelVariant::MoC, 0.3, 1.0, &grid).unwrap();
    assert!((s - 0.6).abs() < 1e-9, "{s}");
    assert!((at - 1.0).abs() < 1e-4, "{at}");
}

#[test]
fn min_splitting_uncoupled() {
    let grid = sweep(0.2, 3.0, 1001);
    for v in [ModelVariant::SpC, ModelVariant::MoC, ModelVariant::Linearized] {
        let (s, at) = min_splitting(v, 0.0, 1.0, &grid).unwrap();
        assert!(s < 1e-5 && (at - 1.0).abs() < 1e-5, "{v:?} {s} {at}");
    }
}

#[test]
fn min_splitting_spc_shifts_blue() {
    let grid = sweep(0.2, 3.0, 2001);
    let (s, at) = min_splitting(ModelVariant::SpC, 0.3, 1.0, &grid).unwrap();
    assert!(at > 1.0 && s > 0.6, "{s} {at}");
    // brute-force oracle on a very fine grid
    let fine = sweep(0.9, 1.5, 600_001);
    let best = fine
        .iter()
        .map(|&wc| {
            let (p, m) = spc_oracle(wc, 1.0, 0.3);
            (p - m, wc)
        })
        .fold((f64::INFINITY, 0.0), |a, b| if b.0 < a.0 { b } else { a });
    assert!((s - best.0).abs() < 1e-9, "{s} {}", best.0);
    assert!((at - best.1).abs() < 1e-4, "{at} {}", best.1);
}

#[test]
fn min_splitting_empty_grid() {
    assert!(min_splitting(ModelVariant::SpC, 0.3, 1.0, &[0.1, 0.2]).is_err());
    assert!(min_splitting(ModelVariant::SpC, 0.3, 1.0, &[]).is_err());
}

#[test]
fn alternative_models_share_spectrum() {
    let base = CoupledModel::moc(1.0, 1.0, 0.3).unwrap();
    let h = base.eigenfrequencies();
    let a1 = alternative_model_equivalence(&base).unwrap();
    assert_eq!(a1.variant, ModelVariant::AltCoulombDressedCavity);
    assert!((a1.pair.omega_cav - (1.0f64 + 0.36).sqrt()).abs() < 1e-15);
    let a2 = dipole_dressed_matter(&base).unwrap();
    for m in [a1, a2] {
        let e = m.eigenfrequencies();
        assert!((e.omega_plus - h.omega_plus).norm() <= 1e-10 * h.omega_plus.norm());
        assert!((e.omega_minus - h.omega_minus).norm() <= 1e-10 * h.omega_minus.norm());
    }
    let spc = CoupledModel::spc(1.2, 1.0, 0.2).unwrap();
    let d = alternative_model_equivalence(&spc).unwrap();
    let (a, b) = (spc.eigenfrequencies(), d.eigenfrequencies());
    assert!((a.omega_plus - b.omega_plus).norm() <= 1e-10 * a.omega_plus.norm());
    assert!((a.omega_minus - b.omega_minus).norm() <= 1e-10 * a.omega_minus.norm());
}

#[test]
fn alternative_identity_at_zero_coupling() {
    let base = CoupledModel::moc(1.3, 1.0, 0.0).unwrap();
    let a = alternative_model_equivalence(&base).unwrap();
    assert_eq!(a.pair.omega_cav, 1.3);
    assert_eq!(a.g, 0.0);
    assert!(
        alternative_model_equivalence(&CoupledModel::new(base.pair, ModelVariant::Linearized, 0.1).unwrap()).is_err()
    );
}

#[test]
fn linearized_closed_form() {
    let (p, m) = linearized_eigenfrequencies(1.0, 1.0, C64::new(0.0, 0.2)).unwrap();
    assert!((p - m - 0.4).abs() < 1e-15);
    let (p, m) = linearized_eigenfrequencies(1.5, 1.0, C64::new(0.0, 0.0)).unwrap();
    assert_eq!((p, m), (1.5, 1.0));
    assert!(linearized_eigenfrequencies(0.0, 1.0, C64::new(0.1, 0.0)).is_err());
}

#[test]
fn linearized_tracks_moc_at_moderate_coupling() {
    let mut worst: f64 = 0.0;
    for wc in sweep(0.2, 2.0, 1801) {
        let (lp, lm) = linearized_eigenfrequencies(wc, 1.0, C64::new(0.0, 0.1)).unwrap();
        let (p, m) = moc_oracle(wc, 1.0, 0.1);
        worst = worst.max((lp - p).abs()).max((lm - m).abs());
    }
    assert!(worst <= 0.02, "{worst}");
}

#[test]
fn moc_ratio_is_imaginary() {
    let m = CoupledModel::moc(1.1, 1.0, 0.2).unwrap();
    for b in [Branch::Plus, Branch::Minus] {
        let r = m.eigenvector_ratio(b).unwrap();
        assert!(r.re.abs() <= 1e-12 * r.norm(), "{r}");
    }
    let h = m.eigenfrequencies();
    let w = h.omega_plus;
    let expect = -2.0 * C64::i() * w * 0.2 / (1.21 - w * w);
    assert!((m.eigenvector_ratio(Branch::Plus).unwrap() - expect).norm() < 1e-12 * expect.norm());
}

#[test]
fn ratio_of_uncoupled_matter_mode_is_zero() {
    let m = CoupledModel::spc(1.5, 1.0, 0.0).unwrap();
    assert_eq!(m.eigenvector_ratio(Branch::Minus).unwrap().norm(), 0.0);
    assert!(m.eigenvector_ratio(Branch::Plus).is_err());
}

#[test]
fn spc_resonant_ratio_tends_to_unity() {
    for g in [1e-2, 1e-4, 1e-6] {
        let m = CoupledModel::spc(1.0, 1.0, g).unwrap();
        let r = m.eigenvector_ratio(Branch::Plus).unwrap();
        assert!((r.norm() - 1.0).abs() < 10.0 * g, "{g} {r}");
    }
}

#[test]
fn lossy_branches_are_ordered() {
    let pair = OscillatorPair::new(3.0, 3.0, 0.02, 0.01).unwrap();
    for v in [ModelVariant::SpC, ModelVariant::MoC, ModelVariant::Linearized] {
        let h = CoupledModel::new(pair, v, 0.3).unwrap().eigenfrequencies();
        assert!(h.omega_plus.re >= h.omega_minus.re);
        assert!(h.omega_plus.im < 0.0 && h.omega_minus.im < 0.0);
    }
}

fn q_system(m: &CoupledModel) -> polariton_core::quadratic::Quadratic2 {
    m.system().unwrap()
}

proptest! {
    #[test]
    fn closed_form_matches_state_space(wc in 0.1f64..3.0, g in 0.0f64..0.5, spring in any::<bool>()) {
        let m = if spring { CoupledModel::spc(wc, 1.0, g) } else { CoupledModel::moc(wc, 1.0, g) }.unwrap();
        let h = m.eigenfrequencies();
        let (p, q) = q_system(&m).state_space_roots().unwrap();
        let scale = h.omega_plus.norm();
        prop_assert!((p - h.omega_plus).norm() <= 1e-12 * scale);
        prop_assert!((q - h.omega_minus).norm() <= 1e-12 * scale);
    }

    #[test]
    fn closed_form_matches_oracle(wc in 0.1f64..3.0, g in 0.0f64..0.5) {
        let h = CoupledModel::moc(wc, 1.0, g).unwrap().eigenfrequencies();
        let (p, m) = moc_oracle(wc, 1.0, g);
        prop_assert!((h.omega_plus.re - p).abs() <= 1e-12 * p);
        prop_assert!((h.omega_minus.re - m).abs() <= 1e-12 * p);
        prop_assume!(spc_lower_branch_exists(wc, 1.0, g));
        let h = CoupledModel::spc(wc, 1.0, g).unwrap().eigenfrequencies();
        let (p, m) = spc_oracle(wc, 1.0, g);
        prop_assert!((h.omega_plus.re - p).abs() <= 1e-12 * p);
        prop_assert!((h.omega_minus.re - m).abs() <= 1e-12 * p);
    }

    #[test]
    fn moc_product_rule(wc in 0.1f64..3.0, g in 0.0f64..0.5) {
        let h = CoupledModel::moc(wc, 1.0, g).unwrap().eigenfrequencies();
        prop_assert!((h.omega_plus.re * h.omega_minus.re / wc - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn weak_coupling_models_agree(wc in 0.5f64..2.0) {
        let a = CoupledModel::spc(wc, 1.0, 0.01).unwrap().eigenfrequencies();
        let b = CoupledModel::moc(wc, 1.0, 0.01).unwrap().eigenfrequencies();
        prop_assert!(((a.omega_plus - b.omega_plus) / b.omega_plus).norm() < 0.01);
        prop_assert!(((a.omega_minus - b.omega_minus) / b.omega_minus).norm() < 0.01);
    }

    #[test]
    fn spc_spectrum_even_in_g(wc in 0.1f64..3.0, g in 0.0f64..0.5) {
        let a = CoupledModel::spc(wc, 1.0, g).unwrap().eigenfrequencies();
        let b = CoupledModel::spc(wc, 1.0, -g).unwrap().eigenfrequencies();
        prop_assert_eq!(a.omega_plus, b.omega_plus);
        prop_assert_eq!(a.omega_minus, b.omega_minus);
    }

    #[test]
    fn alternatives_equivalent(wc in 0.1f64..3.0, g in 0.0f64..0.5) {
        let base = CoupledModel::moc(wc, 1.0, g).unwrap();
        let h = base.eigenfrequencies();
        for alt in [coulomb_dressed_cavity(&base).unwrap(), dipole_dressed_matter(&base).unwrap()] {
            let e = alt.eigenfrequencies();
            prop_assert!((e.omega_plus - h.omega_plus).norm() <= 1e-10 * h.omega_plus.norm());
            prop_assert!((e.omega_minus - h.omega_minus).norm() <= 1e-10 * h.omega_minus.norm());
        }
        let spc = CoupledModel::spc(wc, 1.0, g).unwrap();
        prop_assume!(spc_lower_branch_exists(wc, 1.0, g));
        if let Ok(d) = dipole_dipole_dressed_cavity(&spc) {
            let (a, b) = (spc.eigenfrequencies(), d.eigenfrequencies());
            prop_assert!((a.omega_plus - b.omega_plus).norm() <= 1e-10 * a.omega_plus.norm());
            prop_assert!((a.omega_minus - b.omega_minus).norm() <= 1e-10 * a.omega_plus.norm());
        }
    }

    #[test]
    fn ratio_solves_the_system(wc in 0.1f64..3.0, g in 0.001f64..0.5, spring in any::<bool>()) {
        let m = if spring { CoupledModel::spc(wc, 1.0, g) } else { CoupledModel::moc(wc, 1.0, g) }.unwrap();
        let h = m.eigenfrequencies();
        prop_assume!(h.lower_branch_real);
        let q = q_system(&m);
        for b in [Branch::Plus, Branch::Minus] {
            let w = h.omega(b);
            let r = m.eigenvector_ratio(b).unwrap();
            let mat = q.matrix(w);
            for row in mat {
                let res = row[0] * r + row[1];
                let norm = (row[0].norm_sqr() + row[1].norm_sqr()).sqrt() * r.norm().max(1.0);
                prop_assert!(res.norm() <= 1e-10 * norm);
            }
        }
    }
}

#[test]
fn moc_forbidden_band() {
    for g in [0.05, 0.2, 0.4] {
        let top = (1.0f64 + 4.0 * g * g).sqrt();
        for wc in sweep(1e-3, 10.0, 20_000) {
            let h = CoupledModel::moc(wc, 1.0, g).unwrap().eigenfrequencies();
            for w in [h.omega_plus.re, h.omega_minus.re] {
                assert!(!(w > 1.0 + 1e-12 && w < top - 1e-12), "g = {g}, ω_cav = {wc}, ω = {w}");
            }
        }
    }
}
