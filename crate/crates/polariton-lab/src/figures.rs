//! Figure targets. Each one is an ordinary scenario document, so
//! `reproduce` goes through exactly the same pipeline as `run`.

pub struct Figure {
    pub id: &'static str,
    pub title: &'static str,
    pub scenario: &'static str,
}

macro_rules! figure {
    ($id:literal, $title:literal, $body:literal) => {
        Figure {
            id: $id,
            title: $title,
            scenario: concat!("version = 1\n", $body, "\n[output]\npath = \"", $id, ".csv\"\n"),
        }
    };
}

pub const FIGURES: &[Figure] = &[
    figure!(
        "fig1c",
        "SpC and MoC eigenfrequencies, g = 0.1 omega_mat",
        r#"kind = "eigen_sweep"
[params]
omega_mat = 1.0
g = 0.1
variants = ["spc", "mc"]
cavity_ratio = { start = 0.2, stop = 2.0, points = 601 }"#
    ),
    figure!(
        "fig1d",
        "SpC and MoC eigenfrequencies, g = 0.3 omega_mat",
        r#"kind = "eigen_sweep"
[params]
omega_mat = 1.0
g = 0.3
variants = ["spc", "mc"]
cavity_ratio = { start = 0.2, stop = 2.0, points = 601 }"#
    ),
    figure!(
        "fig1e",
        "Minimum splitting against coupling strength",
        r#"kind = "min_splitting"
[params]
omega_mat = 1.0
variants = ["spc", "mc"]
g_ratio = { start = 0.0, stop = 0.5, points = 101 }
cavity_ratio = { start = 0.01, stop = 5.0, points = 4991 }"#
    ),
    figure!(
        "fig2b",
        "Hybrid-mode fields along the axis of a box cavity, g = 2.5e-4 omega_cav",
        r#"kind = "fieldmap"
[params]
g = 7.5e-4
line = { from = [-146.0, 0.0, 0.0], to = [146.0, 0.0, 0.0], points = 2921 }
[params.scene]
geometry = "box"
l = [292.0, 292.0, 215.0]
v_eff = 4.483e6
omega_cav = 3.0
omega_mat = 3.0
n_d = [0.0, 0.0, 1.0]
emitter = { charge = 118.74 }"#
    ),
    figure!(
        "fig2c",
        "Field fractions at (10.5 nm, 0, 0) against detuning, g = 2.5e-4 omega_cav",
        r#"kind = "fractions"
[params]
g = 7.5e-4
position = [10.5, 0.0, 0.0]
omega_mat = { start = 0.01, stop = 6.0, points = 600 }
[params.scene]
l = [292.0, 292.0, 215.0]
v_eff = 4.483e6
omega_cav = 3.0
omega_mat = 3.0
n_d = [0.0, 0.0, 1.0]
emitter = { charge = 118.74 }"#
    ),
    figure!(
        "fig2d",
        "Field fractions at (10.5 nm, 0, 0) against detuning, g = 0.2 omega_cav",
        r#"kind = "fractions"
[params]
g = 0.6
position = [10.5, 0.0, 0.0]
omega_mat = { start = 0.01, stop = 6.0, points = 600 }
[params.scene]
l = [292.0, 292.0, 215.0]
v_eff = 4.483e6
omega_cav = 3.0
omega_mat = 3.0
n_d = [0.0, 0.0, 1.0]
emitter = { charge = 118.74 }"#
    ),
    figure!(
        "fig3b",
        "Fields along x for a molecule next to a nanoparticle, g = 0.1 omega_cav",
        r#"kind = "fieldmap"
[params]
g = 0.3
variant = "spc"
line = { from = [-20.0, 0.0, 0.0], to = [20.0, 0.0, 0.0], points = 4001 }
[params.scene]
geometry = "nanoparticle"
radius = 5.0
r_mat = [6.0, 0.0, 0.0]
n_dcav = [1.0, 0.0, 0.0]
n_dmat = [1.0, 0.0, 0.0]
omega_cav = 3.0
omega_mat = 3.0
kappa = 0.02
gamma = 0.01
cavity_charge = 4345.0
emitter = { charge = 118.74 }"#
    ),
    figure!(
        "fig3c",
        "Scattering cross-section, tuned and detuned, g = 0.1 omega_cav",
        r#"kind = "spectrum"
[params]
omega = { start = 2.4, stop = 3.6, points = 2401 }
curves = [
  { label = "tuned", variant = "spc", g = 0.3 },
  { label = "detuned", variant = "spc", g = 0.3, omega_mat = 3.2 },
]
[params.scene]
radius = 5.0
r_mat = [6.0, 0.0, 0.0]
n_dcav = [1.0, 0.0, 0.0]
n_dmat = [1.0, 0.0, 0.0]
omega_cav = 3.0
omega_mat = 3.0
kappa = 0.02
gamma = 0.01
cavity_charge = 4345.0
emitter = { charge = 118.74 }"#
    ),
    figure!(
        "fig3d",
        "SpC and MoC cross-sections, g = 1e-2 omega_cav",
        r#"kind = "spectrum"
[params]
omega = { start = 2.8, stop = 3.2, points = 4001 }
curves = [
  { label = "spc", variant = "spc", g = 0.03 },
  { label = "mc", variant = "mc", g = 0.03 },
]
[params.scene]
radius = 5.0
r_mat = [6.0, 0.0, 0.0]
n_dcav = [1.0, 0.0, 0.0]
n_dmat = [1.0, 0.0, 0.0]
omega_cav = 3.0
omega_mat = 3.0
kappa = 0.02
gamma = 0.01
cavity_charge = 4345.0
emitter = { charge = 118.74 }"#
    ),
    figure!(
        "fig3e",
        "SpC and MoC cross-sections, g = 0.3 omega_cav",
        r#"kind = "spectrum"
[params]
omega = { start = 1.5, stop = 4.5, points = 30001 }
curves = [
  { label = "spc", variant = "spc", g = 0.9 },
  { label = "mc", variant = "mc", g = 0.9 },
]
[params.scene]
radius = 5.0
r_mat = [6.0, 0.0, 0.0]
n_dcav = [1.0, 0.0, 0.0]
n_dmat = [1.0, 0.0, 0.0]
omega_cav = 3.0
omega_mat = 3.0
kappa = 0.02
gamma = 0.01
cavity_charge = 4345.0
emitter = { charge = 118.74 }"#
    ),
    figure!(
        "fig4b",
        "Permittivity of the ensemble, G = 0.3 Omega_mat",
        r#"kind = "permittivity"
[params]
omega_mat = 1.0
g = 0.3
variants = ["moc", "spc"]
omega = { start = 0.001, stop = 2.0, points = 2000 }"#
    ),
    figure!(
        "figS1a",
        "SpC, MoC and linearized eigenfrequencies, g = 0.1 omega_mat",
        r#"kind = "eigen_sweep"
[params]
omega_mat = 1.0
g = 0.1
variants = ["spc", "mc", "lin"]
cavity_ratio = { start = 0.2, stop = 2.0, points = 601 }"#
    ),
    figure!(
        "figS1b",
        "SpC, MoC and linearized eigenfrequencies, g = 0.3 omega_mat",
        r#"kind = "eigen_sweep"
[params]
omega_mat = 1.0
g = 0.3
variants = ["spc", "mc", "lin"]
cavity_ratio = { start = 0.2, stop = 2.0, points = 601 }"#
    ),
    figure!(
        "figS1c",
        "Minimum splitting including the linearized model",
        r#"kind = "min_splitting"
[params]
omega_mat = 1.0
variants = ["spc", "mc", "lin"]
g_ratio = { start = 0.0, stop = 0.5, points = 101 }
cavity_ratio = { start = 0.01, stop = 5.0, points = 4991 }"#
    ),
    figure!(
        "figS2",
        "SpC coupling scaling as sqrt(omega_cav omega_mat)",
        r#"kind = "eigen_sweep"
[params]
omega_mat = 0.1
g = 0.03
variants = ["spc", "mc"]
sqrt_scaled = ["spc"]
cavity_ratio = { start = 0.02, stop = 2.0, points = 991 }"#
    ),
    figure!(
        "figS3a",
        "Bulk dispersion, momentum-coupling model",
        r#"kind = "dispersion"
[params]
omega_to = 1.0
g = 0.3
models = ["moc"]
ck_ratio = { start = 0.0, stop = 3.0, points = 601 }"#
    ),
    figure!(
        "figS3b",
        "Bulk dispersion, alternative model 1",
        r#"kind = "dispersion"
[params]
omega_to = 1.0
g = 0.3
models = ["a1"]
ck_ratio = { start = 0.0, stop = 3.0, points = 601 }"#
    ),
    figure!(
        "figS3c",
        "Bulk dispersion, alternative model 2",
        r#"kind = "dispersion"
[params]
omega_to = 1.0
g = 0.3
models = ["a2"]
ck_ratio = { start = 0.0, stop = 3.0, points = 601 }"#
    ),
    figure!(
        "figS3d",
        "Coupling strength against wavevector for the three bulk models",
        r#"kind = "dispersion"
[params]
omega_to = 1.0
g = 0.3
models = ["moc", "a1", "a2"]
ck_ratio = { start = 0.0, stop = 3.0, points = 601 }"#
    ),
];

pub fn ids() -> Vec<&'static str> {
    FIGURES.iter().map(|f| f.id).collect()
}

pub fn find(id: &str) -> Option<&'static Figure> {
    FIGURES.iter().find(|f| f.id == id)
}
