use std::path::Path;
use std::process::{Command, Output};

fn lab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polariton-lab"))
        .args(args)
        .current_dir(dir)
        .env_remove("POLARITON_LAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scenario(dir: &Path, text: &str) -> String {
    let p = dir.join("s.toml");
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn empty_file_names_kind() {
    let d = tempfile::tempdir().unwrap();
    let f = scenario(d.path(), "");
    let o = lab(&["run", &f], d.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`kind`"), "{}", stderr(&o));
}

#[test]
fn unknown_key_exit_two_with_path() {
    let d = tempfile::tempdir().unwrap();
    let f = scenario(
        d.path(),
        "kind = \"dispersion\"\n[params]\nomega_to = 1.0\ng = 0.3\nmodels = [\"moc\"]\n\
         ck_ratio = { start = 0.0, stop = 1.0, points = 3, step = 1 }\n",
    );
    let o = lab(&["run", &f], d.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("params.ck_ratio.step"), "{}", stderr(&o));
}

#[test]
fn physics_error_exit_three() {
    let d = tempfile::tempdir().unwrap();
    let f = scenario(
        d.path(),
        "kind = \"dispersion\"\n[params]\nomega_to = -1.0\ng = 0.3\nmodels = [\"moc\"]\n\
         ck_ratio = { start = 0.0, stop = 1.0, points = 3 }\n",
    );
    let o = lab(&["run", &f], d.path());
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn missing_file_exit_four() {
    let d = tempfile::tempdir().unwrap();
    let o = lab(&["run", "nowhere.toml"], d.path());
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn unknown_figure_lists_ids() {
    let d = tempfile::tempdir().unwrap();
    let o = lab(&["reproduce", "fig9z"], d.path());
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    for id in polariton_lab::figures::ids() {
        assert!(e.contains(id), "{id} missing from: {e}");
    }
}

#[test]
fn bad_thread_count_rejected() {
    let d = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_polariton-lab"))
        .arg("constants")
        .env("POLARITON_LAB_THREADS", "0")
        .current_dir(d.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constants_listed() {
    let d = tempfile::tempdir().unwrap();
    let o = lab(&["constants"], d.path());
    assert!(o.status.success());
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("hbar_c") && s.contains("1.973269804e2"), "{s}");
}

#[test]
fn reproduce_writes_into_out_dir() {
    let d = tempfile::tempdir().unwrap();
    let o = lab(&["reproduce", "figS3a", "--out", "figs"], d.path());
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(d.path().join("figs/figS3a.csv").is_file());
    assert!(d.path().join("figs/figS3a.summary.json").is_file());
}

#[test]
fn oracle_command_fails_on_mismatch() {
    let d = tempfile::tempdir().unwrap();
    // a truncation of two quanta cannot resolve the gaps to 1e-12
    let f = scenario(
        d.path(),
        "kind = \"oracle\"\n[params]\ncheck = \"hopfield\"\nn_max = 2\ntolerance = 1e-12\n\
         points = [{ omega_cav = 1.0, omega_mat = 1.0, g = 0.4, d = 0.16 }]\n",
    );
    let o = lab(&["oracle", &f], d.path());
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(d.path().join("oracle.summary.json").is_file());

    let f = scenario(d.path(), "kind = \"dispersion\"\n[params]\nomega_to = 1.0\ng = 0.3\nmodels = [\"moc\"]\nck_ratio = { start = 0.0, stop = 1.0, points = 3 }\n");
    let o = lab(&["oracle", &f], d.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sample_oracles_pass() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let d = tempfile::tempdir().unwrap();
    for name in ["oracle_hopfield.toml", "oracle_polarizability.toml"] {
        let f = root.join(name);
        let o = lab(&["oracle", f.to_str().unwrap(), "--out", d.path().to_str().unwrap()], d.path());
        assert!(o.status.success(), "{name}: {}", stderr(&o));
    }
}
