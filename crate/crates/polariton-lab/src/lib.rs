//! Scenario runner for `polariton-core`: parses scenario files, evaluates
//! them and writes CSV (optionally SVG) artifacts with a JSON summary.

pub mod error;
pub mod figures;
pub mod kinds;
pub mod output;
pub mod scenario;
pub mod table;

pub use error::{LabError, Result};
pub use output::Summary;
pub use scenario::{Kind, Scenario};

use output::{atomic_write, sha256_hex, Check};
use scenario::Format;
use std::path::{Path, PathBuf};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Evaluates `scenario` and writes its artifacts under `out_dir`. `input`
/// is the source text, hashed into the summary.
pub fn run_scenario(scenario: &Scenario, input: &[u8], out_dir: &Path) -> Result<Summary> {
    let outcome = kinds::evaluate(scenario)?;
    let csv_path = out_dir.join(&scenario.output.path);
    let stem = csv_path.with_extension("");
    let file_name = |p: &Path| p.strip_prefix(out_dir).unwrap_or(p).to_string_lossy().replace('\\', "/");
    let mut outputs = vec![csv_path.clone()];
    atomic_write(&csv_path, outcome.table.to_csv().as_bytes())?;
    if scenario.output.format == Format::Svg {
        let svg = stem.with_extension("svg");
        atomic_write(&svg, outcome.table.to_svg(scenario.kind.name()).as_bytes())?;
        outputs.push(svg);
    }
    let summary_path = PathBuf::from(format!("{}.summary.json", stem.display()));
    let summary = Summary {
        tool: "polariton-lab",
        version: VERSION,
        schema_version: scenario::SCHEMA_VERSION,
        kind: scenario.kind.name(),
        input_sha256: sha256_hex(input),
        outputs: outputs.iter().map(|p| file_name(p)).collect(),
        rows: outcome.table.rows(),
        columns: outcome.table.columns.iter().map(|c| format!("{} ({})", c.name, c.unit)).collect(),
        check: outcome.check.map(|c| Check { max_deviation: c.max_deviation, tolerance: c.tolerance, pass: c.pass() }),
        details: outcome.details,
    };
    let mut json = serde_json::to_string_pretty(&summary).expect("summary serializes");
    json.push('\n');
    atomic_write(&summary_path, json.as_bytes())?;
    Ok(summary)
}

/// Runs a scenario file. Relative output paths resolve against `out_dir`,
/// or the file's directory when `out_dir` is `None`.
pub fn run_file(path: &Path, out_dir: Option<&Path>) -> Result<Summary> {
    let bytes = std::fs::read(path).map_err(|e| LabError::io(path, e))?;
    let text =
        String::from_utf8(bytes.clone()).map_err(|_| LabError::schema(".", "scenario file is not valid UTF-8"))?;
    let scenario = Scenario::parse(&text)?;
    let dir = match out_dir {
        Some(d) => d.to_path_buf(),
        None => path.parent().map(Path::to_path_buf).unwrap_or_default(),
    };
    run_scenario(&scenario, &bytes, &dir)
}

/// Like [`run_file`] for oracle scenarios, failing when the comparison
/// exceeds its tolerance.
pub fn run_oracle(path: &Path, out_dir: Option<&Path>) -> Result<Summary> {
    let s = run_file(path, out_dir)?;
    match s.check {
        Some(c) if c.pass => Ok(s),
        Some(c) => Err(LabError::OracleMismatch { deviation: c.max_deviation, tolerance: c.tolerance }),
        None => Err(LabError::schema("kind", format!("expected an oracle scenario, got `{}`", s.kind))),
    }
}

/// Writes `<id>.csv` and `<id>.summary.json` for one figure.
pub fn reproduce(id: &str, out_dir: &Path) -> Result<Summary> {
    let fig = figures::find(id)
        .ok_or_else(|| LabError::UnknownFigure { id: id.to_string(), valid: figures::ids().join(", ") })?;
    let scenario = Scenario::parse(fig.scenario)?;
    run_scenario(&scenario, fig.scenario.as_bytes(), out_dir)
}

/// Applies `POLARITON_LAB_THREADS` to the global thread pool.
pub fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("POLARITON_LAB_THREADS") else {
        return Ok(());
    };
    let n: usize =
        v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            LabError::schema("POLARITON_LAB_THREADS", format!("expected a positive integer, got `{v}`"))
        })?;
    // a pool that is already set up keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}
