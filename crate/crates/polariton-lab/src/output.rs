use crate::error::{LabError, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::Path;

/// Writes `bytes` to a temporary file next to `path` and renames it into
/// place, so readers never see a partial file.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).map_err(|e| LabError::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| LabError::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| LabError::io(path, e))?;
    tmp.as_file().sync_all().map_err(|e| LabError::io(path, e))?;
    tmp.persist(path).map_err(|e| LabError::io(path, e.error))?;
    Ok(())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Machine-readable record of one run. Contains nothing that varies between
/// runs of the same input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema_version: u32,
    pub kind: &'static str,
    pub input_sha256: String,
    /// File names relative to the output directory.
    pub outputs: Vec<String>,
    pub rows: usize,
    pub columns: Vec<String>,
    /// Set for oracle runs.
    pub check: Option<Check>,
    pub details: serde_json::Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Check {
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}
