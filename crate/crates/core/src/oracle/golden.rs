//! Golden enumeration reports, one JSON file per fixture.

use std::path::{Path, PathBuf};

use thiserror::Error;

use super::EnumerationReport;

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("cannot access golden file {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed golden file {path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
}

pub fn golden_path(dir: &Path, fixture: &str) -> PathBuf {
    dir.join(format!("monads_{fixture}.json"))
}

pub fn write_golden(dir: &Path, fixture: &str, report: &EnumerationReport) -> Result<PathBuf, GoldenError> {
    let path = golden_path(dir, fixture);
    let io = |source| GoldenError::Io { path: path.clone(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    std::fs::write(&path, report.to_json() + "\n").map_err(io)?;
    Ok(path)
}

pub fn read_golden(dir: &Path, fixture: &str) -> Result<EnumerationReport, GoldenError> {
    let path = golden_path(dir, fixture);
    let text = std::fs::read_to_string(&path).map_err(|source| GoldenError::Io { path: path.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| GoldenError::Parse { path, source })
}
