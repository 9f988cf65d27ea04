//! Solved-table cache: one JSON document per (rank, canonical partition),
//! written atomically via a temp file and rename, validated on load.
//! A corrupted or stale file is never trusted — it is recomputed and
//! overwritten, with a note on the diagnostic stream.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use weylchar::document::OutputDocument;
use weylchar::multiplicity::solve_multiplicities;
use weylchar::weights::DominantWeight;

use crate::CliError;

pub const CACHE_ENV: &str = "WEYLCHAR_CACHE_DIR";

pub fn resolve_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(dir) = flag {
        return Some(dir.to_path_buf());
    }
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

pub fn key_path(dir: &Path, n: usize, dominant: &DominantWeight) -> PathBuf {
    let parts: Vec<String> = dominant
        .partition()
        .parts()
        .iter()
        .map(|p| p.to_string())
        .collect();
    dir.join(format!("A{}__{}.json", n - 1, parts.join("-")))
}

fn try_load(path: &Path, n: usize, dominant: &DominantWeight) -> Option<OutputDocument> {
    let bytes = fs::read(path).ok()?;
    let doc: OutputDocument = serde_json::from_slice(&bytes).ok()?;
    let table = doc.to_table().ok()?;
    if table.rank() != n || table.dominant() != dominant {
        return None;
    }
    Some(doc)
}

fn store_atomic(dir: &Path, path: &Path, doc: &OutputDocument) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let json = serde_json::to_string_pretty(doc).expect("document serializes");
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(json.as_bytes())?;
    tmp.write_all(b"\n")?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Cached table if present and valid, otherwise solve, store, and return.
/// Cache trouble (unwritable directory, corrupt file) downgrades to a
/// warning on stderr; the computation itself is never compromised.
pub fn load_or_compute(
    dir: &Path,
    n: usize,
    dominant: &DominantWeight,
) -> Result<OutputDocument, CliError> {
    let path = key_path(dir, n, dominant);
    if path.exists() {
        match try_load(&path, n, dominant) {
            Some(doc) => return Ok(doc),
            None => {
                eprintln!(
                    "warning: cache file {} invalid, recomputing",
                    path.display()
                );
            }
        }
    }
    let table = solve_multiplicities(n, dominant)?;
    let doc = OutputDocument::from_table(&table)?;
    if let Err(e) = store_atomic(dir, &path, &doc) {
        eprintln!(
            "warning: could not write cache file {}: {e}",
            path.display()
        );
    }
    Ok(doc)
}
