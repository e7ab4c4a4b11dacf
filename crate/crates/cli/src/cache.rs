//! On-disk cache of core enumerations, one JSON file per `(s, t)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use stcore::verify::{core_report, EnumerationReport};
use stcore::CoreParams;

use crate::CliError;

/// Bumped whenever the cached report layout changes.
pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    s: u32,
    t: u32,
    report: EnumerationReport,
}

pub fn cache_path(dir: &Path, params: CoreParams) -> PathBuf {
    dir.join(format!("enumerate-{}-{}.json", params.s(), params.t()))
}

/// Full enumeration with witnesses, read from `dir` when a valid entry
/// exists and written there otherwise. Notes go to `err`.
pub fn cached_core_report(
    dir: &Path,
    params: CoreParams,
    limit: usize,
    err: &mut dyn Write,
) -> Result<EnumerationReport, CliError> {
    let path = cache_path(dir, params);
    if let Ok(bytes) = fs::read(&path) {
        match serde_json::from_slice::<CacheFile>(&bytes) {
            Ok(file) if file.version == CACHE_VERSION && (file.s, file.t) == (params.s(), params.t()) => {
                let _ = writeln!(err, "cached: {}", path.display());
                return Ok(file.report);
            }
            Ok(file) => {
                let _ = writeln!(
                    err,
                    "warning: ignoring stale cache {} (version {}), recomputing",
                    path.display(),
                    file.version
                );
            }
            Err(e) => {
                let _ = writeln!(
                    err,
                    "warning: unreadable cache {} ({e}), recomputing",
                    path.display()
                );
            }
        }
    }
    let report = core_report(params, limit, true)?;
    let file = CacheFile { version: CACHE_VERSION, s: params.s(), t: params.t(), report };
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let json = serde_json::to_vec(&file).expect("reports serialize");
    fs::write(&path, json).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(file.report)
}
