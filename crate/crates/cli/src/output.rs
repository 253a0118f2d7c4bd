//! Output files: `#` metadata lines followed by the payload.

use std::io::Write;
use std::path::Path;

use crate::config::Settings;
use crate::error::CliError;

/// Version, command and every resolved parameter, one `# key = value` line each.
/// Output locations are left out so the same run gives the same bytes anywhere.
pub fn metadata(command: &str, settings: &Settings, extra: &[(&str, String)]) -> String {
    let mut out = format!("# cliquenet {}\n# command = {command}\n", env!("CARGO_PKG_VERSION"));
    for (k, v) in settings.resolved().iter().filter(|(k, _)| k != "out" && k != "out_dir") {
        out.push_str(&format!("# {k} = {v}\n"));
    }
    for (k, v) in extra {
        out.push_str(&format!("# {k} = {v}\n"));
    }
    if settings.resolved().iter().any(|(k, v)| k == "policy" && v == "erase") {
        out.push_str("# model_deviation = erase drops loops and parallel edges; degrees fall below the sampled law\n");
    }
    out
}

pub fn emit(path: Option<&Path>, meta: &str, payload: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let shown = p.display().to_string();
            let mut f = std::fs::File::create(p).map_err(|e| CliError::io(&shown, e))?;
            f.write_all(meta.as_bytes()).and_then(|_| f.write_all(payload)).map_err(|e| CliError::io(&shown, e))
        }
        None => {
            let mut s = std::io::stdout().lock();
            s.write_all(meta.as_bytes()).and_then(|_| s.write_all(payload)).map_err(|e| CliError::io("stdout", e))
        }
    }
}

/// CSV rows with a header, all fields already formatted.
pub fn csv_bytes(header: &[String], rows: &[Vec<String>]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let e = |e: csv::Error| CliError::usage(format!("csv: {e}"));
    w.write_record(header).map_err(e)?;
    for r in rows {
        w.write_record(r).map_err(e)?;
    }
    w.into_inner().map_err(|e| CliError::usage(format!("csv: {e}")))
}
