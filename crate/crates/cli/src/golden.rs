//! Recorded series, one CSV file per (algebra, method).

use std::fs;
use std::path::{Path, PathBuf};

use crate::args::Method;
use crate::compute::{compute, RunSpec};
use crate::output::{count_rows, from_csv, to_csv};
use crate::report::VerificationReport;
use crate::CliError;

/// The recorded cases.
pub const CASES: &[(&str, Method, usize)] = &[
    ("A4", Method::Genfun, 16),
    ("D5", Method::Brute, 12),
    ("D6", Method::Genfun, 16),
    ("E6", Method::Brute, 12),
    ("E7", Method::Brute, 12),
    ("E8", Method::Brute, 12),
];

/// `golden/` next to this crate's manifest.
pub fn default_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

/// File name for a case.
pub fn file_name(algebra: &str, method: Method) -> String {
    format!("{algebra}_{}.csv", method.name())
}

/// Compares every case with its file, or rewrites the files when `bless` is set.
pub fn check(dir: &Path, bless: bool) -> Result<VerificationReport, CliError> {
    let mut report = VerificationReport::new("golden", None, &["terms", "status"]);
    report.note(format!("directory {}", dir.display()));
    if bless {
        fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", dir.display())))?;
    }
    for &(name, method, t) in CASES {
        let a = name.parse().map_err(|e: ehrhart_core::Error| CliError::Internal(e.to_string()))?;
        let series = compute(&RunSpec::new(a, method, Some(t), false))?;
        let rows = count_rows(a, &series);
        let file = file_name(name, method);
        let path = dir.join(&file);
        if bless {
            fs::write(&path, to_csv(&rows))
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            report.row(file, vec![t.to_string(), "written".into()], true, String::new);
            continue;
        }
        let status = match fs::read_to_string(&path) {
            Err(e) => Err(format!("{file}: {e}")),
            Ok(text) => match from_csv(&text) {
                Err(e) => Err(format!("{file}: {e}")),
                Ok(recorded) if recorded == rows => Ok(()),
                Ok(recorded) => {
                    let first = rows
                        .iter()
                        .zip(&recorded)
                        .find(|(x, y)| x != y)
                        .map(|(x, y)| format!("q={}: computed {}, recorded {}", x.q, x.count, y.count))
                        .unwrap_or_else(|| format!("{} rows computed, {} recorded", rows.len(), recorded.len()));
                    Err(format!("{file}: {first}"))
                }
            },
        };
        let cell = if status.is_ok() { "match" } else { "differs" };
        let ok = status.is_ok();
        report.row(file, vec![t.to_string(), cell.into()], ok, || status.unwrap_err());
    }
    Ok(report)
}
