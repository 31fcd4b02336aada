//! Loading entry lists from line or CSV files, plus the bundled surname sets.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatasetFormat {
    /// One entry per line; blank lines and `#` comments skipped.
    Lines,
    /// One entry per row, taken from the named header column.
    Csv { column: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetSpec {
    pub path: PathBuf,
    pub format: DatasetFormat,
    pub name: String,
}

impl DatasetSpec {
    /// Line-format spec named after the file stem.
    pub fn lines(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let name = stem(&path);
        DatasetSpec {
            path,
            format: DatasetFormat::Lines,
            name,
        }
    }

    pub fn csv(path: impl Into<PathBuf>, column: impl Into<String>) -> Self {
        let path = path.into();
        let name = stem(&path);
        DatasetSpec {
            path,
            format: DatasetFormat::Csv { column: column.into() },
            name,
        }
    }
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_dataset(spec: &DatasetSpec) -> Result<Vec<String>> {
    let io_err = |source| Error::Io {
        path: spec.path.clone(),
        source,
    };
    let entries = match &spec.format {
        DatasetFormat::Lines => parse_lines(&fs::read_to_string(&spec.path).map_err(io_err)?),
        DatasetFormat::Csv { column } => {
            let csv_err = |source| Error::Csv {
                path: spec.path.clone(),
                source,
            };
            let mut reader = csv::Reader::from_path(&spec.path).map_err(csv_err)?;
            let idx = reader
                .headers()
                .map_err(csv_err)?
                .iter()
                .position(|h| h.trim() == column)
                .ok_or_else(|| Error::MissingColumn {
                    path: spec.path.clone(),
                    column: column.clone(),
                })?;
            let mut out = Vec::new();
            for record in reader.records() {
                let record = record.map_err(csv_err)?;
                if let Some(cell) = record.get(idx) {
                    let cell = cell.trim();
                    if !cell.is_empty() {
                        out.push(cell.to_string());
                    }
                }
            }
            out
        }
    };
    if entries.is_empty() {
        return Err(Error::NoEntries { path: spec.path.clone() });
    }
    Ok(entries)
}

/// Entries of a line-format text: trailing whitespace trimmed, blank and
/// `#` lines dropped, duplicates kept.
pub fn parse_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(str::to_string)
        .collect()
}

const WRITERS: &str = include_str!("../data/writers.txt");
const REPRESENTATIVES: &str = include_str!("../data/representatives.txt");
const GRADUATES: &str = include_str!("../data/graduates.txt");

pub const BUNDLED: [&str; 3] = ["writers", "representatives", "graduates"];

/// Surname lists shipped with the crate: `writers` (96), `representatives`
/// (394) and `graduates` (1369).
pub fn bundled_dataset(name: &str) -> Option<Vec<String>> {
    let text = match name {
        "writers" => WRITERS,
        "representatives" => REPRESENTATIVES,
        "graduates" => GRADUATES,
        _ => return None,
    };
    Some(parse_lines(text))
}
