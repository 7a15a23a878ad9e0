//! Dataset serialization: CSV with a `.meta.json` sidecar, or a single
//! JSON document embedding the metadata. Numbers are written in the
//! shortest decimal form that round-trips, so outputs are lossless and
//! diff-friendly, and identical metadata yields byte-identical files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::spectra::SpectrumDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!(
                "unknown output format `{other}`, expected csv or json"
            ))),
        }
    }
}

/// Render the dataset as CSV: `name [unit]` headers, one row per line.
pub fn to_csv_string(dataset: &SpectrumDataset) -> String {
    let mut out = String::new();
    let header: Vec<String> = dataset
        .schema
        .iter()
        .map(|c| format!("{} [{}]", c.name, c.unit))
        .collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in &dataset.rows {
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            let _ = write!(out, "{v}");
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Render the dataset (metadata embedded) as pretty JSON.
pub fn to_json_string(dataset: &SpectrumDataset) -> Result<String> {
    serde_json::to_string_pretty(dataset)
        .map_err(|e| Error::Config(format!("dataset serialization failed: {e}")))
}

/// Sidecar path for CSV metadata: `<stem>.meta.json` next to the file.
pub fn meta_sidecar_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().unwrap_or_default().to_string_lossy();
    path.with_file_name(format!("{stem}.meta.json"))
}

/// Write a dataset to `path`. CSV puts the metadata in a sidecar file;
/// JSON embeds it. The full content is rendered before anything is
/// written, so a failed build never leaves partial output.
pub fn write_dataset(dataset: &SpectrumDataset, path: &Path, format: OutputFormat) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(io_err)?;
        }
    }
    match format {
        OutputFormat::Csv => {
            let body = to_csv_string(dataset);
            let meta = serde_json::to_string_pretty(&dataset.meta)
                .map_err(|e| Error::Config(format!("metadata serialization failed: {e}")))?;
            std::fs::write(path, body).map_err(io_err)?;
            let sidecar = meta_sidecar_path(path);
            std::fs::write(&sidecar, meta).map_err(|source| Error::Io {
                path: sidecar,
                source,
            })?;
        }
        OutputFormat::Json => {
            std::fs::write(path, to_json_string(dataset)?).map_err(io_err)?;
        }
    }
    Ok(())
}

/// Read back a JSON dataset written by [`write_dataset`].
pub fn read_dataset(path: &Path) -> Result<SpectrumDataset> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Config(format!("cannot parse dataset {}: {e}", path.display())))
}
