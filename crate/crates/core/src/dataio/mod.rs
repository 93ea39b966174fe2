//! Dataset ingestion and preprocessing: KEEL and CSV readers and writers,
//! categorical encoding, standardization, and the binary imbalanced-task view.

mod csv_format;
mod dataset;
mod keel;
mod number;
mod standardize;
mod stats;
mod task;

pub use csv_format::{parse_csv, write_csv, LabelColumn};
pub use dataset::{encode_categoricals, Dataset, Feature, FeatureKind, FeatureMeta, FeatureValues};
pub use keel::{parse_keel, write_keel};
pub use number::format_g17;
pub use standardize::{fit_standardizer, Standardizer};
pub use stats::{dataset_stats, DatasetStats};
pub use task::{split_binary, BinaryTask, MinoritySelector};

use crate::error::{Error, Result};
use std::path::Path;

/// On-disk dataset format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Keel,
    Csv,
}

impl Format {
    /// `.dat` is KEEL, `.csv` is CSV.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("dat") | Some("keel") => Some(Format::Keel),
            Some("csv") => Some(Format::Csv),
            _ => None,
        }
    }
}

/// Reads a dataset from disk. CSV files take their label from the last column.
pub fn read_dataset(path: &Path, format: Option<Format>) -> Result<Dataset> {
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| Error::param(format!("cannot infer format of {}", path.display())))?;
    let text = std::fs::read_to_string(path)?;
    let mut dataset = match format {
        Format::Keel => parse_keel(&text)?,
        Format::Csv => parse_csv(&text, LabelColumn::Last)?,
    };
    if dataset.relation().is_empty() {
        if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
            dataset.set_relation(stem);
        }
    }
    Ok(dataset)
}

/// Serializes `dataset` in `format`.
pub fn write_dataset(dataset: &Dataset, format: Format) -> Result<String> {
    match format {
        Format::Keel => Ok(write_keel(dataset)),
        Format::Csv => write_csv(dataset),
    }
}
