use super::dataset::{encode_categoricals, Dataset};
use super::standardize::fit_standardizer;
use super::task::{split_binary, MinoritySelector};
use crate::error::Result;
use crate::typing::{categorize_minority, TypeProportions, TypingParams};
use serde::Serialize;

/// Summary columns of a dataset: imbalance ratio, size, and minority-type mix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetStats {
    pub name: String,
    pub ir: f64,
    pub samples: usize,
    pub features: usize,
    pub minority_label: String,
    pub type_proportions: TypeProportions,
}

/// Computes [`DatasetStats`]. Typing runs on the encoded, standardized data.
pub fn dataset_stats(dataset: &Dataset, selector: &MinoritySelector) -> Result<DatasetStats> {
    let encoded = encode_categoricals(dataset);
    let standardized = fit_standardizer(&encoded)?.apply(&encoded)?;
    let task = split_binary(&standardized, selector)?;
    let report = categorize_minority(&task, &TypingParams::default())?;
    Ok(DatasetStats {
        name: dataset.relation().to_string(),
        ir: task.imbalance_ratio(),
        samples: dataset.n_samples(),
        features: dataset.n_features(),
        minority_label: task.minority_label().to_string(),
        type_proportions: report.proportions,
    })
}
