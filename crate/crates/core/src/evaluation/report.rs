use super::experiment::{round6, DatasetEntry, ExperimentConfig};
use crate::baselines::ResampleSpec;
use crate::dataio::DatasetStats;
use crate::error::{Error, Result};
use crate::modeling::{ClassifierKind, MetricSet};
use serde::{Serialize, Serializer};

fn rounded<S: Serializer>(m: &Option<MetricSet>, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.map(|m| MetricSet::from_values(m.values().map(round6))).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetSummary {
    pub name: String,
    pub n_majority: usize,
    pub n_minority: usize,
    pub features: usize,
    pub ir: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<DatasetStats>,
}

impl From<&DatasetEntry> for DatasetSummary {
    fn from(d: &DatasetEntry) -> Self {
        DatasetSummary {
            name: d.name.clone(),
            n_majority: d.task.n_majority(),
            n_minority: d.task.n_minority(),
            features: d.task.n_features(),
            ir: d.task.imbalance_ratio(),
            stats: d.stats.clone(),
        }
    }
}

/// One outer fold of one (dataset, method, classifier) cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub dataset: String,
    pub method: String,
    pub classifier: ClassifierKind,
    pub fold: usize,
    pub repeat: usize,
    /// The spec actually applied (after inner selection).
    pub spec: Option<ResampleSpec>,
    #[serde(serialize_with = "rounded")]
    pub metrics: Option<MetricSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Fold-mean metrics of a cell; `metrics` is `None` unless every fold ran.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub dataset: String,
    pub method: String,
    pub classifier: ClassifierKind,
    pub folds: usize,
    #[serde(serialize_with = "rounded")]
    pub metrics: Option<MetricSet>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub classifier: ClassifierKind,
    pub metric: String,
    pub method: String,
    pub average_rank: f64,
    /// Number of datasets that entered the average.
    pub datasets: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FriedmanEntry {
    pub classifier: ClassifierKind,
    pub metric: String,
    pub chi_square: f64,
    pub df: usize,
    pub n_datasets: usize,
    pub n_methods: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub schema: u32,
    pub config: ExperimentConfig,
    pub datasets: Vec<DatasetSummary>,
    pub runs: Vec<RunRecord>,
    pub aggregates: Vec<Aggregate>,
    pub ranks: Vec<RankEntry>,
    pub friedman: Vec<FriedmanEntry>,
    /// Number of folds that passed the train/test disjointness assertion.
    pub leakage_checks: usize,
}

impl EvalReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One row per run with the metric columns flattened.
    pub fn runs_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["dataset", "method", "classifier", "repeat", "fold", "spec"];
        header.extend(MetricSet::NAMES);
        header.push("error");
        w.write_record(&header)?;
        for r in &self.runs {
            let mut row = vec![
                r.dataset.clone(),
                r.method.clone(),
                r.classifier.to_string(),
                r.repeat.to_string(),
                r.fold.to_string(),
                r.spec.as_ref().map(ToString::to_string).unwrap_or_default(),
            ];
            match r.metrics {
                Some(m) => row.extend(m.values().iter().map(|v| format!("{v:.6}"))),
                None => row.extend(std::iter::repeat_n(String::new(), MetricSet::NAMES.len())),
            }
            row.push(r.error.clone().unwrap_or_default());
            w.write_record(&row)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Fold mean of `metric` for a cell, if complete.
    pub fn mean(&self, dataset: &str, method: &str, classifier: ClassifierKind, metric: &str) -> Option<f64> {
        self.aggregates
            .iter()
            .find(|a| a.dataset == dataset && a.method == method && a.classifier == classifier)
            .and_then(|a| a.metrics)
            .and_then(|m| m.get(metric))
    }
}
