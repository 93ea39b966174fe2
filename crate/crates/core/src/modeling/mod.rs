//! Built-in classifiers and evaluation metrics.

mod gnb;
mod knn;
mod metrics;

pub use gnb::GnbModel;
pub use knn::KnnModel;
pub use metrics::{auc, confusion, Confusion, MetricSet};

use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use ndarray::ArrayView2;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Scores above this value predict the minority class.
pub const DECISION_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassifierKind {
    Knn,
    Gnb,
}

impl ClassifierKind {
    pub fn fit(&self, train: &BinaryTask) -> TrainedModel {
        match self {
            ClassifierKind::Knn => TrainedModel::Knn(KnnModel::fit(train, 5)),
            ClassifierKind::Gnb => TrainedModel::Gnb(GnbModel::fit(train)),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassifierKind::Knn => "knn",
            ClassifierKind::Gnb => "gnb",
        }
    }
}

impl fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassifierKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "knn" => Ok(ClassifierKind::Knn),
            "gnb" | "nb" => Ok(ClassifierKind::Gnb),
            other => Err(Error::param(format!("unknown classifier '{other}' (expected knn or gnb)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TrainedModel {
    Knn(KnnModel),
    Gnb(GnbModel),
}

impl TrainedModel {
    /// Minority-class score in `[0, 1]`.
    pub fn score(&self, x: &[f64]) -> f64 {
        match self {
            TrainedModel::Knn(m) => m.score(x),
            TrainedModel::Gnb(m) => m.score(x),
        }
    }

    pub fn score_rows(&self, x: ArrayView2<'_, f64>) -> Vec<f64> {
        x.rows()
            .into_iter()
            .map(|r| self.score(r.to_slice().expect("standard layout")))
            .collect()
    }

    pub fn predict(&self, x: &[f64]) -> bool {
        self.score(x) > DECISION_THRESHOLD
    }
}

/// Fits `classifier` on `train` and scores it on `test`.
pub fn evaluate_split(classifier: ClassifierKind, train: &BinaryTask, test: &BinaryTask) -> Result<MetricSet> {
    let model = classifier.fit(train);
    let (x, y) = test.stacked();
    let scores = model.score_rows(x.view());
    MetricSet::compute(&y, &scores, DECISION_THRESHOLD)
}
