use crate::error::{Error, Result};
use ndarray::Array2;
use serde::Serialize;
use std::collections::HashMap;

/// Storage of a single feature column.
#[derive(Debug, Clone, PartialEq)]
pub enum FeatureValues {
    Numeric(Vec<f64>),
    /// Raw category strings plus the declared (or observed) category list.
    Categorical { values: Vec<String>, declared: Vec<String> },
    /// Integer codes of a categorical feature; `categories[code]` is the
    /// original string.
    Encoded { codes: Vec<f64>, categories: Vec<String> },
}

impl FeatureValues {
    pub fn len(&self) -> usize {
        match self {
            FeatureValues::Numeric(v) => v.len(),
            FeatureValues::Categorical { values, .. } => values.len(),
            FeatureValues::Encoded { codes, .. } => codes.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn numeric(&self) -> Option<&[f64]> {
        match self {
            FeatureValues::Numeric(v) => Some(v),
            FeatureValues::Encoded { codes, .. } => Some(codes),
            FeatureValues::Categorical { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Feature {
    pub name: String,
    pub values: FeatureValues,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum FeatureKind {
    Numeric,
    Categorical { categories: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeatureMeta {
    pub name: String,
    #[serde(flatten)]
    pub kind: FeatureKind,
}

/// A labelled table of samples. Columns are features, one label per row.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    relation: String,
    features: Vec<Feature>,
    label_name: String,
    labels: Vec<String>,
}

impl Dataset {
    pub fn new(
        relation: impl Into<String>,
        features: Vec<Feature>,
        label_name: impl Into<String>,
        labels: Vec<String>,
    ) -> Result<Self> {
        for f in &features {
            if f.values.len() != labels.len() {
                return Err(Error::data(format!(
                    "feature {} has {} values but there are {} labels",
                    f.name,
                    f.values.len(),
                    labels.len()
                )));
            }
            if let Some(v) = f.values.numeric() {
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(Error::data(format!("feature {} has non-finite values", f.name)));
                }
            }
        }
        Ok(Dataset {
            relation: relation.into(),
            features,
            label_name: label_name.into(),
            labels,
        })
    }

    /// Builds an all-numeric dataset from a row-major matrix.
    pub fn from_matrix(
        relation: impl Into<String>,
        names: Vec<String>,
        matrix: &Array2<f64>,
        label_name: impl Into<String>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if names.len() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.ncols(),
                found: names.len(),
            });
        }
        let features = names
            .into_iter()
            .zip(matrix.columns())
            .map(|(name, col)| Feature {
                name,
                values: FeatureValues::Numeric(col.to_vec()),
            })
            .collect();
        Dataset::new(relation, features, label_name, labels)
    }

    pub fn relation(&self) -> &str {
        &self.relation
    }

    pub fn set_relation(&mut self, relation: impl Into<String>) {
        self.relation = relation.into();
    }

    pub fn n_samples(&self) -> usize {
        self.labels.len()
    }

    pub fn n_features(&self) -> usize {
        self.features.len()
    }

    pub fn features(&self) -> &[Feature] {
        &self.features
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_name(&self) -> &str {
        &self.label_name
    }

    pub fn feature_names(&self) -> Vec<String> {
        self.features.iter().map(|f| f.name.clone()).collect()
    }

    pub fn feature_meta(&self) -> Vec<FeatureMeta> {
        self.features
            .iter()
            .map(|f| FeatureMeta {
                name: f.name.clone(),
                kind: match &f.values {
                    FeatureValues::Numeric(_) => FeatureKind::Numeric,
                    FeatureValues::Categorical { values, .. } => FeatureKind::Categorical {
                        categories: first_occurrence(values),
                    },
                    FeatureValues::Encoded { categories, .. } => FeatureKind::Categorical {
                        categories: categories.clone(),
                    },
                },
            })
            .collect()
    }

    pub fn is_encoded(&self) -> bool {
        self.features.iter().all(|f| f.values.numeric().is_some())
    }

    /// The n×m feature matrix. Fails while categorical features are still
    /// raw strings; call [`encode_categoricals`] first.
    pub fn matrix(&self) -> Result<Array2<f64>> {
        let n = self.n_samples();
        let m = self.n_features();
        let mut out = Array2::zeros((n, m));
        for (j, f) in self.features.iter().enumerate() {
            let col = f.values.numeric().ok_or_else(|| {
                Error::data(format!("feature {} is categorical and not encoded", f.name))
            })?;
            for (i, v) in col.iter().enumerate() {
                out[[i, j]] = *v;
            }
        }
        Ok(out)
    }

    /// Replaces every numeric column with the corresponding column of
    /// `matrix`, keeping names and category dictionaries.
    pub fn with_matrix(&self, matrix: &Array2<f64>, labels: Vec<String>) -> Result<Dataset> {
        if matrix.ncols() != self.n_features() {
            return Err(Error::DimensionMismatch {
                expected: self.n_features(),
                found: matrix.ncols(),
            });
        }
        let features = self
            .features
            .iter()
            .zip(matrix.columns())
            .map(|(f, col)| {
                let values = match &f.values {
                    FeatureValues::Numeric(_) => FeatureValues::Numeric(col.to_vec()),
                    FeatureValues::Encoded { categories, .. } => FeatureValues::Encoded {
                        codes: col.to_vec(),
                        categories: categories.clone(),
                    },
                    FeatureValues::Categorical { .. } => {
                        return Err(Error::data(format!(
                            "feature {} is categorical and not encoded",
                            f.name
                        )))
                    }
                };
                Ok(Feature {
                    name: f.name.clone(),
                    values,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Dataset::new(self.relation.clone(), features, self.label_name.clone(), labels)
    }

    /// Distinct labels in first-occurrence order with their counts.
    pub fn class_counts(&self) -> Vec<(String, usize)> {
        let mut order: Vec<(String, usize)> = Vec::new();
        let mut index: HashMap<&str, usize> = HashMap::new();
        for l in &self.labels {
            match index.get(l.as_str()) {
                Some(&i) => order[i].1 += 1,
                None => {
                    index.insert(l, order.len());
                    order.push((l.clone(), 1));
                }
            }
        }
        order
    }
}

fn first_occurrence(values: &[String]) -> Vec<String> {
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for v in values {
        if !seen.contains_key(v.as_str()) {
            seen.insert(v.as_str(), ());
            out.push(v.clone());
        }
    }
    out
}

/// Replaces every categorical feature by integer codes assigned in order of
/// first occurrence. Numeric features are left untouched.
pub fn encode_categoricals(dataset: &Dataset) -> Dataset {
    let features = dataset
        .features
        .iter()
        .map(|f| match &f.values {
            FeatureValues::Categorical { values, .. } => {
                let categories = first_occurrence(values);
                let lookup: HashMap<&str, usize> = categories
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (c.as_str(), i))
                    .collect();
                let codes = values.iter().map(|v| lookup[v.as_str()] as f64).collect();
                Feature {
                    name: f.name.clone(),
                    values: FeatureValues::Encoded { codes, categories },
                }
            }
            _ => f.clone(),
        })
        .collect();
    Dataset {
        relation: dataset.relation.clone(),
        features,
        label_name: dataset.label_name.clone(),
        labels: dataset.labels.clone(),
    }
}
