use super::dataset::Dataset;
use crate::error::{Error, Result};
use ndarray::{Array2, ArrayView2, Axis};
use serde::Serialize;

/// Per-feature mean and population standard deviation.
///
/// Constant features keep a divisor of 1, so they are only centred.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Standardizer {
    mean: Vec<f64>,
    std: Vec<f64>,
}

impl Standardizer {
    pub fn fit(x: ArrayView2<'_, f64>) -> Result<Self> {
        let n = x.nrows();
        if n == 0 {
            return Err(Error::data("cannot fit a standardizer on zero samples"));
        }
        let mean: Vec<f64> = x.mean_axis(Axis(0)).expect("n > 0").to_vec();
        let std = x
            .columns()
            .into_iter()
            .zip(&mean)
            .map(|(col, mu)| {
                let var = col.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / n as f64;
                let s = var.sqrt();
                if s > 0.0 && s.is_finite() {
                    s
                } else {
                    1.0
                }
            })
            .collect();
        Ok(Standardizer { mean, std })
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn std(&self) -> &[f64] {
        &self.std
    }

    pub fn transform(&self, x: ArrayView2<'_, f64>) -> Result<Array2<f64>> {
        if x.ncols() != self.mean.len() {
            return Err(Error::DimensionMismatch {
                expected: self.mean.len(),
                found: x.ncols(),
            });
        }
        let mut out = x.to_owned();
        for mut row in out.rows_mut() {
            for ((v, mu), s) in row.iter_mut().zip(&self.mean).zip(&self.std) {
                *v = (*v - mu) / s;
            }
        }
        Ok(out)
    }

    pub fn apply(&self, dataset: &Dataset) -> Result<Dataset> {
        let transformed = self.transform(dataset.matrix()?.view())?;
        dataset.with_matrix(&transformed, dataset.labels().to_vec())
    }
}

pub fn fit_standardizer(dataset: &Dataset) -> Result<Standardizer> {
    Standardizer::fit(dataset.matrix()?.view())
}
