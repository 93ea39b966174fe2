//! Minority object typology: safe, borderline, rare and outlier points.

use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use crate::neighbors::k_nearest;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TypingParams {
    pub k: usize,
    /// Minkowski exponent.
    pub p: f64,
}

impl Default for TypingParams {
    fn default() -> Self {
        TypingParams { k: 5, p: 2.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorityType {
    Safe,
    Borderline,
    Rare,
    Outlier,
}

impl MinorityType {
    /// Category of a point with `same` minority points among its `k`
    /// neighbors. For `k = 5`: 4-5 safe, 2-3 borderline, 1 rare, 0 outlier;
    /// other `k` scale the cut points proportionally.
    pub fn from_count(same: usize, k: usize) -> Self {
        if 5 * same >= 4 * k {
            MinorityType::Safe
        } else if 5 * same >= 2 * k {
            MinorityType::Borderline
        } else if same > 0 {
            MinorityType::Rare
        } else {
            MinorityType::Outlier
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            MinorityType::Safe => "safe",
            MinorityType::Borderline => "borderline",
            MinorityType::Rare => "rare",
            MinorityType::Outlier => "outlier",
        }
    }
}

impl fmt::Display for MinorityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Percentages of each minority type.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TypeProportions {
    pub safe: f64,
    pub borderline: f64,
    pub rare: f64,
    pub outlier: f64,
}

impl TypeProportions {
    pub fn as_array(&self) -> [f64; 4] {
        [self.safe, self.borderline, self.rare, self.outlier]
    }
}

impl fmt::Display for TypeProportions {
    /// Four space-separated percentages with two decimals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:.2} {:.2} {:.2} {:.2}",
            self.safe, self.borderline, self.rare, self.outlier
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinorityTypeReport {
    /// One entry per minority point, in minority order.
    pub categories: Vec<MinorityType>,
    /// Same-class neighbor counts behind `categories`.
    pub same_class_neighbors: Vec<usize>,
    pub proportions: TypeProportions,
    pub k: usize,
    pub p: f64,
}

pub fn categorize_minority(task: &BinaryTask, params: &TypingParams) -> Result<MinorityTypeReport> {
    let TypingParams { k, p } = *params;
    if k == 0 {
        return Err(Error::param("typing needs k >= 1"));
    }
    if !(p >= 1.0) {
        return Err(Error::param(format!("Minkowski exponent must be >= 1, got {p}")));
    }
    if task.n_samples() < k + 1 {
        return Err(Error::data(format!(
            "typing with k = {k} needs at least {} points, got {}",
            k + 1,
            task.n_samples()
        )));
    }
    let (x, mask) = task.stacked();
    let offset = task.n_majority();
    let same_class_neighbors: Vec<usize> = (0..task.n_minority())
        .into_par_iter()
        .map(|j| {
            let i = offset + j;
            let query = x.row(i);
            k_nearest(x.view(), query.to_slice().expect("standard layout"), k, Some(i), p)
                .into_iter()
                .filter(|&n| mask[n])
                .count()
        })
        .collect();
    let categories: Vec<MinorityType> = same_class_neighbors
        .iter()
        .map(|&c| MinorityType::from_count(c, k))
        .collect();
    let total = categories.len() as f64;
    let pct = |t: MinorityType| 100.0 * categories.iter().filter(|&&c| c == t).count() as f64 / total;
    let proportions = TypeProportions {
        safe: pct(MinorityType::Safe),
        borderline: pct(MinorityType::Borderline),
        rare: pct(MinorityType::Rare),
        outlier: pct(MinorityType::Outlier),
    };
    Ok(MinorityTypeReport {
        categories,
        same_class_neighbors,
        proportions,
        k,
        p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::{array, Array2};
    use proptest::prelude::*;

    #[test]
    fn k5_rule() {
        let expected = [
            MinorityType::Outlier,
            MinorityType::Rare,
            MinorityType::Borderline,
            MinorityType::Borderline,
            MinorityType::Safe,
            MinorityType::Safe,
        ];
        for (c, e) in expected.iter().enumerate() {
            assert_eq!(MinorityType::from_count(c, 5), *e);
        }
    }

    #[test]
    fn isolated_minority_point_is_outlier() {
        let t = BinaryTask::new(Array2::from_shape_fn((6, 1), |(i, _)| i as f64), array![[2.5]]).unwrap();
        let r = categorize_minority(&t, &TypingParams::default()).unwrap();
        assert_eq!(r.categories, vec![MinorityType::Outlier]);
        assert_eq!(r.proportions.to_string(), "0.00 0.00 0.00 100.00");
    }

    #[test]
    fn tight_minority_cluster_is_safe() {
        let t = BinaryTask::new(
            Array2::from_shape_fn((6, 2), |(i, j)| 100.0 + (i + j) as f64),
            Array2::from_shape_fn((6, 2), |(i, j)| 0.1 * (i * (j + 1)) as f64),
        )
        .unwrap();
        let r = categorize_minority(&t, &TypingParams::default()).unwrap();
        assert_eq!(r.proportions.to_string(), "100.00 0.00 0.00 0.00");
    }

    #[test]
    fn too_small() {
        let t = BinaryTask::new(array![[0.0], [1.0], [2.0]], array![[0.5]]).unwrap();
        assert!(categorize_minority(&t, &TypingParams::default()).is_err());
    }

    proptest! {
        #[test]
        fn proportions_sum_and_scale_invariance(
            maj in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 3), 6..40),
            min in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 3), 1..15),
            scale in 0.01f64..100.0,
        ) {
            let k = Array2::from_shape_vec((maj.len(), 3), maj.concat()).unwrap();
            let kappa = Array2::from_shape_vec((min.len(), 3), min.concat()).unwrap();
            let a = categorize_minority(&BinaryTask::new(k.clone(), kappa.clone()).unwrap(), &TypingParams::default()).unwrap();
            let b = categorize_minority(&BinaryTask::new(k * scale, kappa * scale).unwrap(), &TypingParams::default()).unwrap();
            prop_assert!((a.proportions.as_array().iter().sum::<f64>() - 100.0).abs() < 1e-6);
            prop_assert_eq!(a.categories.len(), min.len());
            // Scaling can only reorder exact ties through rounding, which
            // random reals essentially never produce.
            prop_assert_eq!(a.categories, b.categories);
        }
    }
}
