use super::dataset::Dataset;
use crate::error::{Error, Result};
use ndarray::{Array2, ArrayView2, Axis};

/// How [`split_binary`] decides which class is the minority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinoritySelector {
    /// The less frequent class; equal counts are an error.
    Auto,
    Label(String),
}

/// A binary imbalanced task: majority points `K` and minority points `κ`,
/// each stored as a row-major matrix. The minority class is the positive one.
///
/// Points are indexed majority-first: index `i < |K|` is `majority[i]`,
/// index `|K| + j` is `minority[j]`. Neighbor searches that break ties by
/// lowest index use this combined order.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryTask {
    majority: Array2<f64>,
    minority: Array2<f64>,
    majority_label: String,
    minority_label: String,
}

impl BinaryTask {
    /// Builds a task from its two point sets. Both sets must be non-empty and
    /// share dimensionality; the majority may be smaller than the minority
    /// (this happens after oversampling followed by cleaning).
    pub fn new(majority: Array2<f64>, minority: Array2<f64>) -> Result<Self> {
        Self::with_labels(majority, minority, "negative", "positive")
    }

    pub fn with_labels(
        majority: Array2<f64>,
        minority: Array2<f64>,
        majority_label: impl Into<String>,
        minority_label: impl Into<String>,
    ) -> Result<Self> {
        if minority.nrows() == 0 {
            return Err(Error::data("the minority set is empty"));
        }
        if majority.nrows() == 0 {
            return Err(Error::data("the majority set is empty"));
        }
        if majority.ncols() != minority.ncols() {
            return Err(Error::DimensionMismatch {
                expected: majority.ncols(),
                found: minority.ncols(),
            });
        }
        Ok(BinaryTask {
            majority,
            minority,
            majority_label: majority_label.into(),
            minority_label: minority_label.into(),
        })
    }

    /// Splits the rows of `x` by the `is_minority` mask.
    pub fn from_mask(x: ArrayView2<'_, f64>, is_minority: &[bool]) -> Result<Self> {
        if x.nrows() != is_minority.len() {
            return Err(Error::DimensionMismatch {
                expected: x.nrows(),
                found: is_minority.len(),
            });
        }
        let (min_idx, maj_idx): (Vec<usize>, Vec<usize>) =
            (0..x.nrows()).partition(|&i| is_minority[i]);
        BinaryTask::new(x.select(Axis(0), &maj_idx), x.select(Axis(0), &min_idx))
    }

    pub fn majority(&self) -> ArrayView2<'_, f64> {
        self.majority.view()
    }

    pub fn minority(&self) -> ArrayView2<'_, f64> {
        self.minority.view()
    }

    pub fn n_majority(&self) -> usize {
        self.majority.nrows()
    }

    pub fn n_minority(&self) -> usize {
        self.minority.nrows()
    }

    pub fn n_samples(&self) -> usize {
        self.n_majority() + self.n_minority()
    }

    pub fn n_features(&self) -> usize {
        self.majority.ncols()
    }

    pub fn majority_label(&self) -> &str {
        &self.majority_label
    }

    pub fn minority_label(&self) -> &str {
        &self.minority_label
    }

    /// `|K| / |κ|`.
    pub fn imbalance_ratio(&self) -> f64 {
        self.n_majority() as f64 / self.n_minority() as f64
    }

    /// Number of points that moves a fraction `ratio` of the way from the
    /// current class sizes to balance: `⌈ratio·(|K| − |κ|)⌉`, or 0 when the
    /// majority is not larger. The product is rounded down first when it is
    /// within 1e-9 of an integer, so `0.7·10` counts as 7.
    pub fn balancing_count(&self, ratio: f64) -> usize {
        let excess = self.n_majority().saturating_sub(self.n_minority());
        let target = ratio * excess as f64;
        let nearest = target.round();
        if (target - nearest).abs() <= 1e-9 {
            nearest as usize
        } else {
            target.ceil() as usize
        }
    }

    /// Row `i` in combined (majority-first) order.
    pub fn point(&self, i: usize) -> &[f64] {
        let k = self.n_majority();
        let row = if i < k {
            self.majority.row(i)
        } else {
            self.minority.row(i - k)
        };
        row.to_slice().expect("standard layout")
    }

    /// Whether combined index `i` refers to a minority point.
    pub fn is_minority(&self, i: usize) -> bool {
        i >= self.n_majority()
    }

    /// All points stacked majority-first, with the matching minority mask.
    pub fn stacked(&self) -> (Array2<f64>, Vec<bool>) {
        let x = ndarray::concatenate(Axis(0), &[self.majority.view(), self.minority.view()])
            .expect("same number of columns");
        let mask = (0..self.n_samples()).map(|i| self.is_minority(i)).collect();
        (x, mask)
    }

    /// A task with the same minority and a new majority set.
    pub fn with_majority(&self, majority: Array2<f64>) -> Result<Self> {
        Self::with_labels(
            majority,
            self.minority.clone(),
            self.majority_label.clone(),
            self.minority_label.clone(),
        )
    }

    /// A task with the same majority and a new minority set.
    pub fn with_minority(&self, minority: Array2<f64>) -> Result<Self> {
        Self::with_labels(
            self.majority.clone(),
            minority,
            self.majority_label.clone(),
            self.minority_label.clone(),
        )
    }

    /// Converts back to a dataset: majority rows first, then minority rows.
    pub fn to_dataset(&self, template: &Dataset) -> Result<Dataset> {
        let (x, mask) = self.stacked();
        let labels = mask
            .iter()
            .map(|&m| {
                if m {
                    self.minority_label.clone()
                } else {
                    self.majority_label.clone()
                }
            })
            .collect();
        template.with_matrix(&x, labels)
    }
}

/// Splits an encoded dataset into its binary imbalanced view.
pub fn split_binary(dataset: &Dataset, selector: &MinoritySelector) -> Result<BinaryTask> {
    let counts = dataset.class_counts();
    if counts.len() != 2 {
        return Err(Error::data(format!(
            "expected exactly 2 classes, found {}",
            counts.len()
        )));
    }
    let minority_label = match selector {
        MinoritySelector::Auto => {
            let (a, b) = (&counts[0], &counts[1]);
            match a.1.cmp(&b.1) {
                std::cmp::Ordering::Less => a.0.clone(),
                std::cmp::Ordering::Greater => b.0.clone(),
                std::cmp::Ordering::Equal => {
                    return Err(Error::data(format!(
                        "classes '{}' and '{}' are equally frequent; name the minority label explicitly",
                        a.0, b.0
                    )))
                }
            }
        }
        MinoritySelector::Label(l) => {
            if !counts.iter().any(|(c, _)| c == l) {
                return Err(Error::param(format!("label '{l}' does not occur in the dataset")));
            }
            l.clone()
        }
    };
    let majority_label = counts
        .iter()
        .find(|(c, _)| *c != minority_label)
        .map(|(c, _)| c.clone())
        .expect("two classes");
    let x = dataset.matrix()?;
    let mask: Vec<bool> = dataset.labels().iter().map(|l| *l == minority_label).collect();
    let task = BinaryTask::from_mask(x.view(), &mask)?;
    if task.n_majority() < task.n_minority() {
        return Err(Error::data(format!(
            "class '{minority_label}' is not the minority ({} vs {})",
            task.n_minority(),
            task.n_majority()
        )));
    }
    BinaryTask::with_labels(task.majority, task.minority, majority_label, minority_label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn dataset(labels: &[&str]) -> Dataset {
        let n = labels.len();
        let x = Array2::from_shape_fn((n, 1), |(i, _)| i as f64);
        Dataset::from_matrix(
            "t",
            vec!["x".into()],
            &x,
            "class",
            labels.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn auto_minority() {
        let t = split_binary(&dataset(&["A", "A", "A", "B"]), &MinoritySelector::Auto).unwrap();
        assert_eq!(t.minority_label(), "B");
        assert_eq!(t.n_majority(), 3);
        assert_eq!(t.n_minority(), 1);
        assert_eq!(t.minority(), array![[3.0]]);
    }

    #[test]
    fn tie_needs_explicit_label() {
        let d = dataset(&["A", "B"]);
        assert!(split_binary(&d, &MinoritySelector::Auto).is_err());
        let t = split_binary(&d, &MinoritySelector::Label("A".into())).unwrap();
        assert_eq!(t.minority_label(), "A");
    }

    #[test]
    fn more_than_two_classes() {
        assert!(split_binary(&dataset(&["A", "B", "C"]), &MinoritySelector::Auto).is_err());
    }

    #[test]
    fn explicit_label_must_be_minority() {
        let d = dataset(&["A", "A", "B"]);
        assert!(split_binary(&d, &MinoritySelector::Label("A".into())).is_err());
        assert!(split_binary(&d, &MinoritySelector::Label("Z".into())).is_err());
    }

    #[test]
    fn partition_is_exact() {
        let labels = ["A", "B", "A", "A", "B", "A"];
        let t = split_binary(&dataset(&labels), &MinoritySelector::Auto).unwrap();
        let mut all: Vec<f64> = t.majority().iter().chain(t.minority().iter()).copied().collect();
        all.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(all, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(t.minority(), array![[1.0], [4.0]]);
    }

    #[test]
    fn balancing_count_rounds_up() {
        let t = BinaryTask::new(Array2::zeros((11, 1)), Array2::zeros((1, 1))).unwrap();
        assert_eq!(t.balancing_count(0.0), 0);
        assert_eq!(t.balancing_count(0.7), 7);
        assert_eq!(t.balancing_count(0.71), 8);
        assert_eq!(t.balancing_count(0.5), 5);
        assert_eq!(t.balancing_count(0.05), 1);
        assert_eq!(t.balancing_count(1.0), 10);
        let flipped = BinaryTask::new(Array2::zeros((1, 1)), Array2::zeros((3, 1))).unwrap();
        assert_eq!(flipped.balancing_count(1.0), 0);
    }

    #[test]
    fn combined_indexing() {
        let t = BinaryTask::new(array![[0.0], [1.0]], array![[9.0]]).unwrap();
        assert_eq!(t.point(2), &[9.0]);
        assert!(t.is_minority(2));
        assert!(!t.is_minority(1));
    }
}
