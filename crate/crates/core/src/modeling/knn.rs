use crate::dataio::BinaryTask;
use crate::neighbors::k_nearest_euclidean;
use ndarray::Array2;

/// k-nearest-neighbors scorer. The score of a query is the fraction of its
/// `k` nearest training points that are minority.
#[derive(Debug, Clone, PartialEq)]
pub struct KnnModel {
    x: Array2<f64>,
    is_minority: Vec<bool>,
    k: usize,
}

impl KnnModel {
    /// `k` is capped at the training size.
    pub fn fit(train: &BinaryTask, k: usize) -> Self {
        let (x, is_minority) = train.stacked();
        let k = k.clamp(1, x.nrows());
        KnnModel { x, is_minority, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn score(&self, query: &[f64]) -> f64 {
        let nn = k_nearest_euclidean(self.x.view(), query, self.k, None);
        nn.iter().filter(|&&i| self.is_minority[i]).count() as f64 / self.k as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn one_neighbor_copies_label() {
        let t = BinaryTask::new(array![[0.0], [1.0]], array![[5.0]]).unwrap();
        let m = KnnModel::fit(&t, 1);
        assert_eq!(m.score(&[5.0]), 1.0);
        assert_eq!(m.score(&[1.0]), 0.0);
    }

    #[test]
    fn fraction_of_minority() {
        let t = BinaryTask::new(array![[0.0], [0.1], [0.2], [9.0]], array![[0.3], [0.4], [9.5]]).unwrap();
        let m = KnnModel::fit(&t, 5);
        assert!((m.score(&[0.2]) - 0.4).abs() < 1e-15);
        let all = BinaryTask::new(array![[100.0]], array![[0.0], [0.1], [0.2], [0.3], [0.4]]).unwrap();
        assert_eq!(KnnModel::fit(&all, 5).score(&[0.2]), 1.0);
    }

    #[test]
    fn k_is_capped() {
        let t = BinaryTask::new(array![[0.0]], array![[1.0]]).unwrap();
        assert_eq!(KnnModel::fit(&t, 5).k(), 2);
    }
}
