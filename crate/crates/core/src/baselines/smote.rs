use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use crate::neighbors::k_nearest_euclidean;
use crate::rbu::check_ratio;
use crate::rng::rng_from_seed;
use ndarray::{Array2, Axis};
use rand::Rng;

/// SMOTE. Adds `⌈ratio·(|K| − |κ|)⌉` synthetic minority points, each on the
/// segment between a random minority point and one of its `k` nearest
/// minority neighbors. `k` is capped at `|κ| − 1`.
pub fn smote(task: &BinaryTask, k: usize, ratio: f64, seed: u64) -> Result<BinaryTask> {
    check_ratio(ratio)?;
    if k == 0 {
        return Err(Error::param("smote needs k >= 1"));
    }
    let minority = task.minority();
    let n = minority.nrows();
    if n < 2 {
        return Err(Error::data(format!("smote needs at least 2 minority points, got {n}")));
    }
    let r = task.balancing_count(ratio);
    if r == 0 {
        return Ok(task.clone());
    }
    let k = k.min(n - 1);
    let neighbors: Vec<Vec<usize>> = (0..n)
        .map(|i| k_nearest_euclidean(minority, minority.row(i).to_slice().expect("standard layout"), k, Some(i)))
        .collect();
    let mut rng = rng_from_seed(seed);
    let m = task.n_features();
    let mut synthetic = Array2::zeros((r, m));
    for mut out in synthetic.rows_mut() {
        let i = rng.gen_range(0..n);
        let j = neighbors[i][rng.gen_range(0..k)];
        let u: f64 = rng.gen();
        let x = minority.row(i);
        let nn = minority.row(j);
        for d in 0..m {
            out[d] = x[d] + u * (nn[d] - x[d]);
        }
    }
    let stacked = ndarray::concatenate(Axis(0), &[minority, synthetic.view()]).expect("same width");
    task.with_minority(stacked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::euclidean;
    use ndarray::array;

    #[test]
    fn two_point_segment() {
        let t = BinaryTask::new(Array2::zeros((12, 2)) + 5.0, array![[0.0, 0.0], [1.0, 0.0]]).unwrap();
        let out = smote(&t, 1, 1.0, 4).unwrap();
        assert_eq!(out.n_minority(), 12);
        for row in out.minority().rows() {
            assert_eq!(row[1], 0.0);
            assert!((0.0..=1.0).contains(&row[0]));
        }
    }

    #[test]
    fn synthetic_points_are_collinear() {
        let minority = array![[0.0, 0.0], [1.0, 2.0], [3.0, -1.0], [0.5, 0.5]];
        let t = BinaryTask::new(Array2::zeros((30, 2)), minority.clone()).unwrap();
        let out = smote(&t, 2, 1.0, 11).unwrap();
        for s in out.minority().rows().into_iter().skip(4) {
            let s = s.to_vec();
            let ok = (0..4).any(|a| {
                (0..4).any(|b| {
                    let x = minority.row(a).to_vec();
                    let y = minority.row(b).to_vec();
                    a != b && (euclidean(&s, &x) + euclidean(&s, &y) - euclidean(&x, &y)).abs() < 1e-9
                })
            });
            assert!(ok);
        }
    }

    #[test]
    fn needs_two_minority_points() {
        let t = BinaryTask::new(Array2::zeros((3, 1)), array![[1.0]]).unwrap();
        assert!(smote(&t, 5, 1.0, 0).is_err());
    }

    #[test]
    fn seeded() {
        let t = BinaryTask::new(Array2::zeros((9, 1)), array![[1.0], [2.0], [4.0]]).unwrap();
        assert_eq!(smote(&t, 5, 1.0, 8).unwrap(), smote(&t, 5, 1.0, 8).unwrap());
    }
}
