use crate::dataio::BinaryTask;
use crate::distance::euclidean;
use crate::error::{Error, Result};
use crate::neighbors::k_nearest_euclidean;
use crate::rbu::check_ratio;
use ndarray::Axis;

/// Mean distance from each majority point to its `k` nearest minority points.
pub fn near_miss_scores(task: &BinaryTask, k: usize) -> Vec<f64> {
    let minority = task.minority();
    let k = k.min(minority.nrows());
    task.majority()
        .rows()
        .into_iter()
        .map(|row| {
            let x = row.to_slice().expect("standard layout");
            let nn = k_nearest_euclidean(minority, x, k, None);
            nn.iter()
                .map(|&j| euclidean(x, minority.row(j).to_slice().expect("standard layout")))
                .sum::<f64>()
                / k as f64
        })
        .collect()
}

/// NearMiss-1: keeps the `|K| − ⌈ratio·(|K| − |κ|)⌉` majority points with the
/// smallest mean distance to their `k` nearest minority points (`k` capped at
/// `|κ|`). Equal scores prefer the lower index.
pub fn near_miss(task: &BinaryTask, k: usize, ratio: f64) -> Result<BinaryTask> {
    check_ratio(ratio)?;
    if k == 0 {
        return Err(Error::param("near_miss needs k >= 1"));
    }
    let scores = near_miss_scores(task, k);
    let keep_n = task.n_majority() - task.balancing_count(ratio);
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]).then(a.cmp(&b)));
    let mut kept = order[..keep_n].to_vec();
    kept.sort_unstable();
    task.with_majority(task.majority().select(Axis(0), &kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn close_points_survive() {
        let t = BinaryTask::new(array![[0.1], [50.0], [0.3], [1.0]], array![[0.0], [0.2]]).unwrap();
        let out = near_miss(&t, 1, 1.0).unwrap();
        assert_eq!(out.majority(), array![[0.1], [0.3]]);
    }

    #[test]
    fn eight_point_selection() {
        let majority = array![[0.0, 3.0], [2.0, 2.0], [-4.0, 0.5], [1.0, 0.0], [6.0, 6.0], [0.5, 1.5]];
        let minority = array![[0.0, 0.0], [1.0, 1.0]];
        let t = BinaryTask::new(majority.clone(), minority.clone()).unwrap();
        // brute force: mean distance to both minority points (k = 2 = |κ|)
        let mut s: Vec<(f64, usize)> = (0..6)
            .map(|i| {
                let d = |j: usize| {
                    ((majority[[i, 0]] - minority[[j, 0]]).powi(2) + (majority[[i, 1]] - minority[[j, 1]]).powi(2)).sqrt()
                };
                ((d(0) + d(1)) / 2.0, i)
            })
            .collect();
        s.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut expected: Vec<usize> = s[..4].iter().map(|p| p.1).collect();
        expected.sort();
        let out = near_miss(&t, 5, 0.5).unwrap();
        assert_eq!(out.n_majority(), 4);
        assert_eq!(out.majority(), majority.select(Axis(0), &expected));
        assert_eq!(expected, vec![0, 1, 3, 5]);
    }
}
