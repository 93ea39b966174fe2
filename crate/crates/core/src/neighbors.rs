//! Brute-force nearest-neighbor search with deterministic tie-breaking.

use crate::distance::{minkowski, squared_euclidean};
use ndarray::ArrayView2;
use std::cmp::Ordering;

/// Indices of the `k` rows of `points` closest to `query`, nearest first.
///
/// Distances are Minkowski of order `p`; equal distances go to the lower
/// index. `exclude` removes one row (usually the query itself) from the
/// candidates. Returns fewer than `k` indices only if there are fewer
/// candidates.
pub fn k_nearest(
    points: ArrayView2<'_, f64>,
    query: &[f64],
    k: usize,
    exclude: Option<usize>,
    p: f64,
) -> Vec<usize> {
    let mut cand: Vec<(f64, usize)> = points
        .rows()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != exclude)
        .map(|(i, row)| {
            let row = row.to_slice().expect("standard layout");
            // Squared distances order the same way and skip the root.
            let d = if p == 2.0 {
                squared_euclidean(row, query)
            } else {
                minkowski(row, query, p)
            };
            (d, i)
        })
        .collect();
    let k = k.min(cand.len());
    if k == 0 {
        return Vec::new();
    }
    let cmp = |a: &(f64, usize), b: &(f64, usize)| -> Ordering { a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)) };
    if k < cand.len() {
        cand.select_nth_unstable_by(k - 1, cmp);
        cand.truncate(k);
    }
    cand.sort_unstable_by(cmp);
    cand.into_iter().map(|(_, i)| i).collect()
}

/// Euclidean variant of [`k_nearest`].
pub fn k_nearest_euclidean(
    points: ArrayView2<'_, f64>,
    query: &[f64],
    k: usize,
    exclude: Option<usize>,
) -> Vec<usize> {
    k_nearest(points, query, k, exclude, 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn nearest_first_with_index_ties() {
        let pts = array![[0.0], [2.0], [-1.0], [1.0], [-2.0]];
        assert_eq!(k_nearest_euclidean(pts.view(), &[0.0], 3, None), vec![0, 2, 3]);
        assert_eq!(k_nearest_euclidean(pts.view(), &[0.0], 5, Some(0)), vec![2, 3, 1, 4]);
    }

    #[test]
    fn manhattan_changes_order() {
        let pts = array![[1.0, 1.0], [1.5, 0.0]];
        assert_eq!(k_nearest(pts.view(), &[0.0, 0.0], 1, None, 2.0), vec![0]);
        assert_eq!(k_nearest(pts.view(), &[0.0, 0.0], 1, None, 1.0), vec![1]);
    }

    #[test]
    fn k_zero_or_empty() {
        let pts = array![[0.0]];
        assert!(k_nearest_euclidean(pts.view(), &[0.0], 0, None).is_empty());
        assert!(k_nearest_euclidean(pts.view(), &[0.0], 3, Some(0)).is_empty());
    }
}
