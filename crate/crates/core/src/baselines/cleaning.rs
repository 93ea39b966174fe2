//! Neighborhood cleaning rules. Only majority points are ever removed.

use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use crate::neighbors::k_nearest_euclidean;
use ndarray::Axis;

const RENN_MAX_PASSES: usize = 100;

fn keep_rows(task: &BinaryTask, keep: &[bool]) -> Result<BinaryTask> {
    let kept: Vec<usize> = (0..task.n_majority()).filter(|&i| keep[i]).collect();
    if kept.is_empty() {
        return Err(Error::data("cleaning removed every majority point"));
    }
    task.with_majority(task.majority().select(Axis(0), &kept))
}

/// For each majority point, whether the edited nearest-neighbor rule keeps
/// it: a point goes when more than half of its `k` nearest other points are
/// minority.
pub fn enn_mask(task: &BinaryTask, k: usize) -> Result<Vec<bool>> {
    if k == 0 {
        return Err(Error::param("enn needs k >= 1"));
    }
    let n = task.n_samples();
    if n <= k {
        return Err(Error::data(format!("enn with k = {k} needs more than {k} points, got {n}")));
    }
    let (x, _) = task.stacked();
    Ok((0..task.n_majority())
        .map(|i| {
            let nn = k_nearest_euclidean(x.view(), x.row(i).to_slice().expect("standard layout"), k, Some(i));
            let minority = nn.iter().filter(|&&j| task.is_minority(j)).count();
            2 * minority <= k
        })
        .collect())
}

/// Edited nearest neighbors, one batch pass over the input.
pub fn enn(task: &BinaryTask, k: usize) -> Result<BinaryTask> {
    let keep = enn_mask(task, k)?;
    keep_rows(task, &keep)
}

/// Repeated ENN until a pass removes nothing (at most 100 passes).
pub fn renn(task: &BinaryTask, k: usize) -> Result<BinaryTask> {
    let mut current = task.clone();
    for pass in 0..RENN_MAX_PASSES {
        let keep = enn_mask(&current, k)?;
        if keep.iter().all(|&b| b) {
            log::trace!("renn: converged after {pass} passes");
            return Ok(current);
        }
        current = keep_rows(&current, &keep)?;
    }
    log::warn!("renn: stopped after {RENN_MAX_PASSES} passes without converging");
    Ok(current)
}

/// Index pairs `(majority, minority)` in combined order that form Tomek links.
pub fn tomek_links(task: &BinaryTask) -> Vec<(usize, usize)> {
    let (x, _) = task.stacked();
    let n = x.nrows();
    if n < 2 {
        return Vec::new();
    }
    let nearest: Vec<usize> = (0..n)
        .map(|i| k_nearest_euclidean(x.view(), x.row(i).to_slice().expect("standard layout"), 1, Some(i))[0])
        .collect();
    (0..task.n_majority())
        .filter(|&i| task.is_minority(nearest[i]) && nearest[nearest[i]] == i)
        .map(|i| (i, nearest[i]))
        .collect()
}

/// Removes the majority member of every Tomek link.
pub fn tomek(task: &BinaryTask) -> Result<BinaryTask> {
    let mut keep = vec![true; task.n_majority()];
    for (i, _) in tomek_links(task) {
        keep[i] = false;
    }
    keep_rows(task, &keep)
}
