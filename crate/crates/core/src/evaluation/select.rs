use super::folds::make_folds;
use crate::baselines::ResampleSpec;
use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use crate::modeling::{evaluate_split, ClassifierKind};
use crate::rng::derive_seed;
use ndarray::Axis;
use serde::Serialize;

/// Outcome of an inner model-selection run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Selection {
    pub index: usize,
    pub spec: ResampleSpec,
    /// Mean inner criterion per grid point.
    pub scores: Vec<f64>,
}

/// Splits `x` rows given by `idx` into a task.
pub(crate) fn subset(task_x: &ndarray::Array2<f64>, mask: &[bool], idx: &[usize]) -> Result<BinaryTask> {
    let sub_mask: Vec<bool> = idx.iter().map(|&i| mask[i]).collect();
    BinaryTask::from_mask(task_x.select(Axis(0), idx).view(), &sub_mask)
}

/// Picks the grid point with the best mean of (F + AUC + G-mean) / 3 over
/// `inner_repeats × 2` stratified folds of `train`. The first grid point
/// wins ties; a fold where resampling or scoring fails scores 0.
pub fn select_params(
    train: &BinaryTask,
    grid: &[ResampleSpec],
    classifier: ClassifierKind,
    inner_repeats: usize,
    seed: u64,
) -> Result<Selection> {
    if grid.is_empty() {
        return Err(Error::param("empty parameter grid"));
    }
    if grid.len() == 1 {
        return Ok(Selection {
            index: 0,
            spec: grid[0].clone(),
            scores: Vec::new(),
        });
    }
    let (x, mask) = train.stacked();
    let plan = make_folds(&mask, inner_repeats, derive_seed(seed, &["inner-folds".into()]))?;
    let splits: Vec<(BinaryTask, BinaryTask)> = plan
        .folds
        .iter()
        .map(|f| Ok((subset(&x, &mask, &f.train)?, subset(&x, &mask, &f.test)?)))
        .collect::<Result<_>>()?;
    let scores: Vec<f64> = grid
        .iter()
        .enumerate()
        .map(|(g, spec)| {
            let total: f64 = splits
                .iter()
                .enumerate()
                .map(|(f, (tr, te))| {
                    let s = derive_seed(seed, &["inner".into(), g.into(), f.into()]);
                    spec.apply(tr, s)
                        .and_then(|resampled| evaluate_split(classifier, &resampled, te))
                        .map(|m| m.selection_score())
                        .unwrap_or_else(|e| {
                            log::debug!("inner fold {f} failed for {spec}: {e}");
                            0.0
                        })
                })
                .sum();
            total / splits.len() as f64
        })
        .collect();
    let mut index = 0;
    for (i, s) in scores.iter().enumerate() {
        if *s > scores[index] {
            index = i;
        }
    }
    Ok(Selection {
        index,
        spec: grid[index].clone(),
        scores,
    })
}
