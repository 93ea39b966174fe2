//! Radial-based undersampling.
//!
//! Majority points are removed one at a time, always taking the point with
//! the highest mutual class potential. After each removal the point's own
//! RBF is subtracted from the potentials of the survivors, so the whole run
//! costs `O(m·|K|·(|K| + |κ|))`.

use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use crate::potential::{PotentialField, RbfParams, TieBreaker, TieRule};
use ndarray::Axis;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RbuParams {
    pub gamma: f64,
    pub ratio: f64,
    #[serde(default)]
    pub tie_rule: TieRule,
}

impl RbuParams {
    pub fn new(gamma: f64, ratio: f64) -> Result<Self> {
        let p = RbuParams {
            gamma,
            ratio,
            tie_rule: TieRule::LowestIndex,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_tie_rule(mut self, tie_rule: TieRule) -> Self {
        self.tie_rule = tie_rule;
        self
    }

    pub fn validate(&self) -> Result<()> {
        RbfParams::new(self.gamma)?;
        check_ratio(self.ratio)
    }
}

pub(crate) fn check_ratio(ratio: f64) -> Result<()> {
    if (0.0..=1.0).contains(&ratio) {
        Ok(())
    } else {
        Err(Error::param(format!("ratio must lie in [0, 1], got {ratio}")))
    }
}

/// Result of [`rbu_undersample`].
#[derive(Debug, Clone, PartialEq)]
pub struct RbuOutcome {
    /// The task with the reduced majority set.
    pub task: BinaryTask,
    /// Majority indices that survived, in their original order.
    pub kept: Vec<usize>,
    /// Majority indices in the order they were removed.
    pub removed: Vec<usize>,
    /// Potential of each removed point at the moment it was removed.
    pub removed_phi: Vec<f64>,
}

pub fn rbu_undersample(task: &BinaryTask, params: &RbuParams) -> Result<RbuOutcome> {
    params.validate()?;
    let target = task.balancing_count(params.ratio);
    let mut removed = Vec::with_capacity(target);
    let mut removed_phi = Vec::with_capacity(target);
    let kept: Vec<usize> = if target == 0 {
        (0..task.n_majority()).collect()
    } else {
        let mut field = PotentialField::init(task, params.gamma)?;
        let mut ties = TieBreaker::from(params.tie_rule);
        while removed.len() < target {
            let (i, phi) = field.pop_max(&mut ties)?;
            let x = field.point(i).to_vec();
            field.subtract_contribution(&x)?;
            removed.push(i);
            removed_phi.push(phi);
        }
        field.remaining().to_vec()
    };
    log::debug!(
        "rbu: gamma={} ratio={} removed {} of {} majority points",
        params.gamma,
        params.ratio,
        removed.len(),
        task.n_majority()
    );
    let reduced = task.with_majority(task.majority().select(Axis(0), &kept))?;
    Ok(RbuOutcome {
        task: reduced,
        kept,
        removed,
        removed_phi,
    })
}
