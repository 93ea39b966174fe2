//! Reference resamplers and the [`ResampleSpec`] that names any of them.

mod cleaning;
mod near_miss;
mod random;
mod smote;

pub use cleaning::{enn, enn_mask, renn, tomek, tomek_links};
pub use near_miss::{near_miss, near_miss_scores};
pub use random::{ros, rus};
pub use smote::smote;

use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use crate::rbu::{check_ratio, rbu_undersample, RbuParams};
use crate::rng::derive_seed;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A resampling method with its hyperparameters.
///
/// Seeds are supplied at application time so one spec can be reused across
/// folds with independent random streams.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum ResampleSpec {
    None,
    Rus { ratio: f64 },
    Ros { ratio: f64 },
    Smote { k: usize, ratio: f64 },
    Enn { k: usize },
    Renn { k: usize },
    Tomek,
    NearMiss { k: usize, ratio: f64 },
    Rbu { gamma: f64, ratio: f64 },
    Pipeline { stages: Vec<ResampleSpec> },
}

impl ResampleSpec {
    /// SMOTE followed by Tomek-link removal.
    pub fn stl(k: usize, ratio: f64) -> Self {
        ResampleSpec::Pipeline {
            stages: vec![ResampleSpec::Smote { k, ratio }, ResampleSpec::Tomek],
        }
    }

    /// SMOTE followed by ENN with `k = 3`.
    pub fn senn(k: usize, ratio: f64) -> Self {
        ResampleSpec::Pipeline {
            stages: vec![ResampleSpec::Smote { k, ratio }, ResampleSpec::Enn { k: 3 }],
        }
    }

    pub fn method_name(&self) -> &'static str {
        match self {
            ResampleSpec::None => "none",
            ResampleSpec::Rus { .. } => "rus",
            ResampleSpec::Ros { .. } => "ros",
            ResampleSpec::Smote { .. } => "smote",
            ResampleSpec::Enn { .. } => "enn",
            ResampleSpec::Renn { .. } => "renn",
            ResampleSpec::Tomek => "tomek",
            ResampleSpec::NearMiss { .. } => "near_miss",
            ResampleSpec::Rbu { .. } => "rbu",
            ResampleSpec::Pipeline { .. } => "pipeline",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let k_ok = |k: usize| {
            if k >= 1 {
                Ok(())
            } else {
                Err(Error::param(format!("{}: k must be >= 1", self.method_name())))
            }
        };
        match self {
            ResampleSpec::None | ResampleSpec::Tomek => Ok(()),
            ResampleSpec::Rus { ratio } | ResampleSpec::Ros { ratio } => check_ratio(*ratio),
            ResampleSpec::Smote { k, ratio } | ResampleSpec::NearMiss { k, ratio } => {
                k_ok(*k)?;
                check_ratio(*ratio)
            }
            ResampleSpec::Enn { k } | ResampleSpec::Renn { k } => k_ok(*k),
            ResampleSpec::Rbu { gamma, ratio } => RbuParams::new(*gamma, *ratio).map(|_| ()),
            ResampleSpec::Pipeline { stages } => {
                if stages.is_empty() {
                    return Err(Error::param("pipeline needs at least one stage"));
                }
                stages.iter().try_for_each(ResampleSpec::validate)
            }
        }
    }

    /// Resamples `task`. Stochastic methods draw from a stream seeded by `seed`.
    pub fn apply(&self, task: &BinaryTask, seed: u64) -> Result<BinaryTask> {
        self.validate()?;
        match self {
            ResampleSpec::None => Ok(task.clone()),
            ResampleSpec::Rus { ratio } => rus(task, *ratio, seed),
            ResampleSpec::Ros { ratio } => ros(task, *ratio, seed),
            ResampleSpec::Smote { k, ratio } => smote(task, *k, *ratio, seed),
            ResampleSpec::Enn { k } => enn(task, *k),
            ResampleSpec::Renn { k } => renn(task, *k),
            ResampleSpec::Tomek => tomek(task),
            ResampleSpec::NearMiss { k, ratio } => near_miss(task, *k, *ratio),
            ResampleSpec::Rbu { gamma, ratio } => {
                Ok(rbu_undersample(task, &RbuParams::new(*gamma, *ratio)?)?.task)
            }
            ResampleSpec::Pipeline { stages } => {
                let mut current = task.clone();
                for (i, stage) in stages.iter().enumerate() {
                    let stage_seed = if stages.len() == 1 {
                        seed
                    } else {
                        derive_seed(seed, &["stage".into(), i.into()])
                    };
                    current = stage.apply(&current, stage_seed)?;
                }
                Ok(current)
            }
        }
    }
}

impl fmt::Display for ResampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResampleSpec::None | ResampleSpec::Tomek => write!(f, "{}", self.method_name()),
            ResampleSpec::Rus { ratio } | ResampleSpec::Ros { ratio } => {
                write!(f, "{}(ratio={ratio})", self.method_name())
            }
            ResampleSpec::Smote { k, ratio } | ResampleSpec::NearMiss { k, ratio } => {
                write!(f, "{}(k={k}, ratio={ratio})", self.method_name())
            }
            ResampleSpec::Enn { k } | ResampleSpec::Renn { k } => write!(f, "{}(k={k})", self.method_name()),
            ResampleSpec::Rbu { gamma, ratio } => write!(f, "rbu(gamma={gamma}, ratio={ratio})"),
            ResampleSpec::Pipeline { stages } => {
                let parts: Vec<String> = stages.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(" -> "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::{array, Array2};

    fn task() -> BinaryTask {
        BinaryTask::new(
            Array2::from_shape_fn((16, 2), |(i, j)| (i as f64) * 0.3 + j as f64),
            array![[0.2, 0.9], [1.4, 1.1], [2.0, 2.5], [0.7, 1.6]],
        )
        .unwrap()
    }

    #[test]
    fn serde_round_trip() {
        let specs = vec![
            ResampleSpec::None,
            ResampleSpec::Rbu { gamma: 0.1, ratio: 1.0 },
            ResampleSpec::stl(5, 0.5),
        ];
        let json = serde_json::to_string(&specs).unwrap();
        assert!(json.contains(r#""method":"rbu""#));
        let back: Vec<ResampleSpec> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, specs);
    }

    #[test]
    fn singleton_pipeline_equals_stage() {
        let t = task();
        let single = ResampleSpec::Pipeline {
            stages: vec![ResampleSpec::Smote { k: 3, ratio: 1.0 }],
        };
        assert_eq!(
            single.apply(&t, 5).unwrap(),
            ResampleSpec::Smote { k: 3, ratio: 1.0 }.apply(&t, 5).unwrap()
        );
    }

    #[test]
    fn senn_is_sequential() {
        let t = task();
        let seed = 21;
        let manual = smote(&t, 3, 1.0, derive_seed(seed, &["stage".into(), 0usize.into()])).unwrap();
        let manual = enn(&manual, 3).unwrap();
        assert_eq!(ResampleSpec::senn(3, 1.0).apply(&t, seed).unwrap(), manual);
    }

    #[test]
    fn stl_only_cleans() {
        let t = task();
        let seed = 4;
        let smoted = smote(&t, 3, 1.0, derive_seed(seed, &["stage".into(), 0usize.into()])).unwrap();
        let out = ResampleSpec::stl(3, 1.0).apply(&t, seed).unwrap();
        assert!(out.n_majority() <= smoted.n_majority());
        assert_eq!(out.minority(), smoted.minority());
    }

    #[test]
    fn validation() {
        assert!(ResampleSpec::Pipeline { stages: vec![] }.validate().is_err());
        assert!(ResampleSpec::Enn { k: 0 }.validate().is_err());
        assert!(ResampleSpec::Rus { ratio: 2.0 }.validate().is_err());
        assert!(ResampleSpec::Rbu { gamma: 0.0, ratio: 1.0 }.apply(&task(), 0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(ResampleSpec::Rbu { gamma: 0.1, ratio: 1.0 }.to_string(), "rbu(gamma=0.1, ratio=1)");
        assert_eq!(ResampleSpec::stl(5, 0.5).to_string(), "[smote(k=5, ratio=0.5) -> tomek]");
    }
}
