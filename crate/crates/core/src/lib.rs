//! Radial-based undersampling (RBU) for imbalanced binary classification,
//! with reference resamplers, minority typing and a cross-validation harness.
//!
//! ```
//! use ndarray::array;
//! use rbu_core::{rbu_undersample, BinaryTask, RbuParams};
//!
//! let task = BinaryTask::new(
//!     array![[0.0, 0.0], [0.1, 0.0], [2.0, 0.0]],
//!     array![[2.1, 0.0]],
//! )
//! .unwrap();
//! let out = rbu_undersample(&task, &RbuParams::new(1.0, 1.0).unwrap()).unwrap();
//! assert_eq!(out.removed, vec![1, 0]);
//! assert_eq!(out.task.n_majority(), 1);
//! ```

pub mod baselines;
pub mod dataio;
pub mod distance;
mod error;
pub mod evaluation;
pub mod modeling;
pub mod neighbors;
pub mod potential;
pub mod rbu;
pub mod rng;
pub mod synthetic;
pub mod typing;

pub use baselines::ResampleSpec;
pub use dataio::{BinaryTask, Dataset, DatasetStats, Format, MinoritySelector, Standardizer};
pub use error::{Error, Result};
pub use modeling::{ClassifierKind, MetricSet};
pub use potential::{mutual_potential, potential_grid, rbf_value, GridBounds, PotentialField, PotentialGrid, TieRule};
pub use rbu::{rbu_undersample, RbuOutcome, RbuParams};
pub use typing::{categorize_minority, MinorityType, MinorityTypeReport, TypeProportions, TypingParams};
