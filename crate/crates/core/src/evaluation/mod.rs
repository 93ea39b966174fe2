//! Cross-validation harness: stratified folds, inner model selection,
//! experiment sweeps, rank aggregation and the Friedman statistic.

mod experiment;
mod folds;
mod presets;
mod ranks;
mod report;
mod select;

pub use experiment::{run_experiment, DatasetEntry, ExperimentConfig, MethodEntry, Standardization};
pub use folds::{make_folds, Fold, FoldPlan};
pub use presets::{preset_grid, Preset, METHODS};
pub use ranks::{average_ranks, friedman_statistic, rank_descending, AverageRanks, Friedman};
pub use report::{Aggregate, DatasetSummary, EvalReport, FriedmanEntry, RankEntry, RunRecord};
pub use select::{select_params, Selection};
