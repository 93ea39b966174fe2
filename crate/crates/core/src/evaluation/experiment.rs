use super::folds::{make_folds, FoldPlan};
use super::ranks::{average_ranks, friedman_statistic};
use super::report::{Aggregate, EvalReport, FriedmanEntry, RankEntry, RunRecord};
use super::select::{select_params, subset};
use crate::baselines::ResampleSpec;
use crate::dataio::{
    dataset_stats, encode_categoricals, split_binary, BinaryTask, Dataset, DatasetStats, MinoritySelector, Standardizer,
};
use crate::error::{Error, Result};
use crate::modeling::{evaluate_split, ClassifierKind, MetricSet};
use crate::rng::derive_seed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicUsize, Ordering};

/// Where standardization is fitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Standardization {
    /// On each outer training half; the test half reuses its parameters.
    #[default]
    PerFold,
    /// Once on the whole dataset before splitting.
    Global,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub repeats: usize,
    pub inner_repeats: usize,
    pub standardization: Standardization,
    /// Run inner model selection over each method grid. When off, only the
    /// first grid point is used.
    pub select: bool,
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            seed: 42,
            repeats: 5,
            inner_repeats: 3,
            standardization: Standardization::PerFold,
            select: true,
            jobs: 1,
        }
    }
}

/// A named method and the grid searched for it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodEntry {
    pub name: String,
    pub grid: Vec<ResampleSpec>,
}

impl MethodEntry {
    pub fn new(name: impl Into<String>, grid: Vec<ResampleSpec>) -> Self {
        MethodEntry {
            name: name.into(),
            grid,
        }
    }
}

/// An encoded (not yet standardized) task with its display name.
#[derive(Debug, Clone)]
pub struct DatasetEntry {
    pub name: String,
    pub task: BinaryTask,
    pub stats: Option<DatasetStats>,
}

impl DatasetEntry {
    /// Encodes `dataset`, splits it into a binary task and computes its
    /// summary statistics.
    pub fn from_dataset(dataset: &Dataset, selector: &MinoritySelector) -> Result<Self> {
        let encoded = encode_categoricals(dataset);
        let task = split_binary(&encoded, selector)?;
        let stats = dataset_stats(dataset, selector)?;
        Ok(DatasetEntry {
            name: dataset.relation().to_string(),
            task,
            stats: Some(stats),
        })
    }
}

struct Unit<'a> {
    dataset: usize,
    method: &'a MethodEntry,
    classifier: ClassifierKind,
    fold: usize,
}

struct Prepared {
    x: ndarray::Array2<f64>,
    mask: Vec<bool>,
    plan: FoldPlan,
}

fn prepare(entry: &DatasetEntry, config: &ExperimentConfig) -> Result<Prepared> {
    let (mut x, mask) = entry.task.stacked();
    if config.standardization == Standardization::Global {
        x = Standardizer::fit(x.view())?.transform(x.view())?;
    }
    let plan = make_folds(
        &mask,
        config.repeats,
        derive_seed(config.seed, &[entry.name.as_str().into(), "folds".into()]),
    )?;
    Ok(Prepared { x, mask, plan })
}

/// Fails loudly if a test index reaches the training side.
fn assert_no_leakage(train: &[usize], test: &[usize], checks: &AtomicUsize) {
    let mut seen = vec![false; train.iter().chain(test).max().map_or(0, |m| m + 1)];
    for &i in train {
        seen[i] = true;
    }
    for &i in test {
        assert!(!seen[i], "leakage: test index {i} is also in the training set");
    }
    checks.fetch_add(1, Ordering::Relaxed);
}

fn run_unit(unit: &Unit<'_>, data: &Prepared, name: &str, config: &ExperimentConfig, checks: &AtomicUsize) -> RunRecord {
    let fold = &data.plan.folds[unit.fold];
    assert_no_leakage(&fold.train, &fold.test, checks);
    let unit_seed = derive_seed(
        config.seed,
        &[name.into(), unit.method.name.as_str().into(), unit.fold.into()],
    );
    let outcome = (|| -> Result<(ResampleSpec, MetricSet)> {
        // The scaler sees only training rows; test rows reuse its parameters.
        let x = if config.standardization == Standardization::PerFold {
            Standardizer::fit(data.x.select(ndarray::Axis(0), &fold.train).view())?.transform(data.x.view())?
        } else {
            data.x.clone()
        };
        let train = subset(&x, &data.mask, &fold.train)?;
        let test = subset(&x, &data.mask, &fold.test)?;
        let spec = if config.select && unit.method.grid.len() > 1 {
            let sel_seed = derive_seed(unit_seed, &["select".into(), unit.classifier.as_str().into()]);
            select_params(&train, &unit.method.grid, unit.classifier, config.inner_repeats, sel_seed)?.spec
        } else {
            unit.method
                .grid
                .first()
                .cloned()
                .ok_or_else(|| Error::param(format!("method '{}' has an empty grid", unit.method.name)))?
        };
        let resampled = spec.apply(&train, unit_seed)?;
        let metrics = evaluate_split(unit.classifier, &resampled, &test)?;
        Ok((spec, metrics))
    })();
    let (spec, metrics, error) = match outcome {
        Ok((s, m)) => (Some(s), Some(m), None),
        Err(e) => {
            log::warn!("{name}/{}/{}/fold {}: {e}", unit.method.name, unit.classifier, unit.fold);
            (None, None, Some(e.to_string()))
        }
    };
    RunRecord {
        dataset: name.to_string(),
        method: unit.method.name.clone(),
        classifier: unit.classifier,
        fold: unit.fold,
        repeat: fold.repeat,
        spec,
        metrics,
        error,
    }
}

/// Runs the full cross-validation protocol and aggregates the results.
pub fn run_experiment(
    datasets: &[DatasetEntry],
    methods: &[MethodEntry],
    classifiers: &[ClassifierKind],
    config: &ExperimentConfig,
) -> Result<EvalReport> {
    if datasets.is_empty() || methods.is_empty() || classifiers.is_empty() {
        return Err(Error::param("need at least one dataset, method and classifier"));
    }
    for m in methods {
        if m.grid.is_empty() {
            return Err(Error::param(format!("method '{}' has an empty grid", m.name)));
        }
        m.grid.iter().try_for_each(ResampleSpec::validate)?;
    }
    let mut prepared = Vec::with_capacity(datasets.len());
    for d in datasets {
        prepared.push(prepare(d, config).map_err(|e| Error::data(format!("{}: {e}", d.name)))?);
    }
    let mut units = Vec::new();
    for (di, data) in prepared.iter().enumerate() {
        for method in methods {
            for &classifier in classifiers {
                for fold in 0..data.plan.folds.len() {
                    units.push(Unit {
                        dataset: di,
                        method,
                        classifier,
                        fold,
                    });
                }
            }
        }
    }
    let checks = AtomicUsize::new(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))?;
    let runs: Vec<RunRecord> = pool.install(|| {
        units
            .par_iter()
            .map(|u| run_unit(u, &prepared[u.dataset], &datasets[u.dataset].name, config, &checks))
            .collect()
    });
    let n_folds = 2 * config.repeats;
    let aggregates = aggregate(datasets, methods, classifiers, &runs, n_folds);
    let (ranks, friedman) = rank_all(datasets, methods, classifiers, &aggregates);
    Ok(EvalReport {
        schema: 1,
        config: config.clone(),
        datasets: datasets.iter().map(|d| d.into()).collect(),
        runs,
        aggregates,
        ranks,
        friedman,
        leakage_checks: checks.into_inner(),
    })
}

fn aggregate(
    datasets: &[DatasetEntry],
    methods: &[MethodEntry],
    classifiers: &[ClassifierKind],
    runs: &[RunRecord],
    n_folds: usize,
) -> Vec<Aggregate> {
    let mut out = Vec::new();
    for d in datasets {
        for m in methods {
            for &c in classifiers {
                let cell: Vec<&RunRecord> = runs
                    .iter()
                    .filter(|r| r.dataset == d.name && r.method == m.name && r.classifier == c)
                    .collect();
                let ok: Vec<MetricSet> = cell.iter().filter_map(|r| r.metrics).collect();
                // A mean is only reported when every outer fold succeeded.
                let metrics = if ok.len() == n_folds { MetricSet::mean(&ok) } else { None };
                out.push(Aggregate {
                    dataset: d.name.clone(),
                    method: m.name.clone(),
                    classifier: c,
                    folds: ok.len(),
                    metrics,
                });
            }
        }
    }
    out
}

/// Six-decimal rounding applied before ranking, as in the reports.
pub(crate) fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

fn rank_all(
    datasets: &[DatasetEntry],
    methods: &[MethodEntry],
    classifiers: &[ClassifierKind],
    aggregates: &[Aggregate],
) -> (Vec<RankEntry>, Vec<FriedmanEntry>) {
    let mut ranks = Vec::new();
    let mut friedman = Vec::new();
    if methods.len() < 2 {
        return (ranks, friedman);
    }
    for &c in classifiers {
        for metric in MetricSet::NAMES {
            let table: Vec<Vec<Option<f64>>> = datasets
                .iter()
                .map(|d| {
                    methods
                        .iter()
                        .map(|m| {
                            aggregates
                                .iter()
                                .find(|a| a.dataset == d.name && a.method == m.name && a.classifier == c)
                                .and_then(|a| a.metrics)
                                .and_then(|ms| ms.get(metric))
                                .map(round6)
                        })
                        .collect()
                })
                .collect();
            let Ok(avg) = average_ranks(&table) else {
                log::warn!("{c}/{metric}: no dataset has results for every method; skipping ranks");
                continue;
            };
            for &d in &avg.excluded {
                log::warn!("{c}/{metric}: dataset '{}' excluded from ranking (missing cells)", datasets[d].name);
            }
            for (m, r) in methods.iter().zip(&avg.ranks) {
                ranks.push(RankEntry {
                    classifier: c,
                    metric: metric.to_string(),
                    method: m.name.clone(),
                    average_rank: *r,
                    datasets: avg.used.len(),
                });
            }
            if let Ok(f) = friedman_statistic(&avg.per_dataset) {
                friedman.push(FriedmanEntry {
                    classifier: c,
                    metric: metric.to_string(),
                    chi_square: f.chi_square,
                    df: f.df,
                    n_datasets: f.n_datasets,
                    n_methods: f.n_methods,
                });
            }
        }
    }
    (ranks, friedman)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthetic::gaussian_blobs;

    fn entry(name: &str, seed: u64) -> DatasetEntry {
        DatasetEntry {
            name: name.into(),
            task: gaussian_blobs(60, 14, 3, 1.5, seed).unwrap(),
            stats: None,
        }
    }

    #[test]
    fn one_cell_has_ten_fold_rows() {
        let r = run_experiment(
            &[entry("a", 1)],
            &[MethodEntry::new("none", vec![ResampleSpec::None])],
            &[ClassifierKind::Knn],
            &ExperimentConfig::default(),
        )
        .unwrap();
        assert_eq!(r.runs.len(), 10);
        assert!(r.runs.iter().all(|x| x.metrics.is_some()));
        assert_eq!(r.aggregates.len(), 1);
        assert_eq!(r.aggregates[0].folds, 10);
        assert_eq!(r.leakage_checks, 10);
        assert!(r.ranks.is_empty());
    }

    #[test]
    fn jobs_do_not_change_results() {
        let ds = [entry("a", 1), entry("b", 2)];
        let methods = [
            MethodEntry::new("none", vec![ResampleSpec::None]),
            MethodEntry::new(
                "rbu",
                vec![ResampleSpec::Rbu { gamma: 0.5, ratio: 1.0 }, ResampleSpec::Rbu { gamma: 5.0, ratio: 0.5 }],
            ),
        ];
        let mut cfg = ExperimentConfig::default();
        let a = run_experiment(&ds, &methods, &[ClassifierKind::Gnb], &cfg).unwrap();
        cfg.jobs = 4;
        let b = run_experiment(&ds, &methods, &[ClassifierKind::Gnb], &cfg).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(a.ranks.len(), 2 * MetricSet::NAMES.len());
        assert_eq!(a.friedman.len(), MetricSet::NAMES.len());
    }

    #[test]
    fn failures_are_recorded() {
        let r = run_experiment(
            &[entry("a", 1)],
            &[
                MethodEntry::new("none", vec![ResampleSpec::None]),
                MethodEntry::new("bad", vec![ResampleSpec::Enn { k: 500 }]),
            ],
            &[ClassifierKind::Knn],
            &ExperimentConfig::default(),
        )
        .unwrap();
        let bad: Vec<_> = r.runs.iter().filter(|x| x.method == "bad").collect();
        assert!(bad.iter().all(|x| x.error.is_some() && x.metrics.is_none()));
        assert!(r.aggregates.iter().any(|a| a.method == "bad" && a.metrics.is_none()));
        assert!(r.ranks.is_empty());
    }

    #[test]
    #[should_panic(expected = "leakage")]
    fn leakage_check_fires() {
        assert_no_leakage(&[0, 1, 2], &[2, 3], &AtomicUsize::new(0));
    }

    #[test]
    fn round6_rounds() {
        assert_eq!(round6(0.123_456_7), 0.123_457);
    }
}
