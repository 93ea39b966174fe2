use crate::error::{Error, Result};
use serde::Serialize;

/// Ranks of `values`, largest first (rank 1). Tied values share the mean of
/// the positions they span.
pub fn rank_descending(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        for &o in &order[i..=j] {
            ranks[o] = r;
        }
        i = j + 1;
    }
    ranks
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AverageRanks {
    /// Mean rank per method, in input column order.
    pub ranks: Vec<f64>,
    /// Per-dataset rank rows that entered the mean.
    pub per_dataset: Vec<Vec<f64>>,
    /// Indices of the datasets that took part.
    pub used: Vec<usize>,
    /// Indices of datasets dropped for missing values.
    pub excluded: Vec<usize>,
}

/// Averages per-dataset descending ranks. `table[d][j]` is the score of
/// method `j` on dataset `d`; rows with a missing entry are skipped.
pub fn average_ranks(table: &[Vec<Option<f64>>]) -> Result<AverageRanks> {
    let k = table.first().map_or(0, Vec::len);
    if k < 2 {
        return Err(Error::param("ranking needs at least two methods"));
    }
    if table.iter().any(|row| row.len() != k) {
        return Err(Error::param("ragged score table"));
    }
    let mut per_dataset = Vec::new();
    let mut used = Vec::new();
    let mut excluded = Vec::new();
    for (d, row) in table.iter().enumerate() {
        match row.iter().copied().collect::<Option<Vec<f64>>>() {
            Some(v) => {
                per_dataset.push(rank_descending(&v));
                used.push(d);
            }
            None => excluded.push(d),
        }
    }
    if per_dataset.is_empty() {
        return Err(Error::data("no dataset has scores for every method"));
    }
    let n = per_dataset.len() as f64;
    let ranks = (0..k)
        .map(|j| per_dataset.iter().map(|r| r[j]).sum::<f64>() / n)
        .collect();
    Ok(AverageRanks {
        ranks,
        per_dataset,
        used,
        excluded,
    })
}

/// Friedman statistic without tie correction, with `K − 1` degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Friedman {
    pub chi_square: f64,
    pub df: usize,
    pub n_datasets: usize,
    pub n_methods: usize,
}

/// `ranks[d][j]` is the rank of method `j` on dataset `d`.
pub fn friedman_statistic(ranks: &[Vec<f64>]) -> Result<Friedman> {
    let n = ranks.len();
    let k = ranks.first().map_or(0, Vec::len);
    if n < 2 || k < 2 {
        return Err(Error::param(format!(
            "the Friedman statistic needs at least 2 datasets and 2 methods, got {n} x {k}"
        )));
    }
    if ranks.iter().any(|r| r.len() != k) {
        return Err(Error::param("ragged rank table"));
    }
    let (nf, kf) = (n as f64, k as f64);
    let sum_sq: f64 = (0..k)
        .map(|j| {
            let mean = ranks.iter().map(|r| r[j]).sum::<f64>() / nf;
            mean * mean
        })
        .sum();
    let chi_square = 12.0 * nf / (kf * (kf + 1.0)) * (sum_sq - kf * (kf + 1.0).powi(2) / 4.0);
    Ok(Friedman {
        chi_square,
        df: k - 1,
        n_datasets: n,
        n_methods: k,
    })
}
