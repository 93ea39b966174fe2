use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Confusion counts with the minority class as positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Confusion {
    pub tp: usize,
    pub fp: usize,
    pub fn_: usize,
    pub tn: usize,
}

impl Confusion {
    pub fn precision(&self) -> f64 {
        ratio(self.tp, self.tp + self.fp)
    }

    /// Sensitivity.
    pub fn recall(&self) -> f64 {
        ratio(self.tp, self.tp + self.fn_)
    }

    pub fn specificity(&self) -> f64 {
        ratio(self.tn, self.tn + self.fp)
    }

    pub fn f_measure(&self) -> f64 {
        let (p, r) = (self.precision(), self.recall());
        if p + r > 0.0 {
            2.0 * p * r / (p + r)
        } else {
            0.0
        }
    }

    pub fn g_mean(&self) -> f64 {
        (self.recall() * self.specificity()).sqrt()
    }

    /// Mean of sensitivity and specificity; equals the AUC of hard labels.
    pub fn balanced_accuracy(&self) -> f64 {
        0.5 * (self.recall() + self.specificity())
    }
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

/// `y_true[i]` and `y_pred[i]` are `true` for the minority class.
pub fn confusion(y_true: &[bool], y_pred: &[bool]) -> Result<Confusion> {
    if y_true.len() != y_pred.len() {
        return Err(Error::DimensionMismatch {
            expected: y_true.len(),
            found: y_pred.len(),
        });
    }
    if y_true.is_empty() {
        return Err(Error::data("cannot score an empty prediction set"));
    }
    let mut c = Confusion::default();
    for (&t, &p) in y_true.iter().zip(y_pred) {
        match (t, p) {
            (true, true) => c.tp += 1,
            (false, true) => c.fp += 1,
            (true, false) => c.fn_ += 1,
            (false, false) => c.tn += 1,
        }
    }
    Ok(c)
}

/// Mann-Whitney AUC: the share of (positive, negative) pairs ranked
/// correctly, ties counting one half.
pub fn auc(y_true: &[bool], scores: &[f64]) -> Result<f64> {
    if y_true.len() != scores.len() {
        return Err(Error::DimensionMismatch {
            expected: y_true.len(),
            found: scores.len(),
        });
    }
    let n_pos = y_true.iter().filter(|&&t| t).count();
    let n_neg = y_true.len() - n_pos;
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::data("AUC needs both classes in y_true"));
    }
    // Rank-sum form with midranks for ties.
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]));
    let mut rank_sum = 0.0;
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && scores[order[j + 1]] == scores[order[i]] {
            j += 1;
        }
        let mid = (i + j) as f64 / 2.0 + 1.0;
        for &o in &order[i..=j] {
            if y_true[o] {
                rank_sum += mid;
            }
        }
        i = j + 1;
    }
    let u = rank_sum - (n_pos * (n_pos + 1)) as f64 / 2.0;
    Ok(u / (n_pos as f64 * n_neg as f64))
}

/// Evaluation metrics of one fold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricSet {
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    pub auc: f64,
    pub g_mean: f64,
    pub balanced_accuracy: f64,
}

impl MetricSet {
    pub const NAMES: [&'static str; 6] = ["precision", "recall", "f_measure", "auc", "g_mean", "balanced_accuracy"];

    /// Predictions are `score > threshold`.
    pub fn compute(y_true: &[bool], scores: &[f64], threshold: f64) -> Result<Self> {
        let pred: Vec<bool> = scores.iter().map(|&s| s > threshold).collect();
        let c = confusion(y_true, &pred)?;
        Ok(MetricSet {
            precision: c.precision(),
            recall: c.recall(),
            f_measure: c.f_measure(),
            auc: auc(y_true, scores)?,
            g_mean: c.g_mean(),
            balanced_accuracy: c.balanced_accuracy(),
        })
    }

    /// Model-selection criterion: mean of F-measure, AUC and G-mean.
    pub fn selection_score(&self) -> f64 {
        (self.f_measure + self.auc + self.g_mean) / 3.0
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        Some(match name {
            "precision" => self.precision,
            "recall" => self.recall,
            "f_measure" => self.f_measure,
            "auc" => self.auc,
            "g_mean" => self.g_mean,
            "balanced_accuracy" => self.balanced_accuracy,
            _ => return None,
        })
    }

    pub fn values(&self) -> [f64; 6] {
        [
            self.precision,
            self.recall,
            self.f_measure,
            self.auc,
            self.g_mean,
            self.balanced_accuracy,
        ]
    }

    pub fn from_values(v: [f64; 6]) -> Self {
        MetricSet {
            precision: v[0],
            recall: v[1],
            f_measure: v[2],
            auc: v[3],
            g_mean: v[4],
            balanced_accuracy: v[5],
        }
    }

    /// Arithmetic mean of each metric.
    pub fn mean(sets: &[MetricSet]) -> Option<MetricSet> {
        if sets.is_empty() {
            return None;
        }
        let mut acc = [0.0; 6];
        for s in sets {
            for (a, v) in acc.iter_mut().zip(s.values()) {
                *a += v;
            }
        }
        Some(MetricSet::from_values(acc.map(|a| a / sets.len() as f64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(tp: usize, fp: usize, fn_: usize, tn: usize) -> (Vec<bool>, Vec<bool>) {
        let mut t = Vec::new();
        let mut p = Vec::new();
        for (n, a, b) in [(tp, true, true), (fp, false, true), (fn_, true, false), (tn, false, false)] {
            t.extend(std::iter::repeat_n(a, n));
            p.extend(std::iter::repeat_n(b, n));
        }
        (t, p)
    }

    #[test]
    fn worked_confusion() {
        let (t, p) = labels(3, 1, 2, 4);
        let c = confusion(&t, &p).unwrap();
        assert_eq!(c, Confusion { tp: 3, fp: 1, fn_: 2, tn: 4 });
        assert!((c.precision() - 0.75).abs() < 1e-15);
        assert!((c.recall() - 0.6).abs() < 1e-15);
        assert!((c.f_measure() - 2.0 / 3.0).abs() < 1e-12);
        assert!((c.g_mean() - 0.48f64.sqrt()).abs() < 1e-12);
        assert!((c.g_mean() - 0.6928).abs() < 1e-4);
    }

    #[test]
    fn degenerate_predictions() {
        let (t, p) = labels(0, 0, 3, 5);
        let c = confusion(&t, &p).unwrap();
        assert_eq!((c.recall(), c.precision(), c.f_measure(), c.g_mean()), (0.0, 0.0, 0.0, 0.0));
        let (t, p) = labels(2, 0, 0, 2);
        let c = confusion(&t, &p).unwrap();
        assert_eq!((c.fp, c.fn_), (0, 0));
        assert!(confusion(&[true], &[true, false]).is_err());
    }

    #[test]
    fn auc_examples() {
        let y = [true, true, false, false];
        assert_eq!(auc(&y, &[0.9, 0.4, 0.8, 0.2]).unwrap(), 0.75);
        assert_eq!(auc(&y, &[0.9, 0.8, 0.2, 0.1]).unwrap(), 1.0);
        assert_eq!(auc(&y, &[0.3; 4]).unwrap(), 0.5);
        assert!(auc(&[true, true], &[0.1, 0.2]).is_err());
    }

    #[test]
    fn selection_score_and_mean() {
        let a = MetricSet::from_values([1.0, 1.0, 0.3, 0.6, 0.9, 0.5]);
        assert!((a.selection_score() - 0.6).abs() < 1e-15);
        let b = MetricSet::from_values([0.0; 6]);
        assert_eq!(MetricSet::mean(&[a, b]).unwrap().auc, 0.3);
        assert_eq!(a.get("g_mean"), Some(0.9));
        assert_eq!(a.get("nope"), None);
    }

    /// Direct pair counting, independent of the rank-sum formula.
    fn pair_auc(y: &[bool], s: &[f64]) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for i in 0..y.len() {
            for j in 0..y.len() {
                if y[i] && !y[j] {
                    den += 1.0;
                    num += if s[i] > s[j] { 1.0 } else if s[i] == s[j] { 0.5 } else { 0.0 };
                }
            }
        }
        num / den
    }

    proptest! {
        #[test]
        fn auc_properties(
            data in prop::collection::vec((any::<bool>(), 0u32..20), 2..60)
        ) {
            let y: Vec<bool> = data.iter().map(|d| d.0).collect();
            prop_assume!(y.iter().any(|&b| b) && y.iter().any(|&b| !b));
            let s: Vec<f64> = data.iter().map(|d| d.1 as f64 / 7.0).collect();
            let a = auc(&y, &s).unwrap();
            prop_assert!((a - pair_auc(&y, &s)).abs() < 1e-12);
            let mono: Vec<f64> = s.iter().map(|v| (3.0 * v).exp() + 1.0).collect();
            prop_assert!((auc(&y, &mono).unwrap() - a).abs() < 1e-12);
            let neg: Vec<f64> = s.iter().map(|v| -v).collect();
            let tie_free = { let mut u = s.clone(); u.sort_by(f64::total_cmp); u.dedup(); u.len() == s.len() };
            if tie_free {
                prop_assert!((auc(&y, &neg).unwrap() + a - 1.0).abs() < 1e-12);
            }
        }

        #[test]
        fn g_mean_zero_when_a_recall_is_zero(tn in 0usize..10, fp in 0usize..10, fn_ in 1usize..10) {
            let c = Confusion { tp: 0, fp, fn_, tn };
            prop_assert_eq!(c.g_mean(), 0.0);
            prop_assert_eq!(c.f_measure(), 0.0);
        }
    }
}
