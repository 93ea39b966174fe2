use crate::dataio::BinaryTask;
use ndarray::{ArrayView2, Axis};

const VAR_SMOOTHING: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
struct ClassStats {
    log_prior: f64,
    mean: Vec<f64>,
    var: Vec<f64>,
}

impl ClassStats {
    fn fit(x: ArrayView2<'_, f64>, prior: f64, epsilon: f64) -> Self {
        let n = x.nrows() as f64;
        let mean = x.mean_axis(Axis(0)).expect("non-empty class").to_vec();
        let var = x
            .columns()
            .into_iter()
            .zip(&mean)
            .map(|(c, mu)| c.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / n + epsilon)
            .collect();
        ClassStats {
            log_prior: prior.ln(),
            mean,
            var,
        }
    }

    fn joint_log_likelihood(&self, x: &[f64]) -> f64 {
        let mut ll = self.log_prior;
        for ((v, mu), var) in x.iter().zip(&self.mean).zip(&self.var) {
            ll -= 0.5 * (2.0 * std::f64::consts::PI * var).ln() + (v - mu) * (v - mu) / (2.0 * var);
        }
        ll
    }
}

/// Gaussian naive Bayes with empirical priors. Every class variance is
/// increased by `1e-9` times the largest per-feature variance of the
/// training data.
#[derive(Debug, Clone, PartialEq)]
pub struct GnbModel {
    majority: ClassStats,
    minority: ClassStats,
    epsilon: f64,
}

impl GnbModel {
    pub fn fit(train: &BinaryTask) -> Self {
        let (x, _) = train.stacked();
        let n = x.nrows() as f64;
        let max_var = x
            .columns()
            .into_iter()
            .map(|c| {
                let mu = c.sum() / n;
                c.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / n
            })
            .fold(0.0, f64::max);
        let epsilon = if max_var > 0.0 { VAR_SMOOTHING * max_var } else { VAR_SMOOTHING };
        GnbModel {
            majority: ClassStats::fit(train.majority(), train.n_majority() as f64 / n, epsilon),
            minority: ClassStats::fit(train.minority(), train.n_minority() as f64 / n, epsilon),
            epsilon,
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Posterior probability of the minority class.
    pub fn score(&self, x: &[f64]) -> f64 {
        let lp = self.minority.joint_log_likelihood(x);
        let ln = self.majority.joint_log_likelihood(x);
        // exp(lp - logsumexp(lp, ln)), written on the difference so large
        // log-likelihoods do not swamp it.
        1.0 / (1.0 + (ln - lp).exp())
    }
}
