use crate::dataio::BinaryTask;
use crate::error::Result;
use crate::rbu::check_ratio;
use crate::rng::rng_from_seed;
use ndarray::Axis;
use rand::seq::index::sample;
use rand::Rng;

/// Random undersampling: drops `⌈ratio·(|K| − |κ|)⌉` majority points chosen
/// uniformly without replacement. Survivors keep their order.
pub fn rus(task: &BinaryTask, ratio: f64, seed: u64) -> Result<BinaryTask> {
    check_ratio(ratio)?;
    let n = task.n_majority();
    let r = task.balancing_count(ratio);
    let mut rng = rng_from_seed(seed);
    let mut drop = vec![false; n];
    for i in sample(&mut rng, n, r) {
        drop[i] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&i| !drop[i]).collect();
    task.with_majority(task.majority().select(Axis(0), &kept))
}

/// Random oversampling: appends `⌈ratio·(|K| − |κ|)⌉` copies of minority
/// points drawn uniformly with replacement.
pub fn ros(task: &BinaryTask, ratio: f64, seed: u64) -> Result<BinaryTask> {
    check_ratio(ratio)?;
    let n = task.n_minority();
    let r = task.balancing_count(ratio);
    let mut rng = rng_from_seed(seed);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.extend((0..r).map(|_| rng.gen_range(0..n)));
    task.with_minority(task.minority().select(Axis(0), &idx))
}
