//! Gaussian blob generator for tests and benchmarks.

use crate::dataio::BinaryTask;
use crate::error::{Error, Result};
use crate::rng::rng_from_seed;
use ndarray::Array2;
use rand::Rng;

/// Standard normal draw by the Box-Muller transform.
fn normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Two isotropic unit-variance blobs in `m` dimensions, the minority centred
/// at `separation` along every axis and the majority at the origin.
pub fn gaussian_blobs(
    n_majority: usize,
    n_minority: usize,
    m: usize,
    separation: f64,
    seed: u64,
) -> Result<BinaryTask> {
    if m == 0 {
        return Err(Error::param("blobs need at least one feature"));
    }
    let mut rng = rng_from_seed(seed);
    let majority = Array2::from_shape_simple_fn((n_majority, m), || normal(&mut rng));
    let minority = Array2::from_shape_simple_fn((n_minority, m), || normal(&mut rng) + separation);
    BinaryTask::new(majority, minority)
}
