//! Shared fixtures for the benchmarks.

use rbu_core::synthetic::gaussian_blobs;
use rbu_core::BinaryTask;

pub const SEED: u64 = 2024;

/// Blob task with `n` points in total, one fifth of them minority.
pub fn blobs(n: usize, m: usize) -> BinaryTask {
    let n_min = (n / 5).max(1);
    gaussian_blobs(n - n_min, n_min, m, 1.5, SEED).expect("valid blob shape")
}
