//! Seed handling. Every stochastic routine takes a `u64` seed and builds its
//! own ChaCha stream, so results never depend on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent seed from a master seed and a sequence of string
/// and integer coordinates, e.g. `(dataset, method, fold)`.
pub fn derive_seed(master: u64, parts: &[SeedPart<'_>]) -> u64 {
    let mut h = splitmix64(master);
    for part in parts {
        match part {
            SeedPart::Str(s) => {
                // FNV-1a over the bytes, then mixed into the running state.
                let mut f: u64 = 0xcbf2_9ce4_8422_2325;
                for b in s.bytes() {
                    f ^= u64::from(b);
                    f = f.wrapping_mul(0x0100_0000_01b3);
                }
                h = splitmix64(h ^ f);
            }
            SeedPart::Int(i) => h = splitmix64(h ^ splitmix64(*i)),
        }
    }
    h
}

#[derive(Debug, Clone, Copy)]
pub enum SeedPart<'a> {
    Str(&'a str),
    Int(u64),
}

impl<'a> From<&'a str> for SeedPart<'a> {
    fn from(s: &'a str) -> Self {
        SeedPart::Str(s)
    }
}

impl From<u64> for SeedPart<'_> {
    fn from(i: u64) -> Self {
        SeedPart::Int(i)
    }
}

impl From<usize> for SeedPart<'_> {
    fn from(i: usize) -> Self {
        SeedPart::Int(i as u64)
    }
}
