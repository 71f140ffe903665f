//! Seeded random streams.
//!
//! All randomness flows through [`SimRng`], a ChaCha8 stream whose output
//! is fixed across platforms for a given seed. Per-task seeds are derived
//! statelessly from a master seed and a list of indices, so tasks can run
//! in any order or in parallel.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SimRng {
    SimRng::seed_from_u64(seed)
}

/// SplitMix64 finaliser.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Child seed for the cell addressed by `path` under `master`.
pub fn derive_seed(master: u64, path: &[u64]) -> u64 {
    let mut h = mix64(master ^ 0x6a09_e667_f3bc_c908);
    for (depth, &i) in path.iter().enumerate() {
        h = mix64(h.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(mix64(i ^ (depth as u64) << 56)));
    }
    h
}
