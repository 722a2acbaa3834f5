//! Deterministic sub-seed derivation shared by the randomized routines.
//!
//! Restart `r` of a run with master seed `s` always draws from
//! `rng_for(s, r)`, so results are reproducible and independent of the order
//! in which restarts execute.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64-style mix of (seed, stream) into one well-spread sub-seed.
pub(crate) fn sub_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The RNG for stream `stream` of master seed `seed`. ChaCha has a stable
/// cross-platform stream, which is what makes runs bit-reproducible.
pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(sub_seed(seed, stream))
}
