//! Deterministic seed derivation.
//!
//! Every stochastic component (refresh phase, contention jitter, buffer
//! placement, CPU stall sampling) pulls from its own Xoshiro256** stream
//! derived from a single `u64` seed plus a stream tag, so that adding draws
//! to one component never perturbs another.

use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256StarStar;

/// Stream tags. Distinct per consumer; values are arbitrary odd constants.
pub const TAG_DDR: u64 = 0x9D7_0001;
pub const TAG_ENGINE: u64 = 0x9D7_0003;
pub const TAG_RING: u64 = 0x9D7_0005;
pub const TAG_CPU: u64 = 0x9D7_0007;
pub const TAG_POINT: u64 = 0x9D7_0009;

/// SplitMix64 finalizer; the standard 64-bit avalanche mix.
#[inline]
pub fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// A named random stream for `seed`.
pub fn stream(seed: u64, tag: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(mix64(seed ^ mix64(tag)))
}

/// Uniform draw in `0..n` from a raw 64-bit sample (Lemire reduction).
///
/// The modulo bias is below 2^-40 for the ranges used here and the mapping
/// is deterministic, which is all the simulator requires.
#[inline]
pub fn reduce(sample: u64, n: u64) -> u64 {
    ((sample as u128 * n as u128) >> 64) as u64
}
