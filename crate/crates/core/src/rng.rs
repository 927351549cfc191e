//! Seeded, platform-independent random streams.
//!
//! All randomized operations draw from xoshiro256++ generators. A run seed
//! and a stream index (trial number, worker chunk, ..) are mixed with
//! SplitMix64 into the generator seed, so each trial owns an independent
//! stream and results do not depend on how trials are scheduled.

use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

pub type StreamRng = Xoshiro256PlusPlus;

#[inline]
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Generator for stream `index` of run `seed`.
pub fn stream(seed: u64, index: u64) -> StreamRng {
    let mixed = splitmix64(seed ^ splitmix64(index.wrapping_add(0x5851_F42D_4C95_7F2D)));
    StreamRng::seed_from_u64(mixed)
}
