//! SplitMix64: the fixed pseudo-random generator behind all sampling.
//!
//! Every random choice in this crate is driven by this single algorithm so
//! that experiments reproduce bit-for-bit across platforms and languages.
//! The generator is the public-domain SplitMix64 of Steele, Lea and Flood:
//! the state advances by the odd constant 0x9E3779B97F4A7C15 and each output
//! is a finalizer (xor-shift / multiply) of the new state.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn finalize(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        finalize(self.state)
    }

    /// Uniform draw in `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn next_unit(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.next_u64() >> 11) as f64 * SCALE
    }

    /// Uniform integer in `0..bound` by rejection-free modulo of a 64-bit
    /// draw; bias is negligible for the small bounds used here.
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}

/// The `idx`-th output of the SplitMix64 stream seeded with `seed`
/// (0-based).  Used to derive independent per-trial seeds: the map
/// `idx -> output` is a bijection for fixed `seed`, so distinct trials
/// never collide.
#[inline]
pub fn stream_seed(seed: u64, idx: u64) -> u64 {
    finalize(seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(idx.wrapping_add(1))))
}
