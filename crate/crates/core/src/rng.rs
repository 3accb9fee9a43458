//! Pinned pseudo-random stream.
//!
//! SplitMix64 with the standard constants. Random colorings draw one output
//! per pair in pair-index order, so a seed fixes the coloring on every
//! platform and in every implementation of the same stream.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// True with probability `num / den` (`den > 0`), by multiply-shift on the next draw.
    pub fn bernoulli(&mut self, num: u64, den: u64) -> bool {
        debug_assert!(den > 0);
        (((self.next_u64() as u128) * (den as u128)) >> 64) < num as u128
    }
}
