//! Deterministic pseudo-random numbers for the verification suites.
//!
//! All randomized checks draw from SplitMix64 so that a (seed, trial)
//! pair reproduces the exact inputs of a failed trial. Coefficients are
//! drawn uniformly from {-3, ..., 3} unless an operation documents
//! otherwise.

/// SplitMix64 generator (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Sub-generator for an indexed trial, so trials are independent of
    /// each other and of evaluation order.
    pub fn for_trial(master_seed: u64, trial: u64) -> Self {
        let mut g = SplitMix64::new(master_seed ^ trial.wrapping_mul(0xA076_1D64_78BD_642F));
        g.next_u64();
        g
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` (bound > 0). The modulo bias is
    /// irrelevant here; reproducibility is what matters.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform draw from {-3, ..., 3}, the documented coefficient range.
    pub fn small_int(&mut self) -> i64 {
        self.below(7) as i64 - 3
    }

    /// Uniform draw from {-3, ..., 3} \ {0}.
    pub fn small_nonzero(&mut self) -> i64 {
        loop {
            let v = self.small_int();
            if v != 0 {
                return v;
            }
        }
    }

    pub fn choose(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }
}
