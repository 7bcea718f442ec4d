//! Deterministic pseudo-random numbers for reproducible corpora.
//!
//! The generator is SplitMix64. Given a 64-bit state `s`, one step is
//!
//! ```text
//! s += 0x9E3779B97F4A7C15
//! z = s
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output z ^ (z >> 31)
//! ```
//!
//! with all arithmetic modulo 2^64. The algorithm is spelled out so the
//! streams can be reproduced in other languages; `below` reduces by
//! plain remainder, which is part of the contract.

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

    /// Uniform-ish value in `0..n` by remainder. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        self.next_u64() % n
    }

    /// Integer in the inclusive range `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }

    /// Derive an independent stream for a labelled sub-task. The label
    /// is folded with FNV-1a so sub-streams stay stable when the list
    /// of sub-tasks changes.
    pub fn derive(&self, label: &str) -> SplitMix64 {
        let mut h: u64 = 0xCBF2_9CE4_8422_2325;
        for b in label.as_bytes() {
            h ^= *b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01B3);
        }
        SplitMix64::new(self.state ^ h)
    }
}
