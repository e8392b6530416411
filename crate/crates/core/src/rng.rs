//! Seeded xorshift64* generator.
//!
//! The exact update rule and output extraction are part of the report
//! format: two implementations fed the same seed must draw the same
//! sample points.

const MULTIPLIER: u64 = 2_685_821_657_736_338_717;
/// Replacement state for seed 0, which is a fixed point of xorshift.
const ZERO_SEED_STATE: u64 = 0x9E37_79B9_7F4A_7C15;
const CHILD_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

/// Stream offsets for [`child_seed`].
pub mod stream {
    pub const C_CONDITION: u64 = 1;
    pub const EXAMPLE_5_7: u64 = 2;
    pub const INJECTION: u64 = 3;
    pub const ADMISSIBLE: u64 = 4;
    pub const INVARIANTS: u64 = 5;
}

/// Seed for an analysis sub-step, derived from the run seed by a fixed offset.
pub fn child_seed(seed: u64, stream: u64) -> u64 {
    seed.wrapping_add(stream.wrapping_mul(CHILD_STRIDE))
}

#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let state = if seed == 0 { ZERO_SEED_STATE } else { seed };
        XorShift64Star { state }
    }

    /// Next 32-bit output (high half of the multiplied state).
    pub fn next_u32(&mut self) -> u32 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        (x.wrapping_mul(MULTIPLIER) >> 32) as u32
    }

    /// Uniform integer in `[0, m)` by rejection sampling; `m` in `1..=2^32`.
    pub fn below(&mut self, m: u64) -> u64 {
        assert!((1..=1 << 32).contains(&m), "range must fit in 32 bits");
        let span = 1u64 << 32;
        let zone = span - span % m;
        loop {
            let r = self.next_u32() as u64;
            if r < zone {
                return r % m;
            }
        }
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn symmetric(&mut self, bound: u64) -> i64 {
        self.below(2 * bound + 1) as i64 - bound as i64
    }
}
