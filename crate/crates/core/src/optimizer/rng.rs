//! Self-contained deterministic random source.
//!
//! Results must be reproducible from a seed value alone, across builds and
//! platforms, so the generator algorithm is part of the contract rather
//! than borrowed from a library that may change between versions. This is
//! xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D), seeded
//! through one round of splitmix64 so that small seeds (0, 1, 2, …) don't
//! produce correlated early output.

#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn seed_from(seed: u64) -> Rng {
        let mut z = seed.wrapping_add(0x9E3779B97F4A7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^= z >> 31;
        Rng {
            // xorshift state must be nonzero; splitmix64 maps exactly one
            // seed to zero.
            state: if z == 0 { 0x5DEECE66D } else { z },
        }
    }

    /// Substream `index` of this generator's seed, for parallel workers
    /// that must not share state.
    pub fn substream(&self, index: u64) -> Rng {
        Rng::seed_from(self.state ^ index.wrapping_mul(0xA076_1D64_78BD_642F))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform in `0..bound`. Modulo bias is below 2⁻⁵³ for any bound this
    /// crate uses (vertex counts, shuffle indices).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.below(i + 1));
        }
    }
}
