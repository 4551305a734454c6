//! Deterministic random generation for searches.

use crate::error::Result;
use crate::matrix::Matrix;

/// An xorshift64* generator.
///
/// State update: `x ^= x << 13; x ^= x >> 7; x ^= x << 17`. Output:
/// `x.wrapping_mul(0x2545F4914F6CDD1D)`. The recurrence is fixed so any
/// seeded run reproduces bit-for-bit on every platform. Not cryptographic.
#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    /// A zero seed would pin the generator at zero, so it is replaced by a
    /// fixed nonzero constant.
    pub fn new(seed: u64) -> Self {
        Self {
            state: if seed == 0 { 0x9E3779B97F4A7C15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state ^= self.state << 13;
        self.state ^= self.state >> 7;
        self.state ^= self.state << 17;
        self.state.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform draw from [0, bound) by rejection sampling, so small bounds
    /// carry no modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound >= 1, "bound must be positive");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// A rows×cols matrix with independent uniform entries in [0, modulus),
    /// filled row-major.
    pub fn matrix(&mut self, modulus: u64, rows: usize, cols: usize) -> Result<Matrix> {
        let entries = (0..rows * cols).map(|_| self.below(modulus)).collect();
        Matrix::new(modulus, rows, cols, entries)
    }
}
