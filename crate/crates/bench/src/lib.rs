//! Shared fixtures for the benchmark targets.

use multitilde::{Multitilde, Pair};

/// Deterministic xorshift generator, good enough for reproducible inputs.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
}

/// A multitilde of the given arity in which each candidate pair appears
/// with probability 1/2.
pub fn random_tilde(rng: &mut Rng, arity: usize) -> Multitilde {
    let mut pairs = Vec::new();
    for x in 1..=arity {
        for y in x..=arity {
            if rng.next_u64().is_multiple_of(2) {
                pairs.push(Pair::new(x, y).unwrap());
            }
        }
    }
    Multitilde::new(arity, pairs).unwrap()
}
