use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlinalg::{frac, Rat};

/// Retries allowed before declaring a displacement problem degenerate.
pub const MAX_ATTEMPTS: usize = 64;

/// Deterministic stream of small rationals used for generic displacements
/// and generic interior points.
#[derive(Clone, Debug)]
pub struct Displacer {
    rng: ChaCha8Rng,
}

impl Displacer {
    pub fn new(seed: u64) -> Self {
        Displacer { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Numerator in `[-10^4, 10^4]`, denominator in `[1, 7]`.
    pub fn rational(&mut self) -> Rat {
        let n = self.rng.gen_range(-10_000i64..=10_000);
        let d = self.rng.gen_range(1i64..=7);
        frac(n, d)
    }

    /// A nonzero vector of small rationals.
    pub fn vector(&mut self, n: usize) -> Vec<Rat> {
        loop {
            let v: Vec<Rat> = (0..n).map(|_| self.rational()).collect();
            if n == 0 || v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }

    /// Positive rationals, for points in relative interiors.
    pub fn positive(&mut self, k: usize) -> Vec<Rat> {
        (0..k)
            .map(|_| {
                let n = self.rng.gen_range(1i64..=1_000);
                let d = self.rng.gen_range(1i64..=7);
                frac(n, d)
            })
            .collect()
    }
}
