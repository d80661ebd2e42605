//! Deterministic random points for spot checks.
//!
//! The sampler draws small exact rationals from a seeded ChaCha stream. The
//! seed comes from the `LAUDER_SEED` environment variable when set, otherwise
//! a fixed default, so repeated runs produce identical output.

use crate::algebra::Element;
use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Seed used when `LAUDER_SEED` is not set.
pub const DEFAULT_SEED: u64 = 0x4c61_7550_726f_6421;

/// Environment variable overriding the sampler seed.
pub const SEED_ENV_VAR: &str = "LAUDER_SEED";

pub struct PointSampler {
    rng: ChaCha20Rng,
}

impl PointSampler {
    pub fn with_seed(seed: u64) -> Self {
        PointSampler {
            rng: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    /// Seed from `LAUDER_SEED` (decimal) when present, else the default.
    pub fn from_env() -> Self {
        Self::with_seed(seed_from_env())
    }

    /// A rational with numerator in `[-9, 9]` and denominator in `[1, 4]`.
    pub fn scalar(&mut self) -> Scalar {
        let num = self.rng.gen_range(-9i64..=9);
        let den = self.rng.gen_range(1i64..=4);
        Scalar::ratio(num, den)
    }

    pub fn element(&mut self, dim: usize) -> Element {
        Element::from_coords((0..dim).map(|_| self.scalar()).collect())
    }
}

/// The seed the sampler will use, for reporting.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}
