use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::polycore::ExactScalar;

/// Default seed for weight sampling, used by the CLI when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Range `[-WEIGHT_RANGE, WEIGHT_RANGE]` from which random integer weights are drawn.
pub const WEIGHT_RANGE: i64 = 50;

/// Characters `t_0, ..., t_r` of the diagonal torus acting on `P^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusWeights(Vec<ExactScalar>);

impl TorusWeights {
    pub fn new(t: Vec<ExactScalar>) -> Self {
        TorusWeights(t)
    }

    pub fn from_integers(t: &[i64]) -> Self {
        TorusWeights(t.iter().map(|&x| ExactScalar::from(x)).collect())
    }

    /// `count` integer weights drawn from `[-50, 50]`, redrawn until
    /// `accept` holds. The same seed always yields the same weights.
    pub fn sample_with(count: usize, seed: u64, accept: impl Fn(&[i64]) -> bool) -> Result<Self> {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..10_000 {
            let t: Vec<i64> = (0..count).map(|_| rng.gen_range(-WEIGHT_RANGE..=WEIGHT_RANGE)).collect();
            if accept(&t) {
                return Ok(TorusWeights::from_integers(&t));
            }
        }
        Err(Error::param(format!("could not sample {count} admissible weights in [-{WEIGHT_RANGE}, {WEIGHT_RANGE}]")))
    }

    /// Pairwise distinct seeded weights.
    pub fn seeded_distinct(count: usize, seed: u64) -> Result<Self> {
        Self::sample_with(count, seed, |t| {
            let mut s = t.to_vec();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[ExactScalar] {
        &self.0
    }

    pub fn pairwise_distinct(&self) -> bool {
        let mut s = self.0.clone();
        s.sort();
        s.windows(2).all(|w| w[0] != w[1])
    }
}
