//! Seeded, sharded Monte Carlo plumbing.
//!
//! `N` samples are cut into shards of [`SHARD_SIZE`]; shard `i` draws from the
//! ChaCha stream `i` of the run seed and shards are reduced in index order. The
//! output depends on `(seed, N)` only, never on the number of worker threads.

use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;
use serde::Serialize;

use crate::permcore::SeededRng;

pub const SHARD_SIZE: u64 = 2048;

/// Stream reserved for bootstrap resampling; far above any shard index.
pub const BOOTSTRAP_STREAM: u64 = u64::MAX;

pub const BOOTSTRAP_RESAMPLES: usize = 1000;

/// `(start, len)` of each shard.
pub fn shard_plan(samples: u64) -> Vec<(u64, u64)> {
    (0..samples.div_ceil(SHARD_SIZE))
        .map(|i| {
            let start = i * SHARD_SIZE;
            (start, SHARD_SIZE.min(samples - start))
        })
        .collect()
}

/// Runs `step` once per sample. Each shard owns an accumulator made by `init`
/// and a private RNG; the per-shard accumulators come back in shard order.
pub fn run_sharded<A, I, F>(samples: u64, seed: u64, init: I, step: F) -> Vec<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut SeededRng, &mut A) + Sync,
{
    shard_plan(samples)
        .into_par_iter()
        .enumerate()
        .map(|(index, (_, len))| {
            let mut rng = SeededRng::new(seed, index as u64);
            let mut acc = init();
            for _ in 0..len {
                step(&mut rng, &mut acc);
            }
            acc
        })
        .collect()
}

/// Sample mean and its standard error `s/√N` from running sums.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MeanAccumulator {
    pub count: u64,
    pub sum: f64,
    pub sum_sq: f64,
}

impl MeanAccumulator {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        self.sum += x;
        self.sum_sq += x * x;
    }

    pub fn merge(&mut self, other: &MeanAccumulator) {
        self.count += other.count;
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
    }

    pub fn mean(&self) -> f64 {
        self.sum / self.count as f64
    }

    /// Unbiased sample standard deviation over `√N`; zero for fewer than two samples.
    pub fn std_error(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        let n = self.count as f64;
        let var = ((self.sum_sq - self.sum * self.sum / n) / (n - 1.0)).max(0.0);
        (var / n).sqrt()
    }
}

/// A Monte Carlo point estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmpiricalReport {
    pub samples: u64,
    pub estimate: f64,
    pub std_error: f64,
    pub seed: u64,
    /// Bootstrap percentile interval, when one was computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci95: Option<[f64; 2]>,
}

impl EmpiricalReport {
    pub fn from_mean(acc: &MeanAccumulator, seed: u64) -> Self {
        EmpiricalReport {
            samples: acc.count,
            estimate: acc.mean(),
            std_error: acc.std_error(),
            seed,
            ci95: None,
        }
    }
}

/// One multinomial draw of `total` items over categories weighted by `weights`,
/// by conditional binomials.
pub fn multinomial(total: u64, weights: &[u64], rng: &mut SeededRng) -> Vec<u64> {
    let mut remaining_weight: u64 = weights.iter().sum();
    let mut remaining = total;
    let mut out = Vec::with_capacity(weights.len());
    for &w in weights {
        if remaining == 0 || w == 0 {
            out.push(0);
        } else if w >= remaining_weight {
            out.push(remaining);
            remaining = 0;
        } else {
            let p = w as f64 / remaining_weight as f64;
            let draw = Binomial::new(remaining, p)
                .expect("probability lies in [0, 1]")
                .sample(rng);
            out.push(draw);
            remaining -= draw;
        }
        remaining_weight -= w;
    }
    out
}

/// Bootstrap of a statistic of a categorical sample given by its counts.
/// Returns the bootstrap standard deviation and the 2.5%/97.5% percentiles.
pub fn bootstrap_counts<F>(counts: &[u64], seed: u64, statistic: F) -> (f64, [f64; 2])
where
    F: Fn(&[u64]) -> f64,
{
    let total: u64 = counts.iter().sum();
    let mut rng = SeededRng::new(seed, BOOTSTRAP_STREAM);
    let mut values: Vec<f64> = (0..BOOTSTRAP_RESAMPLES)
        .map(|_| statistic(&multinomial(total, counts, &mut rng)))
        .collect();
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let sd = (values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
    values.sort_by(f64::total_cmp);
    let pick = |q: f64| values[((q * (n - 1.0)).round() as usize).min(values.len() - 1)];
    (sd, [pick(0.025), pick(0.975)])
}
