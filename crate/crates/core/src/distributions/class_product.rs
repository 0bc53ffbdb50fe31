use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::distributions::sampling::{bootstrap_counts, run_sharded};
use crate::distributions::{tv_to_uniform_parity, ClassDistribution, EmpiricalReport, Mass, Mode};
use crate::error::{Error, Result};
use crate::permcore::{
    class_representative, class_size, for_each_in_class, random_in_class, CycleType, Permutation,
};

/// Largest class `C_β` that [`class_product_exact`] will walk.
pub const DEFAULT_EXACT_CAP: u64 = 100_000_000;

/// Cycle type of the permutation whose image is `pi` followed by `sigma`,
/// that is `x ↦ σ(π(x))`.
pub(crate) fn product_cycle_type(pi: &[usize], sigma: &[usize], seen: &mut [bool]) -> CycleType {
    seen.fill(false);
    let mut parts = Vec::new();
    for start in 0..pi.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = sigma[pi[x]];
        }
        parts.push(len);
    }
    CycleType::from_parts_unsorted(parts)
}

fn check_sizes(alpha: &CycleType, beta: &CycleType) -> Result<()> {
    if alpha.n() != beta.n() {
        return Err(Error::SizeMismatch {
            expected: alpha.n(),
            got: beta.n(),
        });
    }
    Ok(())
}

/// Class tallies of `π·σ` for a fixed `π` and every `σ ∈ C_β`.
pub fn class_product_counts(
    pi: &Permutation,
    beta: &CycleType,
    cap: u64,
) -> Result<BTreeMap<CycleType, u64>> {
    if pi.domain_size() != beta.n() {
        return Err(Error::SizeMismatch {
            expected: pi.domain_size(),
            got: beta.n(),
        });
    }
    let size = class_size(beta);
    if size > BigUint::from(cap) {
        return Err(Error::Capacity {
            what: format!("conjugacy class {beta}"),
            predicted: size.to_string(),
            cap,
        });
    }
    let mut counts = BTreeMap::new();
    let mut seen = vec![false; beta.n()];
    for_each_in_class(beta, |sigma| {
        *counts
            .entry(product_cycle_type(pi.image(), sigma, &mut seen))
            .or_insert(0u64) += 1;
    });
    Ok(counts)
}

/// `P_{α,β}`, the law of `πσ` for independent uniform `π ∈ C_α`, `σ ∈ C_β`.
///
/// Because `P_{α,β}` is a class function it is enough to fix one `π ∈ C_α` and
/// walk `C_β`; the result is exact for a rational `W`.
pub fn class_product_exact<W: Mass>(
    alpha: &CycleType,
    beta: &CycleType,
) -> Result<ClassDistribution<W>> {
    class_product_exact_with(&class_representative(alpha), beta, DEFAULT_EXACT_CAP)
}

/// [`class_product_exact`] with an explicit representative of `C_α` and cap.
pub fn class_product_exact_with<W: Mass>(
    pi: &Permutation,
    beta: &CycleType,
    cap: u64,
) -> Result<ClassDistribution<W>> {
    let counts = class_product_counts(pi, beta, cap)?;
    ClassDistribution::from_counts(beta.n(), &counts, W::MODE)
}

/// A sampled class product: frequencies plus the TV to the uniform distribution
/// on the parity class that `α·β` must land in.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledClassProduct {
    pub distribution: ClassDistribution<f64>,
    pub counts: BTreeMap<CycleType, u64>,
    /// TV to the parity-matched uniform, with a bootstrap interval.
    pub tv_to_uniform: EmpiricalReport,
}

/// Monte Carlo `P_{α,β}` from `samples` independent pairs.
pub fn class_product_sampled(
    alpha: &CycleType,
    beta: &CycleType,
    samples: u64,
    seed: u64,
) -> Result<SampledClassProduct> {
    check_sizes(alpha, beta)?;
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample is needed".into(),
        ));
    }
    let n = alpha.n();
    let shards = run_sharded(
        samples,
        seed,
        || (BTreeMap::<CycleType, u64>::new(), vec![false; n]),
        |rng, (counts, seen)| {
            let pi = random_in_class(alpha, n, rng).expect("sizes checked");
            let sigma = random_in_class(beta, n, rng).expect("sizes checked");
            *counts
                .entry(product_cycle_type(pi.image(), sigma.image(), seen))
                .or_insert(0) += 1;
        },
    );
    let mut counts = BTreeMap::new();
    for (shard, _) in shards {
        for (l, c) in shard {
            *counts.entry(l).or_insert(0) += c;
        }
    }
    let distribution = ClassDistribution::from_counts(n, &counts, Mode::Empirical)?;
    let p = parity_target(alpha, beta);
    let estimate = if n >= 2 {
        tv_to_uniform_parity(&distribution, p)?
    } else {
        0.0
    };

    let classes: Vec<&CycleType> = counts.keys().collect();
    let tallies: Vec<u64> = counts.values().copied().collect();
    let (sd, ci) = bootstrap_counts(&tallies, seed, |resampled| {
        if n < 2 {
            return 0.0;
        }
        let total: u64 = resampled.iter().sum();
        let mass: BTreeMap<CycleType, f64> = classes
            .iter()
            .zip(resampled)
            .map(|(l, &c)| ((*l).clone(), c as f64 / total as f64))
            .collect();
        let d = ClassDistribution::new(n, mass, Mode::Empirical).expect("same classes");
        tv_to_uniform_parity(&d, p).expect("p is 0 or 1")
    });
    Ok(SampledClassProduct {
        distribution,
        counts,
        tv_to_uniform: EmpiricalReport {
            samples,
            estimate,
            std_error: sd,
            seed,
            ci95: Some(ci),
        },
    })
}

/// Odd mass of the uniform distribution that `P_{α,β}` is compared with: all
/// products share the parity of `α` plus `β`.
pub fn parity_target<W: Mass>(alpha: &CycleType, beta: &CycleType) -> W {
    if alpha.is_odd() != beta.is_odd() {
        W::one()
    } else {
        W::zero()
    }
}

/// Summary row of a `P_{(n),λ}` check against its bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FullCycleRow {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub fixed_points: usize,
    pub tv: f64,
    pub tv_exact: Option<String>,
    pub bound: f64,
    pub holds: bool,
}

/// Exact `‖P_{(n),λ} − U‖` against `max{1,ℓ}/(2√(n−1))`, where `U` is uniform on
/// the parity class of `(n)·λ`. The comparison is done in exact arithmetic.
pub fn full_cycle_row(lambda: &CycleType) -> Result<FullCycleRow> {
    use num_rational::BigRational;
    let n = lambda.n();
    let full = CycleType::full_cycle(n);
    let dist: ClassDistribution<BigRational> = class_product_exact(&full, lambda)?;
    let tv = tv_to_uniform_parity(&dist, parity_target(&full, lambda))?;
    let l = lambda.fixed_points();
    Ok(FullCycleRow {
        n,
        lambda: lambda.parts().to_vec(),
        fixed_points: l,
        tv: Mass::to_f64(&tv),
        tv_exact: Some(tv.to_string()),
        bound: crate::distributions::theorem1_bound(n, lambda),
        holds: crate::distributions::full_cycle_bound_holds_exact(&tv, n, l),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{ratio, tv_distance, uniform_even};
    use num_rational::BigRational;

    #[test]
    fn three_cycles_in_s3() {
        let c3 = CycleType::full_cycle(3);
        let p: ClassDistribution<BigRational> = class_product_exact(&c3, &c3).unwrap();
        assert_eq!(p.mass(&CycleType::identity(3)), ratio(1, 2));
        assert_eq!(p.mass(&c3), ratio(1, 2));
        let u = uniform_even(3).unwrap();
        assert_eq!(tv_distance(&p, &u).unwrap(), ratio(1, 6));
    }

    #[test]
    fn identity_factor_is_a_point_mass() {
        for n in 1..7 {
            let p: ClassDistribution<BigRational> =
                class_product_exact(&CycleType::full_cycle(n), &CycleType::identity(n)).unwrap();
            assert_eq!(p, ClassDistribution::point_mass(CycleType::full_cycle(n)));
        }
    }

    #[test]
    fn support_has_the_product_parity() {
        for alpha in crate::permcore::partitions(6) {
            for beta in crate::permcore::partitions(6) {
                let p: ClassDistribution = class_product_exact(&alpha, &beta).unwrap();
                assert!(p
                    .entries()
                    .all(|(l, _)| l.is_odd() == (alpha.is_odd() != beta.is_odd())));
            }
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let c = CycleType::full_cycle(8);
        let err = class_product_exact_with::<f64>(&class_representative(&c), &c, 100).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }

    #[test]
    fn sampled_single_draw_is_a_point_mass() {
        let a = CycleType::full_cycle(5);
        let s = class_product_sampled(&a, &a, 1, 4).unwrap();
        assert_eq!(s.distribution.support_len(), 1);
        assert_eq!(s, class_product_sampled(&a, &a, 1, 4).unwrap());
    }

    #[test]
    fn small_full_cycle_rows_hold() {
        let row = full_cycle_row(&CycleType::full_cycle(3)).unwrap();
        assert_eq!(row.tv_exact.as_deref(), Some("1/6"));
        assert!(row.holds);
        assert!((row.bound - 0.353_553_390_593).abs() < 1e-9);
    }
}
