use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::distributions::{ClassDistribution, CycleCountDistribution, Mass};
use crate::error::{Error, Result};
use crate::permcore::{centralizer_order, factorial, partitions, stirling_first_row, CycleType};

fn check_p<W: Mass>(n: usize, p: &W) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "parity-uniform distributions need n ≥ 2, got {n}"
        )));
    }
    let x = p.to_f64();
    if p.is_negative() || *p > W::one() || x.is_nan() {
        return Err(Error::InvalidProbability(x));
    }
    Ok(())
}

/// `U_{[n],p}`: total mass `p` spread uniformly over odd permutations and
/// `1 − p` over even ones. A class of type `λ` gets `2/z_λ` of its parity's mass.
pub fn uniform_parity<W: Mass>(n: usize, p: W) -> Result<ClassDistribution<W>> {
    check_p(n, &p)?;
    let mode = W::MODE;
    let q = W::one() - p.clone();
    let two = BigUint::from(2u32);
    let mass: BTreeMap<CycleType, W> = partitions(n)
        .into_iter()
        .map(|l| {
            let share = W::from_ratio(&two, &centralizer_order(&l));
            let w = if l.is_odd() { p.clone() } else { q.clone() } * share;
            (l, w)
        })
        .collect();
    ClassDistribution::new(n, mass, mode)
}

/// `U_{A_n}`.
pub fn uniform_even<W: Mass>(n: usize) -> Result<ClassDistribution<W>> {
    uniform_parity(n, W::zero())
}

/// `U_{A_n^c}`.
pub fn uniform_odd<W: Mass>(n: usize) -> Result<ClassDistribution<W>> {
    uniform_parity(n, W::one())
}

/// Mass `U_{[n],p}` gives to the class `λ`, without building the whole table.
pub fn uniform_parity_class_mass<W: Mass>(lambda: &CycleType, p: &W) -> W {
    let share = W::from_ratio(&BigUint::from(2u32), &centralizer_order(lambda));
    let parity = if lambda.is_odd() {
        p.clone()
    } else {
        W::one() - p.clone()
    };
    parity * share
}

/// `‖P − U_{[n],p}‖`, touching only the support of `P`. Classes outside the
/// support contribute `U`'s mass there, which is `1 − Σ_{supp P} U`.
pub fn tv_to_uniform_parity<W: Mass>(dist: &ClassDistribution<W>, p: W) -> Result<W> {
    check_p(dist.n(), &p)?;
    let mut diff = W::zero();
    let mut covered = W::zero();
    for (lambda, w) in dist.entries() {
        let u = uniform_parity_class_mass(lambda, &p);
        diff = diff + (w.clone() - u.clone()).abs();
        covered = covered + u;
    }
    let rest = W::one() - covered;
    // Floating error can push the remainder a hair below zero.
    let rest = if rest.is_negative() { W::zero() } else { rest };
    Ok((diff + rest) / (W::one() + W::one()))
}

/// `P_{n,p}(k) = p·2c(n,k)/n!` for `n + k` odd and `(1 − p)·2c(n,k)/n!` for
/// `n + k` even: the cycle-count law of `U_{[n],p}`.
pub fn stirling_reference<W: Mass>(n: usize, p: W) -> Result<CycleCountDistribution<W>> {
    check_p(n, &p)?;
    let row = stirling_first_row(n);
    let den = factorial(n);
    let two = BigUint::from(2u32);
    let mass = (1..=n)
        .map(|k| {
            let share = W::from_ratio(&(&two * &row[k]), &den);
            let parity = if (n + k) % 2 == 1 {
                p.clone()
            } else {
                W::one() - p.clone()
            };
            parity * share
        })
        .collect();
    CycleCountDistribution::new(n, mass, W::MODE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{ratio, tv_distance, tv_distance_counts};
    use num_rational::BigRational;

    #[test]
    fn a3() {
        let u: ClassDistribution<BigRational> = uniform_even(3).unwrap();
        assert_eq!(u.mass(&CycleType::identity(3)), ratio(1, 3));
        assert_eq!(u.mass(&CycleType::full_cycle(3)), ratio(2, 3));
        assert_eq!(u.support_len(), 2);
        let o: ClassDistribution<BigRational> = uniform_odd(3).unwrap();
        assert_eq!(tv_distance(&u, &o).unwrap(), ratio(1, 1));
    }

    #[test]
    fn half_is_uniform() {
        for n in 2..8 {
            let u: ClassDistribution<BigRational> = uniform_parity(n, ratio(1, 2)).unwrap();
            for (l, w) in u.entries() {
                assert_eq!(
                    w.clone(),
                    BigRational::new(crate::permcore::class_size(l).into(), factorial(n).into())
                );
            }
        }
    }

    #[test]
    fn p_zero_is_even() {
        let a: ClassDistribution<BigRational> = uniform_parity(5, ratio(0, 1)).unwrap();
        assert_eq!(a, uniform_even(5).unwrap());
    }

    #[test]
    fn rejects_bad_p() {
        assert!(uniform_parity(4, 1.5).is_err());
        assert!(uniform_parity(4, -0.1).is_err());
        assert!(uniform_parity(1, 0.5).is_err());
        assert!(stirling_reference(4, f64::NAN).is_err());
    }

    #[test]
    fn stirling_n3() {
        let p = ratio(1, 5);
        let d = stirling_reference(3, p.clone()).unwrap();
        let one = ratio(1, 1);
        assert_eq!(d.mass(1), (&one - &p) * ratio(2, 3));
        assert_eq!(d.mass(2), p.clone());
        assert_eq!(d.mass(3), (&one - &p) * ratio(1, 3));
    }

    #[test]
    fn stirling_normalises() {
        for n in 2..=20 {
            for p in [ratio(0, 1), ratio(3, 10), ratio(1, 1)] {
                assert_eq!(stirling_reference(n, p).unwrap().total(), ratio(1, 1));
            }
        }
    }

    #[test]
    fn stirling_is_the_pushforward() {
        for n in 2..=8 {
            for p in [ratio(0, 1), ratio(2, 7), ratio(1, 1)] {
                let u = uniform_parity(n, p.clone()).unwrap();
                let s = stirling_reference(n, p).unwrap();
                assert_eq!(u.cycle_count_marginal(), s);
                assert_eq!(
                    tv_distance_counts(&u.cycle_count_marginal(), &s).unwrap(),
                    ratio(0, 1)
                );
            }
        }
    }

    #[test]
    fn support_only_tv_matches_full_tv() {
        let p: ClassDistribution<BigRational> =
            ClassDistribution::point_mass(CycleType::full_cycle(5));
        for q in [ratio(0, 1), ratio(1, 3), ratio(1, 1)] {
            let full = tv_distance(&p, &uniform_parity(5, q.clone()).unwrap()).unwrap();
            assert_eq!(tv_to_uniform_parity(&p, q).unwrap(), full);
        }
    }
}
