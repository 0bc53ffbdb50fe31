use std::collections::BTreeMap;

use facedist::distributions::{
    class_product_exact, class_product_exact_with, class_product_sampled, local_face_distribution,
    parity_target, ratio, stirling_reference, tv_distance, tv_distance_counts,
    tv_to_uniform_parity, uniform_parity, ClassDistribution, CycleCountDistribution, Mass, Mode,
    DEFAULT_EXACT_CAP,
};
use facedist::enumeration::{exact_local_distribution, EdgeSchemeMode, EnumerationScope};
use facedist::mapcore::Graph;
use facedist::permcore::{
    class_members, class_representative, partitions, random_permutation, CycleType, Permutation,
    SeededRng,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Every permutation of `0..n`, by Heap's algorithm.
fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::from_image(a.clone()).unwrap()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(Permutation::from_image(a.clone()).unwrap());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn as_map(d: &ClassDistribution<BigRational>) -> BTreeMap<CycleType, BigRational> {
    d.entries()
        .filter(|(_, w)| !w.is_zero())
        .map(|(l, w)| (l.clone(), w.clone()))
        .collect()
}

#[test]
fn classwise_product_matches_elementwise_tally() {
    for n in 1..=6 {
        let classes = partitions(n);
        for alpha in &classes {
            let left = class_members(alpha);
            for beta in &classes {
                let right = class_members(beta);
                let mut tally: BTreeMap<CycleType, u64> = BTreeMap::new();
                for p in &left {
                    for s in &right {
                        *tally.entry(p.compose(s).unwrap().cycle_type()).or_insert(0) += 1;
                    }
                }
                let total = (left.len() * right.len()) as u64;
                let oracle: BTreeMap<CycleType, BigRational> = tally
                    .into_iter()
                    .map(|(l, c)| (l, ratio(c, total)))
                    .collect();
                let got: ClassDistribution<BigRational> = class_product_exact(alpha, beta).unwrap();
                assert_eq!(as_map(&got), oracle, "α = {alpha}, β = {beta}");
            }
        }
    }
}

#[test]
fn parity_uniform_matches_elementwise_count() {
    for n in 2..=6 {
        let perms = all_permutations(n);
        let half = (perms.len() / 2) as u64;
        for p in [ratio(0, 1), ratio(1, 3), ratio(1, 1)] {
            let u = uniform_parity(n, p.clone()).unwrap();
            let mut by_class: BTreeMap<CycleType, u64> = BTreeMap::new();
            for s in &perms {
                *by_class.entry(s.cycle_type()).or_insert(0) += 1;
            }
            for (l, c) in by_class {
                let side = if l.is_odd() {
                    p.clone()
                } else {
                    BigRational::one() - p.clone()
                };
                assert_eq!(u.mass(&l), side * ratio(c, half), "n = {n}, λ = {l}");
            }
            assert_eq!(u.total(), BigRational::one());
        }
    }
}

#[test]
fn support_only_tv_matches_full_table() {
    for n in 2..=7 {
        for alpha in partitions(n) {
            let beta = CycleType::full_cycle(n);
            let d: ClassDistribution<BigRational> = class_product_exact(&alpha, &beta).unwrap();
            let p = if alpha.is_odd() != beta.is_odd() {
                ratio(1, 1)
            } else {
                ratio(0, 1)
            };
            let full = tv_distance(&d, &uniform_parity(n, p.clone()).unwrap()).unwrap();
            assert_eq!(tv_to_uniform_parity(&d, p).unwrap(), full);
        }
    }
}

#[test]
fn stirling_reference_is_the_cycle_count_of_the_uniform() {
    for n in 2..=8 {
        for p in [ratio(0, 1), ratio(2, 5), ratio(1, 1)] {
            let direct = stirling_reference(n, p.clone()).unwrap();
            let marginal = uniform_parity(n, p).unwrap().cycle_count_marginal();
            assert_eq!(direct.masses(), marginal.masses());
        }
    }
}

fn class_dist(n: usize) -> impl Strategy<Value = ClassDistribution<f64>> {
    let k = partitions(n).len();
    proptest::collection::vec(0u64..20, k).prop_filter_map("empty", move |w| {
        let counts: BTreeMap<CycleType, u64> = partitions(n)
            .into_iter()
            .zip(w)
            .filter(|(_, c)| *c > 0)
            .collect();
        ClassDistribution::from_counts(n, &counts, Mode::Float).ok()
    })
}

proptest! {
    #[test]
    fn tv_is_a_metric(a in class_dist(5), b in class_dist(5), c in class_dist(5)) {
        let ab = tv_distance(&a, &b).unwrap();
        let ba = tv_distance(&b, &a).unwrap();
        prop_assert!((ab - ba).abs() < 1e-12);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&ab));
        prop_assert!(tv_distance(&a, &a).unwrap().abs() < 1e-12);
        let bc = tv_distance(&b, &c).unwrap();
        let ac = tv_distance(&a, &c).unwrap();
        prop_assert!(ac <= ab + bc + 1e-12);
    }

    #[test]
    fn cycle_count_tv_is_bounded(a in proptest::collection::vec(0u64..9, 6), b in proptest::collection::vec(0u64..9, 6)) {
        prop_assume!(a.iter().sum::<u64>() > 0 && b.iter().sum::<u64>() > 0);
        let p: CycleCountDistribution = CycleCountDistribution::from_counts(6, &a, Mode::Float).unwrap();
        let q: CycleCountDistribution = CycleCountDistribution::from_counts(6, &b, Mode::Float).unwrap();
        let t = tv_distance_counts(&p, &q).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&t));
    }

    #[test]
    fn any_representative_gives_the_same_law(seed in any::<u64>(), ai in 0usize..11, bi in 0usize..11) {
        let classes = partitions(6);
        let alpha = &classes[ai % classes.len()];
        let beta = &classes[bi % classes.len()];
        let mut rng = SeededRng::new(seed, 0);
        let tau = random_permutation(6, &mut rng);
        let pi = class_representative(alpha).relabel(&tau).unwrap();
        prop_assert_eq!(&pi.cycle_type(), alpha);
        let a: ClassDistribution<BigRational> = class_product_exact_with(&pi, beta, DEFAULT_EXACT_CAP).unwrap();
        let b: ClassDistribution<BigRational> = class_product_exact(alpha, beta).unwrap();
        prop_assert_eq!(as_map(&a), as_map(&b));
    }
}

#[test]
fn sampled_product_converges_to_exact() {
    let alpha = CycleType::full_cycle(6);
    let beta: CycleType = "2,2,1,1".parse().unwrap();
    let exact: ClassDistribution<BigRational> = class_product_exact(&alpha, &beta).unwrap();
    let sampled = class_product_sampled(&alpha, &beta, 1_000_000, 11).unwrap();
    let tv = tv_distance(
        &sampled.distribution.clone().with_mode(Mode::Float),
        &exact.to_f64(),
    )
    .unwrap();
    assert!(tv < 0.005, "tv = {tv}");
    let exact_tv =
        Mass::to_f64(&tv_to_uniform_parity(&exact, parity_target(&alpha, &beta)).unwrap());
    let r = &sampled.tv_to_uniform;
    assert!(
        (r.estimate - exact_tv).abs() < 0.005,
        "{} vs {exact_tv}",
        r.estimate
    );
}

#[test]
fn sampled_local_law_of_k3_matches_enumeration() {
    let g = Graph::complete(3).unwrap();
    let exact = exact_local_distribution(&EnumerationScope::new(g.clone(), EdgeSchemeMode::All), 0)
        .unwrap();
    let n = 100_000u64;
    let sampled = local_face_distribution(&g, 0, n, 5).unwrap();
    for lambda in partitions(2) {
        let p = Mass::to_f64(&exact.omega.mass(&lambda));
        let observed = *sampled.counts.get(&lambda).unwrap_or(&0) as f64 / n as f64;
        let sigma = (p * (1.0 - p) / n as f64).sqrt().max(1e-9);
        assert!(
            (observed - p).abs() <= 5.0 * sigma,
            "{lambda}: {observed} vs {p}"
        );
    }
}
