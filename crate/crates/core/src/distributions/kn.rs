//! Statistics of a uniform map of `K_n` grown from a uniform map of `K_{n−1}`.
//!
//! Each sample draws `m' ∈ 𝓜(K_{n−1})`, records the face profile of the dart
//! `e = 0` (the minimal dart of the first block), grows `m'` to `m` by adding
//! `v = v_n`, and measures `m` around `v` and `e`. The dart `e` keeps label 0
//! in `m` and never lies in `D_v`.

use serde::Serialize;

use crate::distributions::sampling::{bootstrap_counts, run_sharded, MeanAccumulator};
use crate::distributions::{
    expected_faces_bound, outside_face_bound, stirling_reference, tv_distance_counts,
    CycleCountDistribution, EmpiricalReport, Mode,
};
use crate::error::{Error, Result};
use crate::mapcore::{darts_in_faces_touching, extend_kn, random_map, Graph};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KnExtensionReport {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    /// Indicator estimate of `Pr[v ∉ F_e]`.
    pub not_in_face: EmpiricalReport,
    /// Mean of `Π_i (1 − f_i/(n−2))`, the exact conditional probability of
    /// `v ∉ F_e` given `m'`; same expectation, smaller variance.
    pub not_in_face_conditional: EmpiricalReport,
    pub not_in_face_bound: f64,
    /// `E[F(K_n)]`.
    pub faces: EmpiricalReport,
    pub faces_bound: f64,
    /// `E[|D'|]/|D|`.
    pub dprime_fraction: EmpiricalReport,
    /// `Q_{n−1}`: law of the number of faces incident with `v`.
    pub face_count_at_v: CycleCountDistribution<f64>,
    pub face_count_at_v_counts: Vec<u64>,
    /// `Pr[α(m) odd]`, read off `Q_{n−1}` as the odd part of `ω_v`.
    pub p_hat: f64,
    /// `‖Q_{n−1} − P_{n−1,p̂}‖`, with a bootstrap interval.
    pub tv_to_stirling: EmpiricalReport,
}

struct Shard {
    outside: MeanAccumulator,
    conditional: MeanAccumulator,
    faces: MeanAccumulator,
    dprime: MeanAccumulator,
    incident: Vec<u64>,
}

/// Runs the growth pipeline `samples` times on `K_n` (`n ≥ 4`).
pub fn kn_extension_statistics(n: usize, samples: u64, seed: u64) -> Result<KnExtensionReport> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "the K_n growth experiment needs n ≥ 4, got {n}"
        )));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample is needed".into(),
        ));
    }
    let small = Graph::complete(n - 1)?;
    let big = Graph::complete(n)?;
    let v = n - 1;
    let e = 0;
    let total_darts = big.dart_count() as f64;
    let slots = (n - 2) as f64;

    let shards = run_sharded(
        samples,
        seed,
        || Shard {
            outside: MeanAccumulator::default(),
            conditional: MeanAccumulator::default(),
            faces: MeanAccumulator::default(),
            dprime: MeanAccumulator::default(),
            incident: vec![0; n - 1],
        },
        |rng, shard| {
            let before = random_map(&small, rng).expect("complete graph");
            let profile = before.face_profile(e).expect("dart 0 exists");
            let conditional: f64 = profile.iter().map(|&f| 1.0 - f as f64 / slots).product();
            shard.conditional.push(conditional);

            let m = extend_kn(&before, rng).expect("complete graph");
            let faces = m.faces();
            let block = big.block(v);
            let outside = !faces.face_containing(e).iter().any(|d| block.contains(d));
            shard.outside.push(if outside { 1.0 } else { 0.0 });
            shard.faces.push(faces.face_count() as f64);
            let dprime = darts_in_faces_touching(&faces, block.clone());
            shard.dprime.push(dprime.len() as f64 / total_darts);
            let mut touched: Vec<usize> = block.map(|d| faces.face_of[d]).collect();
            touched.sort_unstable();
            touched.dedup();
            shard.incident[touched.len() - 1] += 1;
        },
    );

    let mut outside = MeanAccumulator::default();
    let mut conditional = MeanAccumulator::default();
    let mut faces = MeanAccumulator::default();
    let mut dprime = MeanAccumulator::default();
    let mut incident = vec![0u64; n - 1];
    for s in &shards {
        outside.merge(&s.outside);
        conditional.merge(&s.conditional);
        faces.merge(&s.faces);
        dprime.merge(&s.dprime);
        for (a, b) in incident.iter_mut().zip(&s.incident) {
            *a += b;
        }
    }

    let d = n - 1;
    let statistic = |tally: &[u64]| -> f64 { tv_to_stirling(d, tally).1 };
    let (p_hat, tv) = tv_to_stirling(d, &incident);
    let (sd, ci) = bootstrap_counts(&incident, seed, statistic);

    Ok(KnExtensionReport {
        n,
        samples,
        seed,
        not_in_face: EmpiricalReport::from_mean(&outside, seed),
        not_in_face_conditional: EmpiricalReport::from_mean(&conditional, seed),
        not_in_face_bound: outside_face_bound(n),
        faces: EmpiricalReport::from_mean(&faces, seed),
        faces_bound: expected_faces_bound(n),
        dprime_fraction: EmpiricalReport::from_mean(&dprime, seed),
        face_count_at_v: CycleCountDistribution::from_counts(d, &incident, Mode::Empirical)?,
        face_count_at_v_counts: incident,
        p_hat,
        tv_to_stirling: EmpiricalReport {
            samples,
            estimate: tv,
            std_error: sd,
            seed,
            ci95: Some(ci),
        },
    })
}

/// `(p̂, ‖Q − P_{d,p̂}‖)` for a histogram of cycle counts of permutations of
/// `d` symbols. A permutation with `k` cycles is odd iff `d − k` is odd.
pub fn tv_to_stirling(d: usize, tally: &[u64]) -> (f64, f64) {
    let total: u64 = tally.iter().sum();
    let odd: u64 = tally
        .iter()
        .enumerate()
        .filter(|(i, _)| (d - (i + 1)) % 2 == 1)
        .map(|(_, c)| c)
        .sum();
    let p_hat = odd as f64 / total as f64;
    let q: CycleCountDistribution<f64> =
        CycleCountDistribution::from_counts(d, tally, Mode::Empirical).expect("nonempty tally");
    let reference = stirling_reference(d, p_hat).expect("p̂ in [0, 1]");
    (
        p_hat,
        tv_distance_counts(&q, &reference).expect("same size"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_consistent() {
        let r = kn_extension_statistics(5, 3000, 11).unwrap();
        assert!(r.face_count_at_v.is_normalized(1e-12));
        assert!((0.0..=1.0).contains(&r.dprime_fraction.estimate));
        assert!((0.0..=1.0).contains(&r.not_in_face.estimate));
        // Two estimators of the same probability.
        let gap = (r.not_in_face.estimate - r.not_in_face_conditional.estimate).abs();
        let se = r
            .not_in_face
            .std_error
            .hypot(r.not_in_face_conditional.std_error);
        assert!(gap <= 5.0 * se + 1e-9, "{gap} vs {se}");
        assert_eq!(r, kn_extension_statistics(5, 3000, 11).unwrap());
    }

    #[test]
    fn rejects_small_n() {
        assert!(kn_extension_statistics(3, 10, 0).is_err());
        assert!(kn_extension_statistics(6, 0, 0).is_err());
    }

    #[test]
    fn stirling_tv_of_the_reference_itself_is_small() {
        // c(3,·) = 2, 3, 1 scaled by 1000.
        let (p, tv) = tv_to_stirling(3, &[2000, 3000, 1000]);
        assert!((p - 0.5).abs() < 1e-12);
        assert!(tv < 1e-12);
    }
}
