use std::collections::BTreeMap;

use serde::Serialize;

use crate::distributions::sampling::{bootstrap_counts, run_sharded, MeanAccumulator};
use crate::distributions::{
    theorem2_rhs, tv_to_uniform_parity, ClassDistribution, EmpiricalReport, Mode,
};
use crate::error::{Error, Result};
use crate::mapcore::{random_map, Graph};
use crate::permcore::CycleType;

/// Monte Carlo estimate of `L_v(G)` and the quantities it is compared with.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalFaceReport {
    pub vertex: usize,
    pub degree: usize,
    pub distribution: ClassDistribution<f64>,
    pub counts: BTreeMap<CycleType, u64>,
    /// Empirical `Pr[ω_v odd]`.
    pub p_hat: EmpiricalReport,
    /// `‖L_v − U_{D_v,p̂}‖` with a bootstrap interval that resamples `p̂` too.
    pub tv: EmpiricalReport,
    /// Estimate of `E[F_{G−v}]`.
    pub faces_without_v: EmpiricalReport,
    /// `2E[F_{G−v}]/√(d−1)` at the estimate above; `None` when `d < 2`.
    pub squared_tv_bound: Option<f64>,
}

#[derive(Default)]
struct Shard {
    counts: BTreeMap<CycleType, u64>,
    faces: MeanAccumulator,
}

/// Samples `samples` uniform maps of `G` and tallies the class of `ω_v`.
pub fn local_face_distribution(
    graph: &Graph,
    v: usize,
    samples: u64,
    seed: u64,
) -> Result<LocalFaceReport> {
    graph.check_vertex(v)?;
    let degree = graph.degree(v);
    if degree == 0 {
        return Err(Error::InvalidArgument(format!(
            "vertex {} has degree 0",
            v + 1
        )));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample is needed".into(),
        ));
    }
    // Fail fast on graphs the sampler refuses.
    random_map(graph, &mut crate::permcore::SeededRng::new(seed, 0))?;

    let shards = run_sharded(samples, seed, Shard::default, |rng, shard| {
        let m = random_map(graph, rng).expect("graph checked");
        let omega = m.omega(v).expect("vertex checked");
        *shard.counts.entry(omega.cycle_type()).or_insert(0) += 1;
        let rest = m.remove_vertex(v).expect("vertex checked");
        shard.faces.push(rest.face_count() as f64);
    });
    let mut counts = BTreeMap::new();
    let mut faces = MeanAccumulator::default();
    for shard in shards {
        for (l, c) in shard.counts {
            *counts.entry(l).or_insert(0) += c;
        }
        faces.merge(&shard.faces);
    }
    let distribution = ClassDistribution::from_counts(degree, &counts, Mode::Empirical)?;
    let p_hat = parity_report(&counts, samples, seed);
    let tv = tv_report(&counts, degree, samples, seed)?;
    let faces_without_v = EmpiricalReport::from_mean(&faces, seed);
    let squared_tv_bound = (degree >= 2).then(|| theorem2_rhs(faces_without_v.estimate, degree));
    Ok(LocalFaceReport {
        vertex: v,
        degree,
        distribution,
        counts,
        p_hat,
        tv,
        faces_without_v,
        squared_tv_bound,
    })
}

fn parity_report(counts: &BTreeMap<CycleType, u64>, samples: u64, seed: u64) -> EmpiricalReport {
    let odd: u64 = counts
        .iter()
        .filter(|(l, _)| l.is_odd())
        .map(|(_, c)| c)
        .sum();
    // Bernoulli sums reconstructed from the tally.
    let acc = MeanAccumulator {
        count: samples,
        sum: odd as f64,
        sum_sq: odd as f64,
    };
    EmpiricalReport::from_mean(&acc, seed)
}

/// TV between an empirical class tally and `U_{[d],p̂}` with `p̂` taken from the
/// same tally; the bootstrap re-estimates `p̂` on each resample.
pub(crate) fn tv_report(
    counts: &BTreeMap<CycleType, u64>,
    degree: usize,
    samples: u64,
    seed: u64,
) -> Result<EmpiricalReport> {
    if degree < 2 {
        return Ok(EmpiricalReport {
            samples,
            estimate: 0.0,
            std_error: 0.0,
            seed,
            ci95: Some([0.0, 0.0]),
        });
    }
    let classes: Vec<CycleType> = counts.keys().cloned().collect();
    let statistic = |tally: &[u64]| -> f64 {
        let total: u64 = tally.iter().sum();
        let odd: u64 = classes
            .iter()
            .zip(tally)
            .filter(|(l, _)| l.is_odd())
            .map(|(_, c)| c)
            .sum();
        let mass: BTreeMap<CycleType, f64> = classes
            .iter()
            .zip(tally)
            .map(|(l, &c)| (l.clone(), c as f64 / total as f64))
            .collect();
        let d = ClassDistribution::new(degree, mass, Mode::Empirical).expect("valid tally");
        tv_to_uniform_parity(&d, odd as f64 / total as f64).expect("p̂ in [0, 1]")
    };
    let tally: Vec<u64> = counts.values().copied().collect();
    let estimate = statistic(&tally);
    let (sd, ci) = bootstrap_counts(&tally, seed, statistic);
    Ok(EmpiricalReport {
        samples,
        estimate,
        std_error: sd,
        seed,
        ci95: Some(ci),
    })
}

/// JSON body shared by the CLI and tests.
impl LocalFaceReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row<'a> {
            cycle_type: &'a [usize],
            count: u64,
            mass: f64,
        }
        let rows: Vec<Row> = self
            .counts
            .iter()
            .map(|(l, &c)| Row {
                cycle_type: l.parts(),
                count: c,
                mass: self.distribution.mass(l),
            })
            .collect();
        serde_json::json!({
            "vertex": self.vertex + 1,
            "degree": self.degree,
            "entries": rows,
            "p_hat": self.p_hat,
            "tv": self.tv,
            "faces_without_v": self.faces_without_v,
            "squared_tv_bound": self.squared_tv_bound,
        })
    }
}
