use num_bigint::BigUint;
use serde::Serialize;

use crate::distributions::{Mass, Mode};
use crate::error::{Error, Result};

/// A distribution on the number of cycles `k ∈ {1, …, n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleCountDistribution<W: Mass = f64> {
    n: usize,
    /// `mass[k - 1]`.
    mass: Vec<W>,
    mode: Mode,
}

impl<W: Mass> CycleCountDistribution<W> {
    pub fn new(n: usize, mass: Vec<W>, mode: Mode) -> Result<Self> {
        if mass.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: mass.len(),
            });
        }
        if let Some(k) = mass.iter().position(|w| w.is_negative()) {
            return Err(Error::InvalidArgument(format!(
                "negative mass at k = {}",
                k + 1
            )));
        }
        Ok(CycleCountDistribution { n, mass, mode })
    }

    pub(crate) fn from_vec_unchecked(n: usize, mass: Vec<W>, mode: Mode) -> Self {
        CycleCountDistribution { n, mass, mode }
    }

    /// Normalises a histogram; `counts[k - 1]` observations of `k` cycles.
    pub fn from_counts(n: usize, counts: &[u64], mode: Mode) -> Result<Self> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::InvalidArgument("no observations".into()));
        }
        let den = BigUint::from(total);
        let mass = counts
            .iter()
            .map(|&c| W::from_ratio(&BigUint::from(c), &den))
            .collect();
        CycleCountDistribution::new(n, mass, mode)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// Mass at `k` cycles; zero outside `1..=n`.
    pub fn mass(&self, k: usize) -> W {
        if k == 0 || k > self.n {
            return W::zero();
        }
        self.mass[k - 1].clone()
    }

    pub fn masses(&self) -> &[W] {
        &self.mass
    }

    pub fn total(&self) -> W {
        self.mass.iter().fold(W::zero(), |acc, w| acc + w.clone())
    }

    pub fn is_normalized(&self, tolerance: f64) -> bool {
        (self.total() - W::one()).abs().to_f64() <= tolerance
    }

    pub fn mean(&self) -> W {
        self.mass.iter().enumerate().fold(W::zero(), |acc, (i, w)| {
            acc + w.clone() * W::from_ratio(&BigUint::from(i + 1), &BigUint::from(1u32))
        })
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&k| !self.mass[k - 1].is_zero())
            .collect()
    }

    pub fn to_f64(&self) -> CycleCountDistribution<f64> {
        CycleCountDistribution {
            n: self.n,
            mass: self.mass.iter().map(Mass::to_f64).collect(),
            mode: self.mode,
        }
    }

    pub fn to_json_value(&self, meta: serde_json::Value) -> serde_json::Value {
        let mut body = self.body();
        body["meta"] = meta;
        body
    }

    fn body(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            k: usize,
            mass: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            exact: Option<String>,
        }
        let entries: Vec<Entry> = self
            .mass
            .iter()
            .enumerate()
            .map(|(i, w)| Entry {
                k: i + 1,
                mass: w.to_f64(),
                exact: w.exact_string(),
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "mode": self.mode,
            "entries": entries,
        })
    }
}

impl<W: Mass> Serialize for CycleCountDistribution<W> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.body().serialize(serializer)
    }
}

/// `½ Σ_k |P(k) − Q(k)|`.
pub fn tv_distance_counts<W: Mass>(
    p: &CycleCountDistribution<W>,
    q: &CycleCountDistribution<W>,
) -> Result<W> {
    if p.n != q.n {
        return Err(Error::SizeMismatch {
            expected: p.n,
            got: q.n,
        });
    }
    let sum = p
        .mass
        .iter()
        .zip(&q.mass)
        .fold(W::zero(), |acc, (a, b)| acc + (a.clone() - b.clone()).abs());
    Ok(sum / (W::one() + W::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::ratio;
    use num_rational::BigRational;

    #[test]
    fn counts_normalise() {
        let d: CycleCountDistribution<BigRational> =
            CycleCountDistribution::from_counts(3, &[1, 2, 1], Mode::Exact).unwrap();
        assert_eq!(d.total(), ratio(1, 1));
        assert_eq!(d.mass(2), ratio(1, 2));
        assert_eq!(d.mass(0), ratio(0, 1));
        assert_eq!(d.mean(), ratio(2, 1));
        assert_eq!(d.support(), vec![1, 2, 3]);
    }

    #[test]
    fn tv_between_point_masses() {
        let p: CycleCountDistribution =
            CycleCountDistribution::from_counts(3, &[1, 0, 0], Mode::Float).unwrap();
        let q: CycleCountDistribution =
            CycleCountDistribution::from_counts(3, &[0, 0, 4], Mode::Float).unwrap();
        assert_eq!(tv_distance_counts(&p, &q).unwrap(), 1.0);
        assert_eq!(tv_distance_counts(&p, &p).unwrap(), 0.0);
        let r: CycleCountDistribution =
            CycleCountDistribution::from_counts(4, &[1, 0, 0, 0], Mode::Float).unwrap();
        assert!(tv_distance_counts(&p, &r).is_err());
    }
}
