use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::distributions::{CycleCountDistribution, Mass, Mode};
use crate::error::{Error, Result};
use crate::permcore::{class_size, CycleType};

/// A class function on `S_n` that is a probability distribution, stored as the
/// total mass of each conjugacy class. Classes with zero mass are not stored.
///
/// The probability of a single permutation of type `λ` is `mass(λ) / |C_λ|`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassDistribution<W: Mass = f64> {
    n: usize,
    mass: BTreeMap<CycleType, W>,
    mode: Mode,
}

impl<W: Mass> ClassDistribution<W> {
    /// Checks sizes and non-negativity. Normalisation is the caller's contract;
    /// see [`ClassDistribution::is_normalized`].
    pub fn new(n: usize, mass: BTreeMap<CycleType, W>, mode: Mode) -> Result<Self> {
        for (lambda, w) in &mass {
            if lambda.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: lambda.n(),
                });
            }
            if w.is_negative() {
                return Err(Error::InvalidArgument(format!(
                    "negative mass on class {lambda}"
                )));
            }
        }
        let mass = mass.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        Ok(ClassDistribution { n, mass, mode })
    }

    pub fn point_mass(lambda: CycleType) -> Self {
        let n = lambda.n();
        ClassDistribution {
            n,
            mass: BTreeMap::from([(lambda, W::one())]),
            mode: W::MODE,
        }
    }

    /// Normalises integer tallies.
    pub fn from_counts(n: usize, counts: &BTreeMap<CycleType, u64>, mode: Mode) -> Result<Self> {
        let total: u64 = counts.values().sum();
        if total == 0 {
            return Err(Error::InvalidArgument("no observations".into()));
        }
        let den = BigUint::from(total);
        let mass = counts
            .iter()
            .map(|(l, &c)| (l.clone(), W::from_ratio(&BigUint::from(c), &den)))
            .collect();
        ClassDistribution::new(n, mass, mode)
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

    pub fn mass(&self, lambda: &CycleType) -> W {
        self.mass.get(lambda).cloned().unwrap_or_else(W::zero)
    }

    /// Probability of one particular permutation of type `λ`.
    pub fn element_probability(&self, lambda: &CycleType) -> W {
        self.mass(lambda) / W::from_ratio(&class_size(lambda), &BigUint::from(1u32))
    }

    /// Classes with positive mass, in `CycleType` order.
    pub fn entries(&self) -> impl Iterator<Item = (&CycleType, &W)> {
        self.mass.iter()
    }

    pub fn support_len(&self) -> usize {
        self.mass.len()
    }

    pub fn total(&self) -> W {
        self.mass.values().fold(W::zero(), |acc, w| acc + w.clone())
    }

    pub fn is_normalized(&self, tolerance: f64) -> bool {
        (self.total() - W::one()).abs().to_f64() <= tolerance
    }

    /// Mass on odd permutations.
    pub fn odd_mass(&self) -> W {
        self.mass
            .iter()
            .filter(|(l, _)| l.is_odd())
            .fold(W::zero(), |acc, (_, w)| acc + w.clone())
    }

    /// Expected number of fixed points.
    pub fn expected_fixed_points(&self) -> W {
        self.mass.iter().fold(W::zero(), |acc, (l, w)| {
            acc + w.clone() * W::from_ratio(&BigUint::from(l.fixed_points()), &BigUint::from(1u32))
        })
    }

    /// Law of the number of cycles.
    pub fn cycle_count_marginal(&self) -> CycleCountDistribution<W> {
        let mut mass = vec![W::zero(); self.n];
        for (l, w) in &self.mass {
            mass[l.len() - 1] = mass[l.len() - 1].clone() + w.clone();
        }
        CycleCountDistribution::from_vec_unchecked(self.n, mass, self.mode)
    }

    pub fn to_f64(&self) -> ClassDistribution<f64> {
        ClassDistribution {
            n: self.n,
            mass: self
                .mass
                .iter()
                .map(|(l, w)| (l.clone(), w.to_f64()))
                .collect(),
            mode: self.mode,
        }
    }

    pub fn to_json_value(&self, meta: serde_json::Value) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            cycle_type: Vec<usize>,
            mass: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            exact: Option<String>,
        }
        let entries: Vec<Entry> = self
            .mass
            .iter()
            .map(|(l, w)| Entry {
                cycle_type: l.parts().to_vec(),
                mass: w.to_f64(),
                exact: w.exact_string(),
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "mode": self.mode,
            "entries": entries,
            "meta": meta,
        })
    }
}

fn check_same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::SizeMismatch {
            expected: a,
            got: b,
        });
    }
    Ok(())
}

/// Total variation distance of two class functions, computed classwise:
/// `½ Σ_λ |P(C_λ) − Q(C_λ)|`, which equals the elementwise sum because both
/// are constant on classes.
pub fn tv_distance<W: Mass>(p: &ClassDistribution<W>, q: &ClassDistribution<W>) -> Result<W> {
    check_same_n(p.n, q.n)?;
    let mut sum = W::zero();
    for (l, w) in &p.mass {
        sum = sum + (w.clone() - q.mass(l)).abs();
    }
    for (l, w) in &q.mass {
        if !p.mass.contains_key(l) {
            sum = sum + w.clone();
        }
    }
    Ok(sum / (W::one() + W::one()))
}
