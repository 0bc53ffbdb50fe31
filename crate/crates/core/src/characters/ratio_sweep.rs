use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

use crate::characters::{hook_dimension, HookCharacterTable, HookIndex};
use crate::error::{Error, Result};
use crate::permcore::{partitions, CycleType};

/// One `(n, k, λ)` instance of `|χ|/f ≤ max(1, ℓ)/(n − 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HookRatioRow {
    pub hook: HookIndex,
    pub lambda: CycleType,
    pub character: BigInt,
    pub dimension: BigUint,
    /// `|χ|/f`.
    pub ratio: BigRational,
    /// `max(1, ℓ)/(n − 1)`.
    pub bound: BigRational,
    pub holds: bool,
}

impl HookRatioRow {
    pub const CSV_HEADER: [&'static str; 8] =
        ["n", "k", "lambda", "chi", "f", "ratio", "bound", "holds"];

    pub fn csv_record(&self) -> [String; 8] {
        [
            self.hook.n().to_string(),
            self.hook.k().to_string(),
            self.lambda.to_string(),
            self.character.to_string(),
            self.dimension.to_string(),
            self.ratio.to_string(),
            self.bound.to_string(),
            self.holds.to_string(),
        ]
    }
}

/// Summary of a full sweep over `λ ⊢ n` and `k ∈ {1, …, n − 2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HookRatioReport {
    pub n: usize,
    pub rows: Vec<HookRatioRow>,
    /// Largest `ratio / bound` seen; at most 1 when nothing is violated.
    pub max_ratio_over_bound: BigRational,
}

impl HookRatioReport {
    pub fn violations(&self) -> impl Iterator<Item = &HookRatioRow> {
        self.rows.iter().filter(|r| !r.holds)
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

/// Checks every `λ ⊢ n` and `k ∈ {1, …, n − 2}` in exact arithmetic.
pub fn lemma1_check(n: usize) -> Result<HookRatioReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "the sweep needs n ≥ 3, got {n}"
        )));
    }
    let mut table = HookCharacterTable::new();
    let mut rows = Vec::new();
    let mut worst = BigRational::from_integer(big(0));
    for lambda in partitions(n) {
        let l = lambda.fixed_points().max(1);
        let bound = BigRational::new(big(l), big(n - 1));
        for k in 1..=n - 2 {
            let hook = HookIndex::new(n, k)?;
            let character = table.character(hook, &lambda)?;
            let dimension = hook_dimension(hook);
            let ratio = BigRational::new(character.abs(), BigInt::from(dimension.clone()));
            let relative = &ratio / &bound;
            if relative > worst {
                worst = relative;
            }
            rows.push(HookRatioRow {
                hook,
                lambda: lambda.clone(),
                holds: ratio <= bound,
                character,
                dimension,
                ratio,
                bound: bound.clone(),
            });
        }
    }
    Ok(HookRatioReport {
        n,
        rows,
        max_ratio_over_bound: worst,
    })
}
