use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Scalar used for probability masses: `f64` for floating/empirical work,
/// `BigRational` where results are claimed exact.
pub trait Mass: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self;
    fn to_f64(&self) -> f64;
    /// Exact rendering for rational masses, `None` for floats.
    fn exact_string(&self) -> Option<String>;
    const MODE: Mode;
}

impl Mass for f64 {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        ToPrimitive::to_f64(&BigRational::new(
            BigInt::from(num.clone()),
            BigInt::from(den.clone()),
        ))
        .unwrap_or(0.0)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn exact_string(&self) -> Option<String> {
        None
    }

    const MODE: Mode = Mode::Float;
}

impl Mass for BigRational {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn exact_string(&self) -> Option<String> {
        Some(self.to_string())
    }

    const MODE: Mode = Mode::Exact;
}

/// How a distribution was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
    Empirical,
}

/// Exact rational `num/den` from machine integers.
pub fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
