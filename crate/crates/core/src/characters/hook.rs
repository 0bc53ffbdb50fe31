use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{binomial, CycleType};

/// The hook shape `(n − k, 1^k)` of size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HookIndex {
    n: usize,
    k: usize,
}

impl HookIndex {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "hook (n − k, 1^k) needs 0 ≤ k < n, got n = {n}, k = {k}"
            )));
        }
        Ok(HookIndex { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Length of the first row, `n − k`.
    pub fn arm(&self) -> usize {
        self.n - self.k
    }

    /// Number of boxes below the corner, `k`.
    pub fn leg(&self) -> usize {
        self.k
    }

    /// The conjugate hook `(k + 1, 1^{n−k−1})`.
    pub fn conjugate(&self) -> HookIndex {
        HookIndex {
            n: self.n,
            k: self.n - 1 - self.k,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    pub fn is_sign(&self) -> bool {
        self.k + 1 == self.n
    }
}

impl fmt::Display for HookIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            0 => write!(f, "({})", self.n),
            k => write!(f, "({},1^{})", self.n - k, k),
        }
    }
}

/// `f^{(n−k,1^k)} = C(n−1, k)`.
pub fn hook_dimension(h: HookIndex) -> BigUint {
    binomial(h.n - 1, h.k)
}

/// Memoised Murnaghan–Nakayama evaluation on hooks. The table may be reused
/// across calls; entries are keyed by the remaining hook and the remaining
/// parts, which are always processed largest first.
#[derive(Debug, Default)]
pub struct HookCharacterTable {
    memo: HashMap<(usize, usize, Vec<usize>), BigInt>,
}

impl HookCharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^{(n−k,1^k)}(λ)`.
    pub fn character(&mut self, h: HookIndex, lambda: &CycleType) -> Result<BigInt> {
        if lambda.n() != h.n {
            return Err(Error::SizeMismatch {
                expected: h.n,
                got: lambda.n(),
            });
        }
        Ok(self.eval(h.arm(), h.leg(), lambda.parts()))
    }

    /// `χ^{(n−k,1^k)}` on a composition of `n`: the parts are taken in the given
    /// order. The value does not depend on the order.
    pub fn character_of_composition(&mut self, h: HookIndex, parts: &[usize]) -> Result<BigInt> {
        let total: usize = parts.iter().sum();
        if total != h.n || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not a composition of {}",
                h.n
            )));
        }
        Ok(self.eval(h.arm(), h.leg(), parts))
    }

    /// Character of the hook with first row `a ≥ 1` and `b` boxes below it, on
    /// the cycle type `parts` (any order, sizes summing to `a + b`).
    fn eval(&mut self, a: usize, b: usize, parts: &[usize]) -> BigInt {
        let Some((&t, rest)) = parts.split_first() else {
            return BigInt::one();
        };
        let key = (a, b, parts.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut value = BigInt::zero();
        if t == a + b {
            // The whole hook is the strip; its height is the leg.
            value = if rest.is_empty() {
                sign(b)
            } else {
                BigInt::zero()
            };
        } else {
            if t <= b {
                value += sign(t - 1) * self.eval(a, b - t, rest);
            }
            if t < a {
                value += self.eval(a - t, b, rest);
            }
        }
        self.memo.insert(key, value.clone());
        value
    }
}

fn sign(height: usize) -> BigInt {
    if height.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `χ^{(n−k,1^k)}(λ)` with a fresh memo table.
pub fn hook_character(h: HookIndex, lambda: &CycleType) -> Result<BigInt> {
    HookCharacterTable::new().character(h, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{class_size, factorial, partitions};

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn index_validation() {
        assert!(HookIndex::new(4, 4).is_err());
        assert!(HookIndex::new(0, 0).is_err());
        let h = HookIndex::new(5, 2).unwrap();
        assert_eq!((h.arm(), h.leg()), (3, 2));
        assert_eq!(h.conjugate(), HookIndex::new(5, 2).unwrap());
        assert!(HookIndex::new(5, 0).unwrap().is_trivial());
        assert!(HookIndex::new(5, 4).unwrap().is_sign());
        assert_eq!(HookIndex::new(12, 4).unwrap().to_string(), "(8,1^4)");
    }

    #[test]
    fn dimensions() {
        assert_eq!(
            hook_dimension(HookIndex::new(7, 1).unwrap()),
            BigUint::from(6u32)
        );
        assert_eq!(
            hook_dimension(HookIndex::new(7, 0).unwrap()),
            BigUint::one()
        );
        for n in 1..=20 {
            let total: BigUint = (0..n)
                .map(|k| hook_dimension(HookIndex::new(n, k).unwrap()))
                .sum();
            assert_eq!(total, BigUint::one() << (n - 1));
        }
    }

    #[test]
    fn full_cycle_values() {
        for n in 1..10 {
            for k in 0..n {
                let h = HookIndex::new(n, k).unwrap();
                let expected = if k % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(
                    hook_character(h, &CycleType::full_cycle(n)).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn standard_representation_is_fixed_points_minus_one() {
        for n in 2..10 {
            let h = HookIndex::new(n, 1).unwrap();
            for l in partitions(n) {
                let expected = int(l.fixed_points() as i64 - 1);
                assert_eq!(hook_character(h, &l).unwrap(), expected, "{l}");
            }
        }
    }

    #[test]
    fn identity_gives_the_dimension() {
        for n in 1..12 {
            for k in 0..n {
                let h = HookIndex::new(n, k).unwrap();
                assert_eq!(
                    hook_character(h, &CycleType::identity(n)).unwrap(),
                    BigInt::from(hook_dimension(h))
                );
            }
        }
    }

    #[test]
    fn first_orthogonality() {
        for n in 2..=8 {
            let mut table = HookCharacterTable::new();
            let classes = partitions(n);
            for k1 in 0..n {
                for k2 in 0..n {
                    let (h1, h2) = (
                        HookIndex::new(n, k1).unwrap(),
                        HookIndex::new(n, k2).unwrap(),
                    );
                    let sum: BigInt = classes
                        .iter()
                        .map(|l| {
                            BigInt::from(class_size(l))
                                * table.character(h1, l).unwrap()
                                * table.character(h2, l).unwrap()
                        })
                        .sum();
                    let expected = if k1 == k2 {
                        BigInt::from(factorial(n))
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(sum, expected, "n = {n}, k = {k1}, {k2}");
                }
            }
        }
    }

    #[test]
    fn size_mismatch() {
        let h = HookIndex::new(4, 1).unwrap();
        assert!(hook_character(h, &CycleType::full_cycle(5)).is_err());
    }
}
