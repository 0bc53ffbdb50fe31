use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::permcore::CycleType;

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Unsigned Stirling numbers of the first kind `c(n, k)` for `k = 0..=n`.
pub fn stirling_first_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let mut v = row[k - 1].clone();
            if k < m {
                v += &row[k] * (m - 1);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// `c(n, k)`: the number of permutations of `n` symbols with exactly `k` cycles.
/// Zero outside `0 ≤ k ≤ n` (and `c(0, 0) = 1`).
pub fn stirling_first(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling_first_row(n).swap_remove(k)
}

/// `z_λ = Π_i i^{m_i} m_i!`, the centraliser order; `|C_λ| = n!/z_λ`.
pub fn centralizer_order(lambda: &CycleType) -> BigUint {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (part, mult)| {
            acc * BigUint::from(part).pow(mult as u32) * factorial(mult)
        })
}

pub fn class_size(lambda: &CycleType) -> BigUint {
    factorial(lambda.n()) / centralizer_order(lambda)
}
