use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::characters::HookIndex;
use crate::error::{Error, Result};

fn check_composition(h: HookIndex, mu: &[usize]) -> Result<()> {
    let total: usize = mu.iter().sum();
    if total != h.n() {
        return Err(Error::SizeMismatch {
            expected: h.n(),
            got: total,
        });
    }
    Ok(())
}

/// Number of index subsets of `values` whose sum is `target`.
fn subsets_with_sum(values: &[usize], target: usize) -> BigUint {
    let mut ways = vec![BigUint::zero(); target + 1];
    ways[0] = BigUint::one();
    for &x in values {
        for s in (x..=target).rev() {
            let add = ways[s - x].clone();
            ways[s] += add;
        }
    }
    ways.swap_remove(target)
}

/// `g^{(n−k,1^k)}(μ)`: fillings of the hook with `μ_i` copies of symbol `i`
/// whose rows and columns weakly increase and where each symbol occupies a
/// connected set of boxes.
///
/// Symbol 1 (the first nonzero part) holds the corner and may run along both
/// arms. Every later symbol sits wholly in the row or wholly in the column, so
/// a filling is fixed by how symbol 1 splits and which later symbols go down.
pub fn g_count(h: HookIndex, mu: &[usize]) -> Result<BigUint> {
    check_composition(h, mu)?;
    let parts: Vec<usize> = mu.iter().copied().filter(|&p| p > 0).collect();
    let Some((&first, rest)) = parts.split_first() else {
        return Ok(BigUint::zero());
    };
    let (a, b) = (h.arm(), h.leg());
    let mut total = BigUint::zero();
    for down in 0..first.min(b + 1) {
        let across = first - down;
        if across > a {
            continue;
        }
        total += subsets_with_sum(rest, b - down);
    }
    Ok(total)
}

/// The over-count used in the bound on `g` for `μ_1 = 1` and even `n`, `k`:
/// with `S = {μ_2, …, μ_m}` padded by zeros to `n/2` entries, the number of
/// `k/2`-element subsets of `S` (as positions) whose values sum to `k`.
pub fn s_subset_count(h: HookIndex, mu: &[usize]) -> Result<BigUint> {
    check_composition(h, mu)?;
    let (n, k) = (h.n(), h.k());
    if n % 2 == 1 || k % 2 == 1 || mu.first() != Some(&1) || mu.len() - 1 > n / 2 {
        return Err(Error::InvalidArgument(
            "the padded-multiset count needs even n and k, μ_1 = 1 and at most n/2 further parts"
                .into(),
        ));
    }
    let mut s: Vec<usize> = mu[1..].to_vec();
    s.resize(n / 2, 0);
    // ways[j][t]: j chosen positions summing to t.
    let (want, target) = (k / 2, k);
    let mut ways = vec![vec![BigUint::zero(); target + 1]; want + 1];
    ways[0][0] = BigUint::one();
    for &x in &s {
        for j in (1..=want).rev() {
            for t in (x..=target).rev() {
                let add = ways[j - 1][t - x].clone();
                ways[j][t] += add;
            }
        }
    }
    Ok(ways[want][target].clone())
}
