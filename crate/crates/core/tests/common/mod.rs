//! Oracles shared by the integration targets.
#![allow(dead_code)]

use facedist::characters::HookIndex;
use num_bigint::BigInt;
use num_traits::Zero;

/// Murnaghan–Nakayama on an arbitrary shape through beta-numbers: a rim hook
/// of length `t` is a bead sliding from `b` to a free `b − t`, with sign set
/// by the beads it jumps over.
pub fn mn_beta(beads: &mut Vec<usize>, mu: &[usize]) -> BigInt {
    let Some((&t, rest)) = mu.split_first() else {
        return BigInt::from(1);
    };
    let mut total = BigInt::zero();
    for i in 0..beads.len() {
        let b = beads[i];
        if b < t || beads.contains(&(b - t)) {
            continue;
        }
        let jumped = beads.iter().filter(|&&x| x > b - t && x < b).count();
        beads[i] = b - t;
        let sub = mn_beta(beads, rest);
        beads[i] = b;
        if jumped % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    total
}

pub fn character_by_beads(shape: &[usize], mu: &[usize]) -> BigInt {
    let len = shape.len();
    let mut beads: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    mn_beta(&mut beads, mu)
}

pub fn hook_shape(h: HookIndex) -> Vec<usize> {
    let mut s = vec![h.arm()];
    s.extend(std::iter::repeat_n(1, h.leg()));
    s
}
