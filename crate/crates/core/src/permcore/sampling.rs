use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::permcore::{CycleType, Permutation};

/// Writes `order` as a single cycle `order[0] → order[1] → … → order[0]` into `image`.
pub(crate) fn write_cycle(image: &mut [usize], order: &[usize]) {
    for (i, &x) in order.iter().enumerate() {
        image[x] = order[(i + 1) % order.len()];
    }
}

/// Uniform full cycle on `points` (as an ordering); each cycle arises from
/// exactly `points.len()` orderings.
pub fn random_cycle_order<R: Rng + ?Sized>(points: &[usize], rng: &mut R) -> Vec<usize> {
    let mut order = points.to_vec();
    order.shuffle(rng);
    order
}

/// Uniform `n`-cycle on `{0, …, n-1}`.
pub fn random_full_cycle<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::InvalidArgument("full cycle on an empty set".into()));
    }
    let order = random_cycle_order(&(0..n).collect::<Vec<_>>(), rng);
    let mut image = vec![0; n];
    write_cycle(&mut image, &order);
    Ok(Permutation::from_image_unchecked(image))
}

/// Uniform member of `C_λ` on `{0, …, n-1}`: a uniform ordering poured into a
/// fixed cycle template. Every class member is hit by exactly `z_λ` orderings.
pub fn random_in_class<R: Rng + ?Sized>(
    lambda: &CycleType,
    n: usize,
    rng: &mut R,
) -> Result<Permutation> {
    if lambda.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: lambda.n(),
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    Ok(fill_template(lambda, &order))
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::from_image_unchecked(image)
}

/// The fixed representative of `C_λ`: cycles `(0 … λ₁-1)(λ₁ …)…` in order.
pub fn class_representative(lambda: &CycleType) -> Permutation {
    let order: Vec<usize> = (0..lambda.n()).collect();
    fill_template(lambda, &order)
}

fn fill_template(lambda: &CycleType, order: &[usize]) -> Permutation {
    let mut image = vec![0; lambda.n()];
    let mut start = 0;
    for &part in lambda.parts() {
        write_cycle(&mut image, &order[start..start + part]);
        start += part;
    }
    Permutation::from_image_unchecked(image)
}

/// Calls `f` on the image array of every member of `C_λ`, each exactly once,
/// in a deterministic order.
///
/// The smallest unused symbol always opens the next cycle; the cycle length is
/// chosen among the remaining distinct part sizes and the rest of the cycle is
/// an arrangement of unused symbols.
pub fn for_each_in_class<F: FnMut(&[usize])>(lambda: &CycleType, mut f: F) {
    let n = lambda.n();
    let mut lengths: Vec<(usize, usize)> = lambda.multiplicities();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut cycle = Vec::with_capacity(n);
    open_cycle(&mut lengths, &mut image, &mut used, &mut cycle, &mut f);
}

fn open_cycle<F: FnMut(&[usize])>(
    lengths: &mut [(usize, usize)],
    image: &mut [usize],
    used: &mut [bool],
    cycle: &mut Vec<usize>,
    f: &mut F,
) {
    let Some(start) = used.iter().position(|u| !u) else {
        f(image);
        return;
    };
    for li in 0..lengths.len() {
        if lengths[li].1 == 0 {
            continue;
        }
        lengths[li].1 -= 1;
        let len = lengths[li].0;
        used[start] = true;
        cycle.push(start);
        grow_cycle(len, lengths, image, used, cycle, f);
        cycle.pop();
        used[start] = false;
        lengths[li].1 += 1;
    }
}

fn grow_cycle<F: FnMut(&[usize])>(
    len: usize,
    lengths: &mut [(usize, usize)],
    image: &mut [usize],
    used: &mut [bool],
    cycle: &mut Vec<usize>,
    f: &mut F,
) {
    // `cycle` holds only the cycle under construction.
    if cycle.len() == len {
        write_cycle(image, cycle);
        let saved = std::mem::take(cycle);
        open_cycle(lengths, image, used, cycle, f);
        *cycle = saved;
        return;
    }
    for x in 0..used.len() {
        if used[x] {
            continue;
        }
        used[x] = true;
        cycle.push(x);
        grow_cycle(len, lengths, image, used, cycle, f);
        cycle.pop();
        used[x] = false;
    }
}

/// Every member of `C_λ` as a `Permutation`. Intended for small classes.
pub fn class_members(lambda: &CycleType) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_in_class(lambda, |img| {
        out.push(Permutation::from_image_unchecked(img.to_vec()))
    });
    out
}
