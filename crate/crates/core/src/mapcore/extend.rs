//! Growing a map of `K_{n-1}` into a map of `K_n` by adding the vertex `v_n`.
//!
//! The process, given `m' = (D', R', E')`:
//! 1. each old block `D'_i` gains one new dart `d'_i`, inserted into `π'_i`
//!    directly after a uniformly chosen old dart;
//! 2. a new block `D_n = {e_1, …, e_{n-1}}` gets a uniform full cycle `π_n`;
//! 3. a uniform bijection `g` pairs `d'_i` with `e_{g(i)}`, and `E = E' · Π (d'_i e_{g(i)})`.
//!
//! Layout: in the new block of vertex `i` the old darts keep their positions and
//! `d'_i` is the last dart. The output is therefore uniform over the maps of
//! `K_n` whose last dart in every old block is paired with `D_n`; that family
//! meets every embedding (canonical form) equally often.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::mapcore::{CombinatorialMap, Graph};
use crate::permcore::{write_cycle, Permutation};

/// The random choices of one vertex-addition step, for an input map of `K_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionChoices {
    /// For each old vertex `i`, the old dart (in the input's labelling) after
    /// which `d'_i` is inserted. Must lie in `D'_i`.
    pub insert_after: Vec<usize>,
    /// An ordering of `0..n-1`; `π_n` is the cycle `e_{o_0} → e_{o_1} → …`.
    pub new_cycle_order: Vec<usize>,
    /// `g`: old vertex `i` is joined through `e_{g[i]}`. A permutation of `0..n-1`.
    pub matching: Vec<usize>,
}

impl ExtensionChoices {
    pub fn random<R: Rng + ?Sized>(input: &Graph, rng: &mut R) -> Self {
        let old = input.vertex_count();
        let insert_after = (0..old)
            .map(|i| {
                let block = input.block(i);
                block.start + rng.random_range(0..block.len())
            })
            .collect();
        let mut new_cycle_order: Vec<usize> = (0..old).collect();
        new_cycle_order.shuffle(rng);
        let mut matching: Vec<usize> = (0..old).collect();
        matching.shuffle(rng);
        ExtensionChoices {
            insert_after,
            new_cycle_order,
            matching,
        }
    }
}

/// Where old dart `x` of `K_{n-1}` lands in `K_n`.
#[inline]
pub fn lifted_dart(old_n: usize, x: usize) -> usize {
    // old block size old_n - 1, new block size old_n
    let block = x / (old_n - 1);
    x + block
}

/// `d'_i`, the dart added to the block of old vertex `i`.
#[inline]
pub fn inserted_dart(old_n: usize, i: usize) -> usize {
    i * old_n + (old_n - 1)
}

/// Applies the vertex-addition step with explicit choices.
pub fn extend_kn_with(
    input: &CombinatorialMap,
    choices: &ExtensionChoices,
) -> Result<CombinatorialMap> {
    let graph = input.graph();
    if !graph.is_complete() {
        return Err(Error::InvalidArgument(
            "vertex addition needs a map of a complete graph".into(),
        ));
    }
    let old = graph.vertex_count();
    let n = old + 1;
    let is_perm = |v: &[usize]| {
        let mut s = v.to_vec();
        s.sort_unstable();
        s.iter().copied().eq(0..old)
    };
    if choices.insert_after.len() != old
        || choices
            .insert_after
            .iter()
            .enumerate()
            .any(|(i, &x)| !graph.block(i).contains(&x))
    {
        return Err(Error::InvalidArgument(
            "insert_after must name one dart from each old block".into(),
        ));
    }
    if !is_perm(&choices.new_cycle_order) || !is_perm(&choices.matching) {
        return Err(Error::InvalidArgument(
            "new_cycle_order and matching must be permutations of the old vertices".into(),
        ));
    }

    let total = n * (n - 1);
    let new_block_start = old * (n - 1);
    let e_dart = |j: usize| new_block_start + j;
    let r_old = input.rotation();
    let e_old = input.edge_scheme();

    let mut rotation = vec![0; total];
    let mut edges = vec![0; total];
    for x in 0..input.dart_count() {
        rotation[lifted_dart(old, x)] = lifted_dart(old, r_old.apply(x));
        edges[lifted_dart(old, x)] = lifted_dart(old, e_old.apply(x));
    }
    for (i, &x) in choices.insert_after.iter().enumerate() {
        let d = inserted_dart(old, i);
        let lx = lifted_dart(old, x);
        rotation[d] = rotation[lx];
        rotation[lx] = d;
        let e = e_dart(choices.matching[i]);
        edges[d] = e;
        edges[e] = d;
    }
    let order: Vec<usize> = choices.new_cycle_order.iter().map(|&j| e_dart(j)).collect();
    write_cycle(&mut rotation, &order);

    Ok(CombinatorialMap::new_unchecked(
        Graph::complete(n)?,
        Permutation::from_image_unchecked(rotation),
        Permutation::from_image_unchecked(edges),
    ))
}

/// Adds vertex `v_n` to a map of `K_{n-1}` with uniformly random choices.
pub fn extend_kn<R: Rng + ?Sized>(
    input: &CombinatorialMap,
    rng: &mut R,
) -> Result<CombinatorialMap> {
    let choices = ExtensionChoices::random(input.graph(), rng);
    extend_kn_with(input, &choices)
}

/// Every possible choice tuple for an input of `K_{old}`, in a fixed order.
pub fn all_extension_choices(input: &Graph) -> Vec<ExtensionChoices> {
    use crate::permcore::{class_members, CycleType};
    let old = input.vertex_count();
    let perms: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        permutations_of(old, &mut Vec::new(), &mut vec![false; old], &mut out);
        out
    };
    // Orderings that start at 0 give each full cycle exactly once.
    let cycles: Vec<Vec<usize>> = class_members(&CycleType::full_cycle(old))
        .into_iter()
        .map(|c| {
            let mut order = vec![0];
            let mut x = c.apply(0);
            while x != 0 {
                order.push(x);
                x = c.apply(x);
            }
            order
        })
        .collect();

    let mut inserts: Vec<Vec<usize>> = vec![Vec::new()];
    for i in 0..old {
        inserts = inserts
            .into_iter()
            .flat_map(|prefix| {
                input.block(i).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for insert_after in &inserts {
        for order in &cycles {
            for matching in &perms {
                out.push(ExtensionChoices {
                    insert_after: insert_after.clone(),
                    new_cycle_order: order.clone(),
                    matching: matching.clone(),
                });
            }
        }
    }
    out
}

fn permutations_of(
    n: usize,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for x in 0..n {
        if !used[x] {
            used[x] = true;
            prefix.push(x);
            permutations_of(n, prefix, used, out);
            prefix.pop();
            used[x] = false;
        }
    }
}
