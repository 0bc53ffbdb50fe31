use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapcore::{CombinatorialMap, Graph};
use crate::permcore::{factorial, write_cycle, Permutation};

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Which edge schemes an enumeration visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeSchemeMode {
    /// Only the canonical scheme: one map per embedding.
    FixedCanonical,
    /// Every scheme: each embedding repeats `|𝓔(G)|` times.
    All,
}

/// A set of maps of one graph to enumerate, with a size cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationScope {
    pub graph: Graph,
    pub mode: EdgeSchemeMode,
    pub cap: u64,
}

impl EnumerationScope {
    pub fn new(graph: Graph, mode: EdgeSchemeMode) -> Self {
        EnumerationScope {
            graph,
            mode,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// `|𝓡(G)| = Π_v (deg v − 1)!`.
    pub fn rotation_count(&self) -> BigUint {
        self.graph
            .degrees()
            .iter()
            .map(|&d| factorial(d.saturating_sub(1)))
            .product()
    }

    /// `|𝓔(G)| = Π_v (deg v)!`: each block is matched to its vertex's edges.
    pub fn edge_scheme_count(&self) -> BigUint {
        self.graph.degrees().iter().map(|&d| factorial(d)).product()
    }

    pub fn predicted_count(&self) -> BigUint {
        match self.mode {
            EdgeSchemeMode::FixedCanonical => self.rotation_count(),
            EdgeSchemeMode::All => self.rotation_count() * self.edge_scheme_count(),
        }
    }

    /// The predicted count, or a capacity error if it exceeds the cap.
    pub fn checked_count(&self) -> Result<u64> {
        let predicted = self.predicted_count();
        match predicted.to_u64() {
            Some(c) if c <= self.cap => Ok(c),
            _ => Err(Error::Capacity {
                what: format!(
                    "maps of a graph with {} vertices and {} edges",
                    self.graph.vertex_count(),
                    self.graph.edge_count()
                ),
                predicted: predicted.to_string(),
                cap: self.cap,
            }),
        }
    }
}

/// Every ordering of `items`, in lexicographic order of positions.
fn orderings(items: &[usize]) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut items.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Deterministic stream over a scope. Edge schemes form the outer odometer and
/// rotations the inner one, so the canonical scheme's maps come first; in both
/// odometers the last vertex turns fastest.
#[derive(Clone, Debug)]
pub struct MapIter {
    graph: Graph,
    /// Per vertex: cycle orders of its block, each starting at the block's first dart.
    rotations: Vec<Vec<Vec<usize>>>,
    /// Per vertex: bijections from neighbour rank to dart.
    schemes: Vec<Vec<Vec<usize>>>,
    /// `(endpoint a, rank of b at a, endpoint b, rank of a at b)` per edge.
    edge_slots: Vec<(usize, usize, usize, usize)>,
    rot_index: Vec<usize>,
    scheme_index: Vec<usize>,
    remaining: u64,
}

impl MapIter {
    fn new(scope: &EnumerationScope) -> Result<Self> {
        let remaining = scope.checked_count()?;
        let graph = scope.graph.clone();
        let n = graph.vertex_count();
        let rotations = (0..n)
            .map(|v| {
                let block: Vec<usize> = graph.block(v).collect();
                match block.split_first() {
                    None => vec![Vec::new()],
                    Some((&first, rest)) => orderings(rest)
                        .into_iter()
                        .map(|mut o| {
                            o.insert(0, first);
                            o
                        })
                        .collect(),
                }
            })
            .collect();
        let schemes = (0..n)
            .map(|v| {
                let block: Vec<usize> = graph.block(v).collect();
                match scope.mode {
                    EdgeSchemeMode::FixedCanonical => vec![block],
                    EdgeSchemeMode::All => orderings(&block),
                }
            })
            .collect();
        let mut next_rank = vec![0; n];
        let edge_slots = graph
            .edges()
            .iter()
            .map(|&(a, b)| {
                let slot = (a, next_rank[a], b, next_rank[b]);
                next_rank[a] += 1;
                next_rank[b] += 1;
                slot
            })
            .collect();
        Ok(MapIter {
            graph,
            rotations,
            schemes,
            edge_slots,
            rot_index: vec![0; n],
            scheme_index: vec![0; n],
            remaining,
        })
    }

    fn current(&self) -> CombinatorialMap {
        let darts = self.graph.dart_count();
        let mut rotation: Vec<usize> = (0..darts).collect();
        for (v, &i) in self.rot_index.iter().enumerate() {
            let order = &self.rotations[v][i];
            if !order.is_empty() {
                write_cycle(&mut rotation, order);
            }
        }
        let mut edges = vec![0; darts];
        for &(a, ra, b, rb) in &self.edge_slots {
            let x = self.schemes[a][self.scheme_index[a]][ra];
            let y = self.schemes[b][self.scheme_index[b]][rb];
            edges[x] = y;
            edges[y] = x;
        }
        CombinatorialMap::new_unchecked(
            self.graph.clone(),
            Permutation::from_image_unchecked(rotation),
            Permutation::from_image_unchecked(edges),
        )
    }

    fn advance(&mut self) {
        if bump(&mut self.rot_index, &self.rotations) {
            return;
        }
        bump(&mut self.scheme_index, &self.schemes);
    }
}

/// Odometer step; returns `false` when it wrapped around.
fn bump(index: &mut [usize], choices: &[Vec<Vec<usize>>]) -> bool {
    for v in (0..index.len()).rev() {
        index[v] += 1;
        if index[v] < choices[v].len() {
            return true;
        }
        index[v] = 0;
    }
    false
}

impl Iterator for MapIter {
    type Item = CombinatorialMap;

    fn next(&mut self) -> Option<CombinatorialMap> {
        if self.remaining == 0 {
            return None;
        }
        let map = self.current();
        self.remaining -= 1;
        self.advance();
        Some(map)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for MapIter {}

/// Streams every map of the scope exactly once, or refuses with the predicted
/// count when it exceeds the cap.
pub fn enumerate_maps(scope: &EnumerationScope) -> Result<MapIter> {
    MapIter::new(scope)
}

/// `Π (n−2)!^n`-style count as a `BigUint`, for messages.
pub fn kn_embedding_count(n: usize) -> BigUint {
    if n < 2 {
        return BigUint::one();
    }
    factorial(n - 2).pow(n as u32)
}
