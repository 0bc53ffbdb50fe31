use std::ops::Range;

use crate::error::{Error, Result};

/// A simple graph on vertices `0..n` together with its dart layout: vertex `i`
/// owns the block of `deg(i)` consecutive darts starting at `offset(i)`, and
/// blocks follow vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted, each `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    offsets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list; edges may be given in either orientation
    /// and any order. Loops and repeated edges are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) refers to a vertex outside 0..{vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut degrees = vec![0; vertex_count];
        for &(a, b) in &normalized {
            degrees[a] += 1;
            degrees[b] += 1;
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        let mut acc = 0;
        for &d in &degrees {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        Ok(Graph {
            vertex_count,
            edges: normalized,
            degrees,
            offsets,
        })
    }

    /// `K_n`: all `n(n-1)/2` edges, every block of size `n-1`.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!(
                "complete graph needs at least 2 vertices, got {n}"
            )));
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::new(n, &edges)
    }

    /// The cycle graph `C_n` (n ≥ 3).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "cycle graph needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn dart_count(&self) -> usize {
        self.offsets[self.vertex_count]
    }

    /// The dart block `D_v`.
    pub fn block(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// Owning vertex of every dart.
    pub fn dart_owners(&self) -> Vec<usize> {
        let mut owner = Vec::with_capacity(self.dart_count());
        for (v, &d) in self.degrees.iter().enumerate() {
            owner.extend(std::iter::repeat_n(v, d));
        }
        owner
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::NoSuchVertex {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Whether this is structurally `K_n`: simple with all degrees `n-1`.
    pub fn is_complete(&self) -> bool {
        self.vertex_count >= 2 && self.degrees.iter().all(|&d| d + 1 == self.vertex_count)
    }

    /// `G − {v}`; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Graph::new(self.vertex_count - 1, &edges)
    }

    /// Number of connected components among vertices of positive degree.
    pub fn nontrivial_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..self.vertex_count)
            .filter(|&v| self.degrees[v] > 0 && find(&mut parent, v) == v)
            .count()
    }

    /// Number of vertices of positive degree.
    pub fn nonisolated_vertices(&self) -> usize {
        self.degrees.iter().filter(|&&d| d > 0).count()
    }
}
