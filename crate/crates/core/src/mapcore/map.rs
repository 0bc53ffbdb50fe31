use rand::Rng;

use crate::error::{Error, Result};
use crate::mapcore::Graph;
use crate::permcore::{random_cycle_order, write_cycle, InducedPermutation, Permutation};

/// One element `m = (D, R, E)` of `𝓜(G)`.
///
/// `R` is a product of one full cycle per dart block and `E` is a fixed-point-free
/// involution that realises every edge of `G` exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    graph: Graph,
    rotation: Permutation,
    edge_scheme: Permutation,
}

/// Faces of a map: the cycles of `R·E`, each listed from its smallest dart and
/// ordered by that dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStructure {
    pub faces: Vec<Vec<usize>>,
    pub face_of: Vec<usize>,
}

impl FaceStructure {
    pub fn from_permutation(face_permutation: &Permutation) -> Self {
        let faces = face_permutation.cycles();
        let mut face_of = vec![0; face_permutation.domain_size()];
        for (i, face) in faces.iter().enumerate() {
            for &d in face {
                face_of[d] = i;
            }
        }
        FaceStructure { faces, face_of }
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// The face `F_e` containing dart `e`.
    pub fn face_containing(&self, e: usize) -> &[usize] {
        &self.faces[self.face_of[e]]
    }
}

impl CombinatorialMap {
    pub fn new(graph: Graph, rotation: Permutation, edge_scheme: Permutation) -> Result<Self> {
        check_rotation(&graph, &rotation)?;
        check_edge_scheme(&graph, &edge_scheme)?;
        Ok(CombinatorialMap {
            graph,
            rotation,
            edge_scheme,
        })
    }

    pub(crate) fn new_unchecked(
        graph: Graph,
        rotation: Permutation,
        edge_scheme: Permutation,
    ) -> Self {
        debug_assert!(check_rotation(&graph, &rotation).is_ok());
        debug_assert!(check_edge_scheme(&graph, &edge_scheme).is_ok());
        CombinatorialMap {
            graph,
            rotation,
            edge_scheme,
        }
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        check_rotation(&self.graph, &self.rotation)?;
        check_edge_scheme(&self.graph, &self.edge_scheme)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &Permutation {
        &self.rotation
    }

    pub fn edge_scheme(&self) -> &Permutation {
        &self.edge_scheme
    }

    pub fn dart_count(&self) -> usize {
        self.rotation.domain_size()
    }

    /// `R·E`.
    pub fn face_permutation(&self) -> Permutation {
        Permutation::from_image_unchecked(
            self.rotation
                .image()
                .iter()
                .map(|&y| self.edge_scheme.apply(y))
                .collect(),
        )
    }

    pub fn faces(&self) -> FaceStructure {
        FaceStructure::from_permutation(&self.face_permutation())
    }

    pub fn face_count(&self) -> usize {
        self.face_permutation().cycle_count()
    }

    /// Euler genus summed over the connected components of the underlying graph
    /// (for a connected graph this is `(2 - V + E - F) / 2`).
    ///
    /// Panics if the Euler relation yields a negative or half-integer genus,
    /// which can only happen if the map invariants were broken.
    pub fn genus(&self) -> usize {
        genus_from_faces(&self.graph, self.face_count())
    }

    /// `π_v`: the rotation cycle at `v`, as a permutation of `D_v`.
    pub fn pi(&self, v: usize) -> Result<InducedPermutation> {
        self.graph.check_vertex(v)?;
        self.rotation.induced(&self.block_darts(v))
    }

    /// `ω_v`: the permutation `R·E` induces on `D_v`.
    pub fn omega(&self, v: usize) -> Result<InducedPermutation> {
        self.graph.check_vertex(v)?;
        self.face_permutation().induced(&self.block_darts(v))
    }

    /// `(R − π_v)·E`: the face permutation after splitting `v` into `deg(v)` leaves.
    pub fn split_face_permutation(&self, v: usize) -> Result<Permutation> {
        self.graph.check_vertex(v)?;
        let block = self.graph.block(v);
        let image = (0..self.dart_count())
            .map(|x| {
                let r = if block.contains(&x) {
                    x
                } else {
                    self.rotation.apply(x)
                };
                self.edge_scheme.apply(r)
            })
            .collect();
        Ok(Permutation::from_image_unchecked(image))
    }

    /// `σ_v`: the permutation `(R − π_v)·E` induces on `D_v`.
    pub fn sigma(&self, v: usize) -> Result<InducedPermutation> {
        self.split_face_permutation(v)?
            .induced(&self.block_darts(v))
    }

    fn block_darts(&self, v: usize) -> Vec<usize> {
        self.graph.block(v).collect()
    }

    /// `m − {v}`: drops `D_v` and every dart paired with it by `E`, then takes the
    /// induced rotation and edge scheme on what is left. Vertices after `v` shift
    /// down by one; a neighbour left with no darts keeps an empty block.
    pub fn remove_vertex(&self, v: usize) -> Result<CombinatorialMap> {
        self.graph.check_vertex(v)?;
        let mut removed = vec![false; self.dart_count()];
        for d in self.graph.block(v) {
            removed[d] = true;
            removed[self.edge_scheme.apply(d)] = true;
        }
        let keep: Vec<usize> = (0..self.dart_count()).filter(|&d| !removed[d]).collect();
        let rotation = self.rotation.induced(&keep)?.local().clone();
        let edge_scheme = self.edge_scheme.induced(&keep)?.local().clone();
        CombinatorialMap::new(self.graph.without_vertex(v)?, rotation, edge_scheme)
    }

    /// The representative of this embedding with the canonical edge scheme,
    /// obtained by relabelling darts inside each block. Two maps describe the
    /// same rotation-system embedding iff their canonical forms coincide.
    pub fn canonical_form(&self) -> CombinatorialMap {
        let owner = self.graph.dart_owners();
        let neighbours = neighbour_lists(&self.graph);
        let tau: Vec<usize> = (0..self.dart_count())
            .map(|x| {
                let a = owner[x];
                let b = owner[self.edge_scheme.apply(x)];
                let rank = neighbours[a]
                    .binary_search(&b)
                    .expect("edge scheme uses an edge");
                self.graph.block(a).start + rank
            })
            .collect();
        let tau = Permutation::from_image_unchecked(tau);
        let rotation = self.rotation.relabel(&tau).expect("same domain");
        let edge_scheme = self.edge_scheme.relabel(&tau).expect("same domain");
        debug_assert_eq!(edge_scheme, canonical_edge_scheme(&self.graph));
        CombinatorialMap::new_unchecked(self.graph.clone(), rotation, edge_scheme)
    }

    /// `d_e(m)`: for every vertex, the number of darts of `F_e` in its block.
    pub fn face_profile(&self, e: usize) -> Result<Vec<usize>> {
        if e >= self.dart_count() {
            return Err(Error::NotASubset {
                dart: e,
                domain_size: self.dart_count(),
            });
        }
        let owner = self.graph.dart_owners();
        let faces = self.faces();
        let mut profile = vec![0; self.graph.vertex_count()];
        for &d in faces.face_containing(e) {
            profile[owner[d]] += 1;
        }
        Ok(profile)
    }

    /// `D'`: every dart lying on a face that meets `D_v`, sorted.
    pub fn darts_in_faces_at(&self, v: usize) -> Result<Vec<usize>> {
        self.graph.check_vertex(v)?;
        let faces = self.faces();
        Ok(darts_in_faces_touching(&faces, self.graph.block(v)))
    }

    /// `α(m)`: the permutation `R·E` induces on `D'`. Its cycles are exactly the
    /// faces incident with `v`.
    pub fn alpha(&self, v: usize) -> Result<InducedPermutation> {
        let darts = self.darts_in_faces_at(v)?;
        self.face_permutation().induced(&darts)
    }
}

pub(crate) fn darts_in_faces_touching(
    faces: &FaceStructure,
    block: std::ops::Range<usize>,
) -> Vec<usize> {
    let mut touched = vec![false; faces.faces.len()];
    for d in block {
        touched[faces.face_of[d]] = true;
    }
    let mut darts: Vec<usize> = faces
        .faces
        .iter()
        .zip(&touched)
        .filter(|(_, &t)| t)
        .flat_map(|(f, _)| f.iter().copied())
        .collect();
    darts.sort_unstable();
    darts
}

pub(crate) fn genus_from_faces(graph: &Graph, faces: usize) -> usize {
    let twice = 2 * graph.nontrivial_components() as i64 - graph.nonisolated_vertices() as i64
        + graph.edge_count() as i64
        - faces as i64;
    assert!(
        twice >= 0 && twice % 2 == 0,
        "Euler relation violated: 2g = {twice} for {} faces",
        faces
    );
    (twice / 2) as usize
}

fn neighbour_lists(graph: &Graph) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); graph.vertex_count()];
    for &(a, b) in graph.edges() {
        out[a].push(b);
        out[b].push(a);
    }
    for list in &mut out {
        list.sort_unstable();
    }
    out
}

fn check_rotation(graph: &Graph, rotation: &Permutation) -> Result<()> {
    if rotation.domain_size() != graph.dart_count() {
        return Err(Error::InvalidMap(format!(
            "rotation acts on {} darts, graph has {}",
            rotation.domain_size(),
            graph.dart_count()
        )));
    }
    for v in 0..graph.vertex_count() {
        let block = graph.block(v);
        if block.is_empty() {
            continue;
        }
        let start = block.start;
        let mut x = start;
        for step in 1..=block.len() {
            x = rotation.apply(x);
            if !block.contains(&x) {
                return Err(Error::InvalidMap(format!(
                    "rotation leaves the block of vertex {}",
                    v + 1
                )));
            }
            if x == start && step < block.len() {
                return Err(Error::InvalidMap(format!(
                    "rotation at vertex {} is not a single cycle",
                    v + 1
                )));
            }
        }
        if x != start {
            return Err(Error::InvalidMap(format!(
                "rotation at vertex {} is not a single cycle",
                v + 1
            )));
        }
    }
    Ok(())
}

fn check_edge_scheme(graph: &Graph, edge_scheme: &Permutation) -> Result<()> {
    if edge_scheme.domain_size() != graph.dart_count() {
        return Err(Error::InvalidMap(format!(
            "edge scheme acts on {} darts, graph has {}",
            edge_scheme.domain_size(),
            graph.dart_count()
        )));
    }
    let owner = graph.dart_owners();
    let mut used = vec![false; graph.edge_count()];
    for x in 0..edge_scheme.domain_size() {
        let y = edge_scheme.apply(x);
        if x == y || edge_scheme.apply(y) != x {
            return Err(Error::InvalidMap(format!(
                "edge scheme is not a fixed-point-free involution at dart {}",
                x + 1
            )));
        }
        if x > y {
            continue;
        }
        let (a, b) = (owner[x], owner[y]);
        let key = (a.min(b), a.max(b));
        let idx = graph.edges().binary_search(&key).map_err(|_| {
            Error::InvalidMap(format!(
                "pair ({} {}) joins vertices {} and {}, which are not adjacent",
                x + 1,
                y + 1,
                a + 1,
                b + 1
            ))
        })?;
        if used[idx] {
            return Err(Error::InvalidMap(format!(
                "edge {{{}, {}}} realised twice",
                a + 1,
                b + 1
            )));
        }
        used[idx] = true;
    }
    Ok(())
}

/// The edge scheme pairing the `k`-th dart of each block with the `k`-th smallest
/// neighbour of its vertex.
pub fn canonical_edge_scheme(graph: &Graph) -> Permutation {
    let mut next: Vec<usize> = (0..graph.vertex_count())
        .map(|v| graph.block(v).start)
        .collect();
    let mut image = vec![0; graph.dart_count()];
    for &(a, b) in graph.edges() {
        let (x, y) = (next[a], next[b]);
        next[a] += 1;
        next[b] += 1;
        image[x] = y;
        image[y] = x;
    }
    Permutation::from_image_unchecked(image)
}

/// Uniform element of `𝓡(G)`: an independent uniform full cycle on every block.
pub fn random_rotation<R: Rng + ?Sized>(graph: &Graph, rng: &mut R) -> Permutation {
    let mut image: Vec<usize> = (0..graph.dart_count()).collect();
    for v in 0..graph.vertex_count() {
        let block: Vec<usize> = graph.block(v).collect();
        if !block.is_empty() {
            write_cycle(&mut image, &random_cycle_order(&block, rng));
        }
    }
    Permutation::from_image_unchecked(image)
}

/// Uniform element of `𝓔(G)`: edges are processed in lexicographic order and each
/// takes a uniformly chosen unused dart from both endpoint blocks.
pub fn random_edge_scheme<R: Rng + ?Sized>(graph: &Graph, rng: &mut R) -> Permutation {
    let mut pools: Vec<Vec<usize>> = (0..graph.vertex_count())
        .map(|v| graph.block(v).collect())
        .collect();
    let mut image = vec![0; graph.dart_count()];
    for &(a, b) in graph.edges() {
        let i = rng.random_range(0..pools[a].len());
        let x = pools[a].swap_remove(i);
        let j = rng.random_range(0..pools[b].len());
        let y = pools[b].swap_remove(j);
        image[x] = y;
        image[y] = x;
    }
    Permutation::from_image_unchecked(image)
}

/// Uniform element of `𝓜(G)`.
pub fn random_map<R: Rng + ?Sized>(graph: &Graph, rng: &mut R) -> Result<CombinatorialMap> {
    if let Some(v) = graph.degrees().iter().position(|&d| d == 0) {
        return Err(Error::InvalidGraph(format!(
            "vertex {} has degree 0",
            v + 1
        )));
    }
    let rotation = random_rotation(graph, rng);
    let edge_scheme = random_edge_scheme(graph, rng);
    Ok(CombinatorialMap::new_unchecked(
        graph.clone(),
        rotation,
        edge_scheme,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::SeededRng;

    fn perm(s: &str) -> Permutation {
        Permutation::parse_cycles(s, 12).unwrap()
    }

    fn planar_k4() -> CombinatorialMap {
        CombinatorialMap::new(
            Graph::complete(4).unwrap(),
            perm("(2 1 3)(4 6 5)(7 8 9)(10 11 12)"),
            perm("(1 7)(2 4)(3 12)(5 8)(6 11)(9 10)"),
        )
        .unwrap()
    }

    fn toroidal_k4() -> CombinatorialMap {
        CombinatorialMap::new(
            Graph::complete(4).unwrap(),
            perm("(1 2 3)(4 6 5)(7 8 9)(10 11 12)"),
            perm("(1 4)(2 9)(3 10)(5 11)(6 7)(8 12)"),
        )
        .unwrap()
    }

    #[test]
    fn example_faces_and_genus() {
        let planar = planar_k4();
        assert_eq!(planar.face_count(), 4);
        assert_eq!(planar.genus(), 0);

        let torus = toroidal_k4();
        let faces = torus.faces();
        let printed: Vec<String> = faces
            .faces
            .iter()
            .map(|f| {
                let s: Vec<String> = f.iter().map(|d| (d + 1).to_string()).collect();
                format!("({})", s.join(" "))
            })
            .collect();
        assert_eq!(printed, vec!["(1 9 6 11 8 2 10 5)", "(3 4 7 12)"]);
        assert_eq!(torus.genus(), 1);
    }

    #[test]
    fn single_edge_map() {
        let k2 = Graph::complete(2).unwrap();
        let mut rng = SeededRng::new(0, 0);
        let m = random_map(&k2, &mut rng).unwrap();
        assert_eq!(m.face_count(), 1);
        assert_eq!(m.genus(), 0);
        assert_eq!(m.rotation(), &Permutation::identity(2));
        assert_eq!(
            m.edge_scheme(),
            &Permutation::parse_cycles("(1 2)", 2).unwrap()
        );
    }

    #[test]
    fn local_permutations_on_the_torus() {
        let torus = toroidal_k4();
        assert_eq!(torus.omega(0).unwrap().to_cycle_string(), "(1 2)(3)");
        assert_eq!(torus.sigma(0).unwrap().to_cycle_string(), "(1 3)(2)");
        assert_eq!(torus.pi(0).unwrap().to_cycle_string(), "(1 2 3)");
        assert_eq!(
            torus.split_face_permutation(0).unwrap(),
            perm("(1 4 7 12 3 10 5)(2 9 6 11 8)")
        );
        let product = torus
            .pi(0)
            .unwrap()
            .compose(&torus.sigma(0).unwrap())
            .unwrap();
        assert_eq!(product, torus.omega(0).unwrap());
    }

    #[test]
    fn planar_omega_is_identity() {
        assert_eq!(planar_k4().omega(0).unwrap().to_cycle_string(), "(1)(2)(3)");
    }

    #[test]
    fn removing_a_vertex_from_the_planar_map() {
        let m = planar_k4();
        let reduced = m.remove_vertex(0).unwrap();
        assert_eq!(reduced.graph(), &Graph::complete(3).unwrap());
        assert_eq!(reduced.face_count(), 2);
        assert_eq!(
            m.split_face_permutation(0).unwrap().cycle_count(),
            reduced.face_count()
        );
    }

    #[test]
    fn face_profiles() {
        // The long face of the toroidal map passes twice through every vertex.
        assert_eq!(toroidal_k4().face_profile(0).unwrap(), vec![2, 2, 2, 2]);
        // Face (2 7 5) of the planar map.
        assert_eq!(planar_k4().face_profile(1).unwrap(), vec![1, 1, 1, 0]);
    }

    #[test]
    fn darts_around_a_vertex() {
        let m = planar_k4();
        let darts = m.darts_in_faces_at(0).unwrap();
        assert_eq!(darts.len(), 9);
        assert_eq!(m.alpha(0).unwrap().cycle_count(), 3);

        // One face: D' is everything.
        let k2 = Graph::complete(2).unwrap();
        let mut rng = SeededRng::new(0, 0);
        let single = random_map(&k2, &mut rng).unwrap();
        assert_eq!(single.darts_in_faces_at(0).unwrap(), vec![0, 1]);
        assert_eq!(single.alpha(0).unwrap().local(), &single.face_permutation());
    }

    #[test]
    fn invalid_maps_are_rejected() {
        let k4 = Graph::complete(4).unwrap();
        // Rotation splits a block into two cycles.
        assert!(CombinatorialMap::new(
            k4.clone(),
            perm("(1 2)(4 6 5)(7 8 9)(10 11 12)"),
            perm("(1 7)(2 4)(3 12)(5 8)(6 11)(9 10)"),
        )
        .is_err());
        // Edge scheme realises {1,2} twice.
        assert!(CombinatorialMap::new(
            k4.clone(),
            perm("(1 2 3)(4 6 5)(7 8 9)(10 11 12)"),
            perm("(1 4)(2 5)(3 12)(6 7)(8 10)(9 11)"),
        )
        .is_err());
        // Not an involution.
        assert!(CombinatorialMap::new(
            k4,
            perm("(1 2 3)(4 6 5)(7 8 9)(10 11 12)"),
            perm("(1 4 7)(2 9)(3 10)(5 11)(6 12)(8)"),
        )
        .is_err());
    }

    #[test]
    fn canonical_form_fixes_the_edge_scheme() {
        let torus = toroidal_k4();
        let c = torus.canonical_form();
        assert_eq!(c.edge_scheme(), &canonical_edge_scheme(torus.graph()));
        assert_eq!(c.face_count(), torus.face_count());
        assert_eq!(c.canonical_form(), c);
    }

    #[test]
    fn canonical_scheme_on_k4() {
        let e = canonical_edge_scheme(&Graph::complete(4).unwrap());
        assert_eq!(e.to_cycle_string(), "(1 4)(2 7)(3 10)(5 8)(6 11)(9 12)");
    }
}
