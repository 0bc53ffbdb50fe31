//! Combinatorial maps of simple graphs: construction, uniform sampling,
//! faces and genus, local face permutations, vertex removal and the `K_n`
//! vertex-addition process.

mod extend;
mod graph;
mod io;
mod map;

pub use extend::{
    all_extension_choices, extend_kn, extend_kn_with, inserted_dart, lifted_dart, ExtensionChoices,
};
pub use graph::Graph;
pub use io::MapJson;
pub use map::{
    canonical_edge_scheme, random_edge_scheme, random_map, random_rotation, CombinatorialMap,
    FaceStructure,
};
pub(crate) use map::{darts_in_faces_touching, genus_from_faces};
