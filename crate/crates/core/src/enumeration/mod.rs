//! Exhaustive enumeration of maps and class products at desk scale: the
//! ground truth the samplers and bounds are checked against.

mod exact;
mod scope;

pub use exact::{
    brute_class_product, exact_expected_faces, exact_face_distribution, exact_local_distribution,
    squared_tv_bound_exact, ExactFaceDistribution, ExactLocalDistribution, BRUTE_PAIR_CAP,
};
pub use scope::{
    enumerate_maps, kn_embedding_count, EdgeSchemeMode, EnumerationScope, MapIter, DEFAULT_CAP,
};
