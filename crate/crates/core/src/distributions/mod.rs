//! Probability distributions on `S_n` stored by conjugacy class, cycle-count
//! distributions, total variation distance, class products, the reference
//! distributions and the Monte Carlo experiments built on them.

mod bounds;
mod class_dist;
mod class_product;
mod cycle_count;
mod kn;
mod local;
mod mass;
mod reference;
pub mod sampling;

pub use bounds::{
    expected_faces_bound, full_cycle_bound_holds_exact, kn_squared_tv_bound, outside_face_bound,
    theorem1_bound, theorem2_rhs,
};
pub use class_dist::{tv_distance, ClassDistribution};
pub use class_product::{
    class_product_counts, class_product_exact, class_product_exact_with, class_product_sampled,
    full_cycle_row, parity_target, FullCycleRow, SampledClassProduct, DEFAULT_EXACT_CAP,
};
pub use cycle_count::{tv_distance_counts, CycleCountDistribution};
pub use kn::{kn_extension_statistics, tv_to_stirling, KnExtensionReport};
pub use local::{local_face_distribution, LocalFaceReport};
pub use mass::{ratio, Mass, Mode};
pub use reference::{
    stirling_reference, tv_to_uniform_parity, uniform_even, uniform_odd, uniform_parity,
    uniform_parity_class_mass,
};
pub use sampling::{EmpiricalReport, MeanAccumulator};
