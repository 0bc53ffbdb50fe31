//! Permutation arithmetic on dart sets, cycle types and class bookkeeping.

mod counting;
mod cycle_type;
mod permutation;
mod rng;
mod sampling;

pub use counting::{
    binomial, centralizer_order, class_size, factorial, stirling_first, stirling_first_row,
};
pub use cycle_type::{partitions, CycleType};
pub use permutation::{parse_cycle_list, InducedPermutation, Permutation};
pub use rng::SeededRng;
pub(crate) use sampling::write_cycle;
pub use sampling::{
    class_members, class_representative, for_each_in_class, random_cycle_order, random_full_cycle,
    random_in_class, random_permutation,
};
