//! Permutations, permutation groups and the analytics built on them.

mod blocks;
mod centralizer;
mod group;
mod order;
mod perm;

pub use blocks::{block_system_merging, is_block_system, is_primitive, minimal_blocks, Partition};
pub use centralizer::{centralizer_elements, centralizer_of_transitive};
pub(crate) use group::relocate;
pub use group::{Orbit, PermGroup};
pub use order::{
    group_order, group_order_bounded, stabilizer_core_index, stabilizer_core_index_bounded,
    CoreIndex, StabChain, DEFAULT_DEGREE_BOUND,
};
pub use perm::{gcd, lcm, Perm};
