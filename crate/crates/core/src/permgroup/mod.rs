//! Permutation groups with a certified stabilizer chain.

mod blocks;
mod group;
mod perm;

pub use blocks::{is_primitive, minimal_block_systems, BlockSystem};
pub use group::{PermGroup, DEFAULT_SEED, DEGREE_CAP};
pub use perm::Permutation;
