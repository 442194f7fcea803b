//! Exact solvers: the subset-DP oracle, forests, and tree decompositions.

mod brute;
mod forest;
mod treewidth;

pub use brute::{brute_force_opt, SubsetTable, BRUTE_FORCE_LIMIT};
pub use forest::forest_exact;
pub use treewidth::{bell, treewidth_exact, treewidth_value, STATE_LIMIT};
