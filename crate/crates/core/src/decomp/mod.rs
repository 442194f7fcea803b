//! Structural primitives: degeneracy, coloring, forest cover, star unions and
//! tree decompositions.

mod coloring;
mod degeneracy;
mod forest;
mod treedec;

pub use coloring::{greedy_coloring, VertexColoring};
pub use degeneracy::{degeneracy_ordering, DegeneracyOrdering};
pub use forest::{
    forest_cover_positive, forest_to_star_unions, is_acyclic, is_star_union, EdgePair,
    ForestCover, Star, StarUnion,
};
pub(crate) use forest::pair;
pub use treedec::{heuristic_tree_decomposition, TreeDecomposition};
