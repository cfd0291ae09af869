//! Partial permutations, bounded juggling patterns, rank matrices, diagrams and
//! affine Bruhat covers. Indexing is 1-based throughout.

pub mod error;
pub mod juggling;
pub mod partial;
pub mod partition;

pub use error::CoreError;
pub use juggling::{BoundedAffinePermutation, Cover};
pub use partial::{Cell, EssentialBox, PartialPermutation, RankMatrix};
pub use partition::Partition;
