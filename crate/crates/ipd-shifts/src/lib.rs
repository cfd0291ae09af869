//! Combinatorial shifting, interval positroid matroids, Monk components and
//! safe-shift decompositions.

mod collection;
mod error;
mod matroid;
mod monk;
mod safe;

pub use collection::{k_subsets, shift_collection, shift_set, Collection, ShiftOp, Subset};
pub use error::ShiftError;
pub use matroid::{complement, interval_matching, matroid_of, matroid_of_pattern};
pub use monk::{minimal_northwest_dots, monk_components, monk_components_with_dots};
pub use safe::{
    equivariant_k_shift_identity, equivariant_transition_identity, inclusion_exclusion, safe_shift_components, safety, sublists,
    tconvex_fixed_point_check, transition_identity, IdentityCheck, SafeShift, Safety, TconvexReport,
};
