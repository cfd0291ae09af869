//! IP pipe dreams and K-IP pipe dreams: tiles, slices, and their enumeration.

mod brute;
mod dream;
mod enumerate;
mod error;
mod label;
mod slice;
mod tile;

pub use brute::{brute_force_enumerate, brute_force_tilings, Boundary, BRUTE_FORCE_MAX_N};
pub use dream::{End, Pipe, PipeDream, PipeSystem};
pub use enumerate::{enumerate, enumerate_with_stats, EnumerationStats};
pub use error::DreamError;
pub use label::{Label, Word};
pub use slice::{LabeledDot, Slice, SliceDots};
pub use tile::{TheoryMode, Tile, TileKind};
