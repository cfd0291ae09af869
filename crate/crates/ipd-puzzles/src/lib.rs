mod bijection;
mod enumerate;
mod error;
mod lr;
mod puzzle;

pub use bijection::{dream_to_puzzle, merge_letters, puzzle_to_dream, LETTER};
pub use enumerate::{binary_words, count_puzzles, count_table, enumerate_puzzles};
pub use error::PuzzleError;
pub use lr::lr_coefficient;
pub use puzzle::{triangle_ok, Puzzle, PuzzleBoundary, PuzzleLabel};
