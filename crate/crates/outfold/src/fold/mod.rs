//! Stallings folds on edgelet graphs, general folds on roses, fold paths
//! and breadth-first search over rose moves.

mod bfs;
mod moves;
mod path;
mod stallings;

pub use bfs::{bfs_move_path, BfsConfig, BfsOutcome, MoveSet};
pub use moves::{apply_move, general_fold, FoldMove, Move, Side};
pub use path::{fold_path_to_outer_path, stallings_path_to_outer_path, FoldPath, OuterPath};
pub use stallings::{stallings_decompose, stallings_fold_once, StallingsPath, StallingsStep};
