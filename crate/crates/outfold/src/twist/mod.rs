//! Relative twist of a rose against another along a loop, computed from the
//! boundary partitions of the two universal covers.

mod automaton;
mod relative;
mod slice;
mod tree;

pub use automaton::Dfa;
pub use relative::{
    axis_of, axis_slice_segment, relative_twist, AxisSegment, TwistConfig, TwistResult,
    TwistWitness,
};
pub use slice::{origin_slice, OriginSlice};
pub use tree::{
    behind_language, boundary_equal, boundary_equivalent, boundary_intersects, boundary_subset,
    front_language, is_intersection_square, FoldMorphism, GroupEdge, PartitionCheck, TreeEdge,
};
