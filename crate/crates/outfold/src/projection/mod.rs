//! Projection of a rose to the free factor graph of a rank-2 free factor,
//! realised as the Farey graph.

mod core;
mod farey;
mod shadow;

pub use core::{CoreEdge, SubgroupCore, SubgroupGraph};
pub use farey::{farey_distance, FareyBall, PrimitiveClass};
pub use shadow::{
    christoffel_word, is_primitive_rank2, loop_slope, projection_bound_check,
    shortest_primitive_loop, subgroup_core, theta_projection, FreeFactor, ProjectionBound,
    ShortestLoop, DEFAULT_LOOP_CAP,
};
