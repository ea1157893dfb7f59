//! Fold calculus for free groups.

pub mod analysis;
pub mod error;
pub mod fold;
pub mod graph;
pub mod projection;
pub mod twist;
pub mod word;

pub use error::{Error, Result};
