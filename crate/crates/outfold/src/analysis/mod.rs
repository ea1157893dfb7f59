//! Experiment drivers and verification reports.

mod backtrack;
mod fold_counts;
mod log_example;
mod properties;
mod random;
mod report;
mod twist_suite;

pub use backtrack::{
    backtrack, conjugated_twist, efficient_path, psi, run_backtrack, shortest_moves, tau, Backtrack,
};
pub use fold_counts::{alternate_path, twisted_power_rose, verify_fold_counts};
pub use log_example::{
    growth_automorphism, log_example, log_example_path, log_example_rose, run_log_example_demo,
    LogExample,
};
pub use properties::{partition_holds, run_fold_invariants, run_projection_suite};
pub use random::{random_fold, random_loop, random_rose, rng, ExperimentConfig};
pub use report::{Anchor, Report, Row, Summary};
pub use twist_suite::{
    fractional_floor, run_length_halving, run_slow_change, run_slow_twist_suite,
    slow_change_corpus, twist_by_t_sequence, SlowChangeCase,
};
