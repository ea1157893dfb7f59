//! The seeded fold experiments: twist drop, fractional bound, length halving,
//! fold-count bounds and the partition checks.
use outfold::analysis::{
    run_fold_invariants, run_length_halving, run_projection_suite, run_slow_change,
    run_slow_twist_suite, ExperimentConfig,
};

fn main() -> outfold::Result<()> {
    let cfg = ExperimentConfig {
        seed: std::env::args()
            .nth(1)
            .and_then(|s| s.parse().ok())
            .unwrap_or(7),
        ..Default::default()
    };
    for r in [
        run_slow_change(&cfg)?,
        run_length_halving(&cfg, 500)?,
        run_slow_twist_suite(&cfg)?,
        run_fold_invariants(&cfg, 50)?,
        run_projection_suite(&cfg, 100, 12)?,
    ] {
        let s = &r.summary;
        println!(
            "{:<32} {:>4} passed {:>3} failed {:>6} ms",
            r.command, s.passed, s.failed, s.runtime_ms
        );
        for row in r.failures() {
            println!("  FAIL {} {} {}", row.anchor.text(), row.inputs, row.values);
        }
    }
    Ok(())
}
