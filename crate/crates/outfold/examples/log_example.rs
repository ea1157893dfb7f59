//! The rank-5 rose twisted m times around [bc], unwound by 4 + 4k folds per turn.
use outfold::analysis::{log_example, run_log_example_demo};
use outfold::twist::TwistConfig;

fn main() -> outfold::Result<()> {
    let cfg = TwistConfig::default();
    for (m, k) in [(1, 1), (2, 2), (3, 2), (1, 4)] {
        let ex = log_example(m, k, &cfg)?;
        println!(
            "m={m} k={k}: path {} folds, twist {}/{}, min length {} (floor {})",
            ex.path_length,
            ex.twist_numerator,
            ex.twist_denominator,
            ex.length_trace.iter().min().copied().unwrap_or(0),
            ex.floor
        );
    }
    print!("{}", run_log_example_demo(3, 2, &cfg)?.to_text());
    Ok(())
}
