//! The path to ψ^q τ^t ψ^-q wanders q steps away in the factor graph and back.
use outfold::analysis::{backtrack, run_backtrack};

fn main() -> outfold::Result<()> {
    for q in 0..=4 {
        let b = backtrack(q, 4, 4)?;
        println!(
            "q={q}: {} moves, |psi| = {}, excursion {}, endpoint distance {}",
            b.path_length, b.psi_norm, b.excursion, b.endpoint_distance
        );
    }
    print!("{}", run_backtrack(3, 4, 4)?.to_text());
    Ok(())
}
