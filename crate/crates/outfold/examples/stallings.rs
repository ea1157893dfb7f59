//! Stallings folding of ⟨a, b, c(abˢ)ᵗ⟩ against the shorter general-fold path.
use outfold::analysis::{alternate_path, twisted_power_rose, verify_fold_counts};
use outfold::fold::stallings_decompose;
use outfold::word::Word;

fn main() -> outfold::Result<()> {
    let (s, t) = (2, 3);
    let r = twisted_power_rose(s, t);
    let stallings = stallings_decompose(&r.to_graph())?;
    println!(
        "Stallings folds: {} (t(s+1) = {})",
        stallings.len(),
        t * (s + 1)
    );

    let alt = alternate_path(s, t)?;
    println!("general folds:   {} (2s+t = {})", alt.len(), 2 * s + t);
    for (m, r) in alt.moves().iter().zip(&alt.roses()[1..]) {
        let labels: Vec<String> = r.labels().iter().map(Word::to_string).collect();
        println!("  {m:<12} {}", labels.join(" "));
    }

    for (s, t) in [(1, 1), (4, 4)] {
        let rep = verify_fold_counts(s, t)?;
        print!("{}", rep.to_text());
    }
    Ok(())
}
