//! Relative twisting numbers.
use outfold::graph::LabeledRose;
use outfold::twist::{relative_twist, TwistConfig};
use outfold::word::Loop;

fn main() -> outfold::Result<()> {
    let r0 = LabeledRose::standard(3);
    let ab = Loop::parse("ab")?;
    let cfg = TwistConfig::default();
    for t in 1..=4 {
        let c = format!("c{}", "ab".repeat(t));
        let r = LabeledRose::from_labels(&["a", "b", &c])?;
        let tw = relative_twist(&r, &r0, &ab, &cfg)?;
        let witness = tw
            .witness
            .as_ref()
            .map(|w| format!("({}, {})", w.e0.base, w.e0.letter.to_char()))
            .unwrap_or_default();
        println!(
            "c(ab)^{t}: twist {}/{} integer {} witness e0 = {witness} rho {}",
            tw.numerator, tw.denominator, tw.integer_part, tw.rho_used
        );
    }
    let same = relative_twist(&r0, &r0, &Loop::parse("abC")?, &cfg)?;
    println!("R0 against itself: {}", same.value());

    // Stability diagnostics: a tiny fixed window cannot see the whole segment.
    let r = LabeledRose::from_labels(&["a", "b", "cababab"])?;
    let narrow = TwistConfig {
        window_k: Some(1),
        ..cfg
    };
    match relative_twist(&r, &r0, &ab, &narrow) {
        Ok(tw) => println!("window 1: {} stable = {}", tw.value(), tw.stable),
        Err(e) => println!("window 1: {e}"),
    }
    Ok(())
}
