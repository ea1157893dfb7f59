//! Combinatorial length of loops in roses and graphs.
use outfold::graph::{parse_any, LabeledRose};
use outfold::word::Loop;

fn main() -> outfold::Result<()> {
    let std3 = LabeledRose::standard(3);
    let twisted = LabeledRose::from_labels(&["a", "b", "cababab"])?;
    for l in ["abab", "c", "cab", "aab"] {
        let alpha = Loop::parse(l)?;
        println!(
            "{l:>5}: standard {}, twisted {}",
            std3.combinatorial_length(&alpha)?,
            twisted.combinatorial_length(&alpha)?
        );
    }

    let theta = parse_any(
        "graph theta rank 2\nvertex 0\nvertex 1\nedge 0 0 1: ab\nedge 1 0 1: abab\nedge 2 0 1: b\nbase 0\n",
    )?;
    for l in ["a", "b", "ab"] {
        println!(
            "theta graph, {l}: {}",
            theta.combinatorial_length(&Loop::parse(l)?)?
        );
    }
    Ok(())
}
