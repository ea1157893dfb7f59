//! Origin slices of the intersection core and axes of loops.
use outfold::twist::{axis_of, axis_slice_segment, origin_slice, TreeEdge};
use outfold::word::{Basis, Word};

fn main() -> outfold::Result<()> {
    for labels in [["ab", "b"], ["aab", "ab"], ["abbbb", "b"]] {
        let basis = Basis::parse(&labels)?;
        for petal in 0..2 {
            let s = origin_slice(&basis, petal, 32);
            let edges: Vec<String> = s.edges.iter().map(Word::to_string).collect();
            println!(
                "{labels:?} petal {petal}: {edges:?}{}",
                if s.truncated { " (truncated)" } else { "" }
            );
        }
    }

    let basis = Basis::parse(&["a", "b", "cababab"])?;
    let w = Word::parse("ab")?;
    let axis = axis_of(&basis, &w)?;
    println!(
        "axis of ab: translation length {}",
        axis.translation_length()
    );
    for (base, letter) in [("", "a"), ("", "c"), ("ccccc", "a")] {
        let e0 = TreeEdge::new(
            Word::parse(base)?,
            Word::parse(letter)?.first().expect("letter"),
        );
        let seg = axis_slice_segment(&w, &e0, &basis, 6)?;
        println!(
            "e0 = ({base:?}, {letter}): {} axis edges in the slice",
            seg.segment_len()
        );
    }
    Ok(())
}
