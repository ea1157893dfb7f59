//! Vertex languages in front of and behind tree edges, and how a fold moves them.
use outfold::graph::LabeledRose;
use outfold::twist::{
    behind_language, front_language, is_intersection_square, FoldMorphism, TreeEdge,
};
use outfold::word::{Basis, Letter, Word};

fn main() -> outfold::Result<()> {
    let std = Basis::standard(2);
    let other = Basis::parse(&["aab", "ab"])?;
    let e = TreeEdge::origin(0);

    let front = front_language(&std, &e);
    let behind = behind_language(&std, &e);
    println!(
        "front of (1, a) up to length 2: {:?}",
        front
            .enumerate(2)
            .iter()
            .map(Word::to_string)
            .collect::<Vec<_>>()
    );
    println!(
        "front ∩ behind empty: {}",
        front.intersect(&behind).is_empty()
    );

    // Which standard edges near the origin form squares with (1, x₂) in T'?
    let e1 = TreeEdge::origin(1);
    for w in ["", "a", "A", "b", "B", "ab"] {
        for l in [Letter::gen(1), Letter::gen(2)] {
            let e0 = TreeEdge::new(Word::parse(w)?, l);
            if is_intersection_square(&other, &e1, &std, &e0) {
                println!("square with e0 = ({w:?}, {})", l.to_char());
            }
        }
    }

    let r = LabeledRose::from_labels(&["ab", "bc", "c"])?;
    let f = FoldMorphism::new(&r, 0, 1)?;
    let g = Word::parse("cA")?;
    println!("untouched edge: {:?}", f.check_untouched(&g, 2)?);
    println!("target edge:    {:?}", f.check_target(&g)?);
    println!("guide edge:     {:?}", f.check_guide(&g)?);
    Ok(())
}
