//! Shortest move sequences between roses by breadth-first search.
use outfold::fold::{bfs_move_path, BfsConfig, BfsOutcome};
use outfold::graph::LabeledRose;

fn main() -> outfold::Result<()> {
    let r0 = LabeledRose::standard(3);
    let cfg = BfsConfig {
        max_depth: 5,
        up_to_relabeling: false,
        ..BfsConfig::default()
    };
    for labels in [["aba", "ab", "c"], ["b", "Ab", "c"], ["a", "b", "cabab"]] {
        let target = LabeledRose::from_labels(&labels)?;
        match bfs_move_path(&r0, &target, &cfg)? {
            BfsOutcome::Found(p) => {
                let moves: Vec<String> = p.moves().iter().map(ToString::to_string).collect();
                println!("{labels:?}: {} moves [{}]", p.len(), moves.join(", "));
            }
            BfsOutcome::NotFound {
                max_depth,
                explored,
            } => {
                println!("{labels:?}: none within {max_depth} ({explored} states)")
            }
        }
    }
    Ok(())
}
