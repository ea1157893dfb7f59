use serde::Serialize;

use super::{apply_move, bfs_move_path, BfsConfig, Move, StallingsPath};
use crate::error::Result;
use crate::graph::LabeledRose;
use crate::word::{Automorphism, Word};

/// A sequence of roses joined by moves, from the source `R_m` to the last
/// rose (usually `R₀`).
#[derive(Clone, Debug)]
pub struct FoldPath {
    roses: Vec<LabeledRose>,
    moves: Vec<Move>,
}

impl FoldPath {
    pub fn start(source: LabeledRose) -> FoldPath {
        FoldPath {
            roses: vec![source],
            moves: Vec::new(),
        }
    }

    pub fn from_moves(source: LabeledRose, moves: &[Move]) -> Result<FoldPath> {
        let mut p = FoldPath::start(source);
        for &m in moves {
            p.push(m)?;
        }
        Ok(p)
    }

    pub fn push(&mut self, m: Move) -> Result<&LabeledRose> {
        let next = apply_move(self.end(), m)?;
        self.roses.push(next);
        self.moves.push(m);
        Ok(self.end())
    }

    pub fn extend(&mut self, moves: &[Move]) -> Result<()> {
        for &m in moves {
            self.push(m)?;
        }
        Ok(())
    }

    /// Number of moves.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn roses(&self) -> &[LabeledRose] {
        &self.roses
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn source(&self) -> &LabeledRose {
        &self.roses[0]
    }

    pub fn end(&self) -> &LabeledRose {
        self.roses.last().expect("nonempty path")
    }

    /// The same roses traversed backwards.
    pub fn reversed(&self) -> FoldPath {
        let moves: Vec<Move> = self.moves.iter().rev().map(|m| m.inverse()).collect();
        FoldPath {
            roses: self.roses.iter().rev().cloned().collect(),
            moves,
        }
    }
}

/// The automorphisms `φᵢ` with `Rᵢ = φᵢ(R₀)` along a path, plus the
/// observed size of each step `φᵢ⁻¹∘φᵢ₊₁` as a move distance.
#[derive(Clone, Debug, Serialize)]
pub struct OuterPath {
    pub automorphisms: Vec<Automorphism>,
    /// BFS distance of each step; `None` when beyond the search depth.
    pub step_sizes: Vec<Option<usize>>,
}

impl OuterPath {
    fn build(automorphisms: Vec<Automorphism>, cfg: &BfsConfig) -> Result<OuterPath> {
        let mut step_sizes = Vec::new();
        for pair in automorphisms.windows(2) {
            let step = pair[0].inverse().compose(&pair[1]);
            let r = LabeledRose::new("step", step.as_basis().clone());
            let rank = r.rank();
            step_sizes.push(bfs_move_path(&r, &LabeledRose::standard(rank), cfg)?.distance());
        }
        Ok(OuterPath {
            automorphisms,
            step_sizes,
        })
    }

    /// Largest step size, `None` if any step exceeded the search depth.
    pub fn step_bound(&self) -> Option<usize> {
        self.step_sizes
            .iter()
            .try_fold(0, |acc, s| s.map(|s| acc.max(s)))
    }
}

pub fn fold_path_to_outer_path(p: &FoldPath, cfg: &BfsConfig) -> Result<OuterPath> {
    let autos = p
        .roses()
        .iter()
        .map(|r| Automorphism::from_basis(r.basis().clone()))
        .collect();
    OuterPath::build(autos, cfg)
}

/// Labels that are the standard letters up to order and orientation are
/// replaced by the standard rose itself.
fn normalize(labels: Vec<Word>) -> Vec<Word> {
    let n = labels.len();
    let mut idx: Vec<usize> = labels
        .iter()
        .filter(|w| w.len() == 1)
        .map(Word::max_index)
        .collect();
    idx.sort_unstable();
    if idx == (1..=n).collect::<Vec<_>>() {
        (1..=n).map(Word::gen).collect()
    } else {
        labels
    }
}

/// Collapses each graph of a Stallings path to a rose. Petals are ordered by
/// the provenance of their edgelets.
pub fn stallings_path_to_outer_path(p: &StallingsPath, cfg: &BfsConfig) -> Result<OuterPath> {
    let mut autos = Vec::new();
    if p.is_empty() {
        let c = p.source.collapse_spanning_tree()?;
        autos.push(Automorphism::new(normalize(c.rose.labels().to_vec()))?);
    }
    for g in p.graphs() {
        let c = g
            .to_labeled_graph(p.source.name())?
            .collapse_spanning_tree()?;
        autos.push(Automorphism::new(normalize(c.rose.labels().to_vec()))?);
    }
    OuterPath::build(autos, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::{stallings_decompose, FoldMove};

    #[test]
    fn stallings_outer_path_endpoints() {
        let r = LabeledRose::from_labels(&["a", "b", "cabbabbabb"]).unwrap();
        let p = stallings_decompose(&r.to_graph()).unwrap();
        let o = stallings_path_to_outer_path(&p, &BfsConfig::default()).unwrap();
        assert_eq!(o.automorphisms.len(), 10);
        assert_eq!(o.automorphisms[0].images(), r.labels());
        assert!(o.automorphisms[9].is_identity());
        assert!(o.step_bound().unwrap() <= 2);
    }

    #[test]
    fn trivial_and_single_fold_paths() {
        let r0 = LabeledRose::standard(3);
        let o =
            fold_path_to_outer_path(&FoldPath::start(r0.clone()), &BfsConfig::default()).unwrap();
        assert_eq!(o.automorphisms.len(), 1);
        assert!(o.automorphisms[0].is_identity());

        let p = FoldPath::from_moves(r0, &[Move::Fold(FoldMove::left(2, 0))]).unwrap();
        let o = fold_path_to_outer_path(&p, &BfsConfig::default()).unwrap();
        assert!(o.automorphisms[0].is_identity());
        assert_eq!(o.automorphisms[1].images()[2], Word::parse("Ac").unwrap());
        assert_eq!(o.step_sizes, vec![Some(1)]);
    }

    #[test]
    fn reversed_path_returns() {
        let r = LabeledRose::from_labels(&["ab", "b", "c"]).unwrap();
        let p = FoldPath::from_moves(
            r.clone(),
            &[
                Move::Fold(FoldMove::right(0, 1)),
                Move::Swap {
                    first: 1,
                    second: 2,
                },
            ],
        )
        .unwrap();
        let back = p.reversed();
        assert_eq!(back.source(), p.end());
        let replay = FoldPath::from_moves(p.end().clone(), back.moves()).unwrap();
        assert_eq!(replay.end(), &r);
    }
}
