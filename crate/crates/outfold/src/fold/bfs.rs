use std::collections::HashMap;
use std::str::FromStr;

use super::{FoldMove, FoldPath, Move, Side};
use crate::error::{Error, Result};
use crate::graph::LabeledRose;
use crate::word::Word;

/// Which moves the search may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveSet {
    pub left: bool,
    pub right: bool,
    pub invert: bool,
    pub swap: bool,
}

impl Default for MoveSet {
    fn default() -> Self {
        MoveSet {
            left: true,
            right: true,
            invert: true,
            swap: true,
        }
    }
}

impl FromStr for MoveSet {
    type Err = Error;

    /// Comma list over `lf`, `rf`, `inv`, `swap`.
    fn from_str(s: &str) -> Result<MoveSet> {
        let mut m = MoveSet {
            left: false,
            right: false,
            invert: false,
            swap: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "lf" => m.left = true,
                "rf" => m.right = true,
                "inv" => m.invert = true,
                "swap" => m.swap = true,
                other => return Err(Error::Config(format!("unknown move {other:?}"))),
            }
        }
        Ok(m)
    }
}

impl MoveSet {
    pub fn moves(&self, rank: usize) -> Vec<Move> {
        let mut out: Vec<Move> = FoldMove::all(rank)
            .into_iter()
            .filter(|m| match m.side {
                Side::Left => self.left,
                Side::Right => self.right,
            })
            .map(Move::Fold)
            .collect();
        if self.invert {
            out.extend((0..rank).map(|edge| Move::Invert { edge }));
        }
        if self.swap {
            for first in 0..rank {
                for second in first + 1..rank {
                    out.push(Move::Swap { first, second });
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BfsConfig {
    pub moves: MoveSet,
    pub max_depth: usize,
    /// Bound on stored states before the search gives up.
    pub max_states: usize,
    /// Identify roses that differ by reversing or permuting petals.
    pub up_to_relabeling: bool,
}

impl Default for BfsConfig {
    fn default() -> Self {
        BfsConfig {
            moves: MoveSet::default(),
            max_depth: 4,
            max_states: 2_000_000,
            up_to_relabeling: true,
        }
    }
}

#[derive(Clone, Debug)]
pub enum BfsOutcome {
    Found(FoldPath),
    NotFound { max_depth: usize, explored: usize },
}

impl BfsOutcome {
    pub fn distance(&self) -> Option<usize> {
        match self {
            BfsOutcome::Found(p) => Some(p.len()),
            BfsOutcome::NotFound { .. } => None,
        }
    }
}

fn orient(w: &Word) -> Word {
    let i = w.inverse();
    if (i.len(), &i) < (w.len(), w) {
        i
    } else {
        w.clone()
    }
}

fn key(labels: &[Word], up_to_relabeling: bool) -> Vec<Word> {
    if !up_to_relabeling {
        return labels.to_vec();
    }
    let mut k: Vec<Word> = labels.iter().map(orient).collect();
    k.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    k
}

/// Breadth-first search for a shortest move sequence from `source` to
/// `target`. Layers are expanded in insertion order and moves in the fixed
/// order of [`MoveSet::moves`], so the witness is reproducible.
pub fn bfs_move_path(
    source: &LabeledRose,
    target: &LabeledRose,
    cfg: &BfsConfig,
) -> Result<BfsOutcome> {
    if source.rank() != target.rank() {
        return Err(Error::RankMismatch {
            left: source.rank(),
            right: target.rank(),
        });
    }
    let moves = cfg.moves.moves(source.rank());
    let goal = key(target.labels(), cfg.up_to_relabeling);
    let start = source.labels().to_vec();
    let start_key = key(&start, cfg.up_to_relabeling);
    // key -> (parent key, move)
    let mut parent: HashMap<Vec<Word>, Option<(Vec<Word>, Move)>> = HashMap::new();
    parent.insert(start_key.clone(), None);
    let mut layer = vec![(start_key, start)];
    let mut found = None;
    for depth in 0..=cfg.max_depth {
        if let Some((k, _)) = layer.iter().find(|(k, _)| *k == goal) {
            found = Some(k.clone());
            break;
        }
        if depth == cfg.max_depth {
            break;
        }
        let mut next = Vec::new();
        for (k, labels) in &layer {
            for m in &moves {
                let Ok(new) = m.apply_labels(labels) else {
                    continue;
                };
                let nk = key(&new, cfg.up_to_relabeling);
                if parent.contains_key(&nk) {
                    continue;
                }
                parent.insert(nk.clone(), Some((k.clone(), *m)));
                if parent.len() > cfg.max_states {
                    return Err(Error::BudgetExceeded(format!(
                        "{} states at depth {}",
                        parent.len(),
                        depth + 1
                    )));
                }
                next.push((nk, new));
            }
        }
        layer = next;
    }
    let Some(mut k) = found else {
        return Ok(BfsOutcome::NotFound {
            max_depth: cfg.max_depth,
            explored: parent.len(),
        });
    };
    let mut rev = Vec::new();
    while let Some(Some((pk, m))) = parent.get(&k) {
        rev.push(*m);
        k = pk.clone();
    }
    rev.reverse();
    Ok(BfsOutcome::Found(FoldPath::from_moves(
        source.clone(),
        &rev,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rose(labels: &[&str]) -> LabeledRose {
        LabeledRose::from_labels(labels).unwrap()
    }

    #[test]
    fn examples() {
        let r0 = LabeledRose::standard(3);
        let cfg = BfsConfig::default();
        assert_eq!(bfs_move_path(&r0, &r0, &cfg).unwrap().distance(), Some(0));
        assert_eq!(
            bfs_move_path(&rose(&["ab", "b", "c"]), &r0, &cfg)
                .unwrap()
                .distance(),
            Some(1)
        );
        let d = bfs_move_path(&rose(&["a", "b", "cab"]), &r0, &cfg)
            .unwrap()
            .distance()
            .unwrap();
        assert!((1..=3).contains(&d));
        assert_eq!(d, 2);
    }

    #[test]
    fn not_found_and_budget() {
        let r0 = LabeledRose::standard(2);
        let far = rose(&["abbbbb", "b"]);
        let cfg = BfsConfig {
            max_depth: 2,
            ..BfsConfig::default()
        };
        assert!(matches!(
            bfs_move_path(&far, &r0, &cfg).unwrap(),
            BfsOutcome::NotFound { max_depth: 2, .. }
        ));
        let tight = BfsConfig {
            max_depth: 6,
            max_states: 50,
            ..BfsConfig::default()
        };
        assert!(matches!(
            bfs_move_path(&far, &r0, &tight),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn exact_mode_needs_relabeling_moves() {
        let r0 = LabeledRose::standard(2);
        let swapped = rose(&["B", "a"]);
        let loose = BfsConfig::default();
        assert_eq!(
            bfs_move_path(&swapped, &r0, &loose).unwrap().distance(),
            Some(0)
        );
        let exact = BfsConfig {
            up_to_relabeling: false,
            ..BfsConfig::default()
        };
        assert_eq!(
            bfs_move_path(&swapped, &r0, &exact).unwrap().distance(),
            Some(2)
        );
        let no_inv = BfsConfig {
            moves: "lf,rf,swap".parse().unwrap(),
            ..exact
        };
        assert!(
            bfs_move_path(&swapped, &r0, &no_inv)
                .unwrap()
                .distance()
                .unwrap()
                > 2
        );
    }

    #[test]
    fn move_set_parsing() {
        assert_eq!(
            "lf,rf".parse::<MoveSet>().unwrap(),
            MoveSet {
                left: true,
                right: true,
                invert: false,
                swap: false
            }
        );
        assert!("lf,xx".parse::<MoveSet>().is_err());
    }
}
