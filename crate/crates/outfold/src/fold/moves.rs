use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabeledRose;
use crate::word::{Automorphism, Basis, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `t ↦ s̄·t`
    Left,
    /// `t ↦ t·s̄`
    Right,
}

/// A general fold on a rose: the label of edge `target` is multiplied by
/// the inverse of the label of edge `guide`, on the given side. With
/// `guide_inverted` the guide is used without inversion, which is the fold
/// along the reversed guide edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FoldMove {
    pub target: usize,
    pub guide: usize,
    pub side: Side,
    pub guide_inverted: bool,
}

impl FoldMove {
    /// The general fold `fold(R, t, s)`: `t ↦ s̄t`.
    pub fn left(target: usize, guide: usize) -> FoldMove {
        FoldMove {
            target,
            guide,
            side: Side::Left,
            guide_inverted: false,
        }
    }

    pub fn right(target: usize, guide: usize) -> FoldMove {
        FoldMove {
            target,
            guide,
            side: Side::Right,
            guide_inverted: false,
        }
    }

    pub fn inverted(self) -> FoldMove {
        FoldMove {
            guide_inverted: !self.guide_inverted,
            ..self
        }
    }

    /// The fold undoing this one. On `R′ = fold(R, t, s)` it is
    /// `fold(R′, s̄t, s̄)`.
    pub fn inverse(self) -> FoldMove {
        self.inverted()
    }

    /// The factor `s^{∓1}` multiplied onto the target.
    fn factor(&self, labels: &[Word]) -> Word {
        let s = &labels[self.guide];
        if self.guide_inverted {
            s.clone()
        } else {
            s.inverse()
        }
    }

    /// New target label, without certifying the result.
    pub fn apply_labels(&self, labels: &[Word]) -> Result<Vec<Word>> {
        let n = labels.len();
        for e in [self.target, self.guide] {
            if e >= n {
                return Err(Error::EdgeOutOfRange { edge: e, edges: n });
            }
        }
        if self.target == self.guide {
            return Err(Error::SameEdge(self.target));
        }
        let f = self.factor(labels);
        let t = &labels[self.target];
        let new = match self.side {
            Side::Left => f.mul(t),
            Side::Right => t.mul(&f),
        };
        if new.is_identity() {
            return Err(Error::DegenerateFold { edge: self.target });
        }
        let mut out = labels.to_vec();
        out[self.target] = new;
        Ok(out)
    }

    /// The transvection `τ` with `fold(φ(R₀)) = (φ∘τ)(R₀)`.
    pub fn transvection(&self, rank: usize) -> Automorphism {
        let std: Vec<Word> = (1..=rank).map(Word::gen).collect();
        Automorphism::new(self.apply_labels(&std).expect("valid move")).expect("transvection")
    }

    /// Every fold on a rose of the given rank, in search order.
    pub fn all(rank: usize) -> Vec<FoldMove> {
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            for target in 0..rank {
                for guide in 0..rank {
                    if target != guide {
                        for guide_inverted in [false, true] {
                            out.push(FoldMove {
                                target,
                                guide,
                                side,
                                guide_inverted,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// A fold turning the label of `target` into `want`, if one exists.
    pub fn reaching(labels: &[Word], target: usize, want: &Word) -> Option<FoldMove> {
        FoldMove::all(labels.len())
            .into_iter()
            .filter(|m| m.target == target)
            .find(|m| m.apply_labels(labels).is_ok_and(|l| l[target] == *want))
    }
}

impl fmt::Display for FoldMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = Word::gen(self.target + 1);
        let s = Word::gen(self.guide + 1);
        let g = if self.guide_inverted {
            s.to_string()
        } else {
            s.inverse().to_string()
        };
        match self.side {
            Side::Left => write!(f, "{t} ← {g}·{t}"),
            Side::Right => write!(f, "{t} ← {t}·{g}"),
        }
    }
}

/// A step of a rose path: a fold, a petal reversal, or a petal swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Move {
    Fold(FoldMove),
    Invert { edge: usize },
    Swap { first: usize, second: usize },
}

impl Move {
    pub fn apply_labels(&self, labels: &[Word]) -> Result<Vec<Word>> {
        let n = labels.len();
        let check = |e: usize| {
            if e < n {
                Ok(())
            } else {
                Err(Error::EdgeOutOfRange { edge: e, edges: n })
            }
        };
        match *self {
            Move::Fold(m) => m.apply_labels(labels),
            Move::Invert { edge } => {
                check(edge)?;
                let mut out = labels.to_vec();
                out[edge] = out[edge].inverse();
                Ok(out)
            }
            Move::Swap { first, second } => {
                check(first)?;
                check(second)?;
                if first == second {
                    return Err(Error::SameEdge(first));
                }
                let mut out = labels.to_vec();
                out.swap(first, second);
                Ok(out)
            }
        }
    }

    pub fn inverse(self) -> Move {
        match self {
            Move::Fold(m) => Move::Fold(m.inverse()),
            other => other,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Fold(m) => write!(f, "{m}"),
            Move::Invert { edge } => write!(f, "invert {}", Word::gen(edge + 1)),
            Move::Swap { first, second } => {
                write!(f, "swap {} {}", Word::gen(first + 1), Word::gen(second + 1))
            }
        }
    }
}

/// `fold(R, move)`.
pub fn general_fold(r: &LabeledRose, m: FoldMove) -> Result<LabeledRose> {
    apply_move(r, Move::Fold(m))
}

pub fn apply_move(r: &LabeledRose, m: Move) -> Result<LabeledRose> {
    let labels = m.apply_labels(r.labels())?;
    Ok(LabeledRose::new(r.name(), Basis::new(labels)?))
}
