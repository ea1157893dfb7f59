use serde::Serialize;

use super::Dfa;
use crate::error::{Error, Result};
use crate::graph::LabeledRose;
use crate::word::{Basis, Letter, Word};

/// The oriented edge `(w, w·b)` of the tree of a basis, with `w` in basis
/// coordinates and `b` a basis letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TreeEdge {
    pub base: Word,
    #[serde(serialize_with = "ser_letter")]
    pub letter: Letter,
}

fn ser_letter<S: serde::Serializer>(l: &Letter, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&Word::letter(*l).to_string())
}

impl TreeEdge {
    pub fn new(base: Word, letter: Letter) -> TreeEdge {
        TreeEdge { base, letter }
    }

    /// `(ε, xᵢ)` for the 0-based petal `i`.
    pub fn origin(i: usize) -> TreeEdge {
        TreeEdge {
            base: Word::identity(),
            letter: Letter::gen(i + 1),
        }
    }

    /// The edge whose far endpoint from the origin is `p` (nonempty).
    pub fn from_prefix(p: &Word) -> TreeEdge {
        let last = p.last().expect("nonempty prefix");
        TreeEdge {
            base: p.prefix(p.len() - 1),
            letter: last,
        }
    }

    pub fn head(&self) -> Word {
        self.base.mul(&Word::letter(self.letter))
    }

    /// Whether the head is the endpoint farther from the origin.
    pub fn points_away(&self) -> bool {
        self.base.last() != Some(self.letter.inverse())
    }

    /// Coordinates of the endpoint farther from the origin. Two oriented
    /// edges are the same unoriented edge iff these agree.
    pub fn far_end(&self) -> Word {
        if self.points_away() {
            self.head()
        } else {
            self.base.clone()
        }
    }

    pub fn reversed(&self) -> TreeEdge {
        TreeEdge {
            base: self.head(),
            letter: self.letter.inverse(),
        }
    }

    /// Left translate by a group element given in the same coordinates.
    pub fn translate(&self, g: &Word) -> TreeEdge {
        TreeEdge {
            base: g.mul(&self.base),
            letter: self.letter,
        }
    }

    /// Edge `(g, g·βₓ)` given by a group element `g` in standard letters.
    pub fn at(basis: &Basis, g: &Word, letter: Letter) -> Result<TreeEdge> {
        Ok(TreeEdge {
            base: basis.rewrite(g)?,
            letter,
        })
    }
}

/// Vertices in front of `e`: the head side, head included.
pub fn front_language(basis: &Basis, e: &TreeEdge) -> Dfa {
    if e.points_away() {
        Dfa::cone(basis, &e.head())
    } else {
        Dfa::cone(basis, &e.base).complement()
    }
}

/// Vertices behind `e`: the base side, base included.
pub fn behind_language(basis: &Basis, e: &TreeEdge) -> Dfa {
    front_language(basis, e).complement()
}

/// Infinitely many common vertices, which for half-spaces is the same as a
/// common boundary point.
pub fn boundary_intersects(l1: &Dfa, l2: &Dfa) -> bool {
    l1.intersect(l2).is_infinite()
}

/// Same boundary set: the vertex sets differ in finitely many places.
pub fn boundary_equal(l1: &Dfa, l2: &Dfa) -> bool {
    !l1.symmetric_difference(l2).is_infinite()
}

/// Boundary containment `∂L₁ ⊆ ∂L₂`.
pub fn boundary_subset(l1: &Dfa, l2: &Dfa) -> bool {
    !l1.difference(l2).is_infinite()
}

pub fn is_intersection_square(b1: &Basis, e1: &TreeEdge, b0: &Basis, e0: &TreeEdge) -> bool {
    let f1 = front_language(b1, e1);
    let f0 = front_language(b0, e0);
    let (r1, r0) = (f1.complement(), f0.complement());
    [(&f1, &f0), (&f1, &r0), (&r1, &f0), (&r1, &r0)]
        .iter()
        .all(|(a, b)| boundary_intersects(a, b))
}

/// Edges of two trees inducing the same partition of the boundary, in
/// either orientation.
pub fn boundary_equivalent(b1: &Basis, e1: &TreeEdge, b2: &Basis, e2: &TreeEdge) -> bool {
    let f1 = front_language(b1, e1);
    let f2 = front_language(b2, e2);
    boundary_equal(&f1, &f2) || boundary_equal(&f1, &f2.complement())
}

/// An oriented tree edge named by its base as a group element in standard
/// letters and a signed petal letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEdge {
    pub base: Word,
    pub letter: Letter,
}

impl GroupEdge {
    pub fn head(&self, labels: &[Word]) -> Word {
        let b = &labels[self.letter.index() - 1];
        self.base.mul(&if self.letter.is_inverse() {
            b.inverse()
        } else {
            b.clone()
        })
    }

    pub fn to_tree_edge(&self, basis: &Basis) -> Result<TreeEdge> {
        TreeEdge::at(basis, &self.base, self.letter)
    }
}

/// Whether both pieces of a boundary statement hold, and whether they also
/// hold exactly at the level of vertex sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCheck {
    pub boundary: bool,
    pub vertex: bool,
}

/// The morphism `T → T′` induced by the fold `R′ = fold(R, t, s)`, which
/// relabels `t` by `s̄t`.
#[derive(Clone, Debug)]
pub struct FoldMorphism {
    pub before: Basis,
    pub after: Basis,
    pub target: usize,
    pub guide: usize,
}

impl FoldMorphism {
    pub fn new(r: &LabeledRose, target: usize, guide: usize) -> Result<FoldMorphism> {
        let m = crate::fold::FoldMove::left(target, guide);
        let after = crate::fold::general_fold(r, m)?;
        Ok(FoldMorphism {
            before: r.basis().clone(),
            after: after.basis().clone(),
            target,
            guide,
        })
    }

    /// Image of an oriented edge of `T` as an edge path of `T′`.
    pub fn image(&self, e: &GroupEdge) -> Vec<GroupEdge> {
        if e.letter.is_inverse() {
            let pos = Letter::gen(e.letter.index());
            let h = e.head(self.before.elements());
            return self
                .image(&GroupEdge {
                    base: h,
                    letter: pos,
                })
                .into_iter()
                .rev()
                .map(|g| GroupEdge {
                    base: g.head(self.after.elements()),
                    letter: g.letter.inverse(),
                })
                .collect();
        }
        if e.letter.index() - 1 != self.target {
            return vec![e.clone()];
        }
        let s = Letter::gen(self.guide + 1);
        let mid = e.base.mul(self.before.element(self.guide));
        vec![
            GroupEdge {
                base: e.base.clone(),
                letter: s,
            },
            GroupEdge {
                base: mid,
                letter: e.letter,
            },
        ]
    }

    /// Whether `ē₁` and `e₂` are the two edges the fold identifies.
    pub fn is_folded_pair(&self, e1: &GroupEdge, e2: &GroupEdge) -> bool {
        let (s, t) = (Letter::gen(self.guide + 1), Letter::gen(self.target + 1));
        let back = e1.letter.inverse();
        (back == s && e2.letter == t) || (back == t && e2.letter == s)
    }

    fn front(&self, before: bool, e: &GroupEdge) -> Result<Dfa> {
        let b = if before { &self.before } else { &self.after };
        Ok(front_language(b, &e.to_tree_edge(b)?))
    }

    fn compare(&self, l1: &Dfa, l2: &Dfa) -> PartitionCheck {
        PartitionCheck {
            boundary: boundary_equal(l1, l2),
            vertex: l1.symmetric_difference(l2).is_empty(),
        }
    }

    /// Part (i): an edge labeled neither `s` nor `t` keeps its partition.
    pub fn check_untouched(&self, g: &Word, petal: usize) -> Result<PartitionCheck> {
        if petal == self.target || petal == self.guide {
            return Err(Error::Config(
                "part (i) needs an edge other than s and t".into(),
            ));
        }
        let e = GroupEdge {
            base: g.clone(),
            letter: Letter::gen(petal + 1),
        };
        let img = self.image(&e);
        Ok(self.compare(&self.front(true, &e)?, &self.front(false, &img[0])?))
    }

    /// Part (ii): `(w, wt)` and `(ws, ws·s̄t)` induce the same partition.
    pub fn check_target(&self, g: &Word) -> Result<PartitionCheck> {
        let e = GroupEdge {
            base: g.clone(),
            letter: Letter::gen(self.target + 1),
        };
        let img = self.image(&e);
        Ok(self.compare(&self.front(true, &e)?, &self.front(false, &img[1])?))
    }

    /// Part (iii): the folded `s`-edge has front equal to the union of the
    /// fronts of the `s`- and `t`-edges it came from.
    pub fn check_guide(&self, g: &Word) -> Result<PartitionCheck> {
        let e2 = GroupEdge {
            base: g.clone(),
            letter: Letter::gen(self.guide + 1),
        };
        let e1 = GroupEdge {
            base: g.clone(),
            letter: Letter::gen(self.target + 1),
        };
        let union = self.front(true, &e2)?.union(&self.front(true, &e1)?);
        let img = self.image(&e2);
        Ok(self.compare(&union, &self.front(false, &img[0])?))
    }

    /// Part (iv): for consecutive edges `e₁`, `e₂` and `e′` in the image of
    /// `e₂`, the back of `e₁` lies in the back of `e′` at the boundary.
    ///
    /// The pair must not be folded together, i.e. `ē₁` and `e₂` are not the
    /// `t`- and `s`-edges leaving the same vertex. There `f(e₁)` runs back
    /// over `f(e₂)` and the inclusion fails.
    pub fn check_adjacent(&self, e1: &GroupEdge, e2: &GroupEdge) -> Result<bool> {
        if e1.head(self.before.elements()) != e2.base {
            return Err(Error::Config("edges are not consecutive".into()));
        }
        if self.is_folded_pair(e1, e2) {
            return Err(Error::Config("edges are identified by the fold".into()));
        }
        let back1 = self.front(true, e1)?.complement();
        for ep in self.image(e2) {
            let back = self.front(false, &ep)?.complement();
            if !boundary_subset(&back1, &back) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
