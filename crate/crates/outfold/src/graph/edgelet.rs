use std::collections::BTreeMap;

use serde::Serialize;

use super::{Edge, LabeledGraph};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// A single-letter edge remembering which parent edge and position it
/// subdivides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edgelet {
    pub from: usize,
    pub to: usize,
    pub letter: Letter,
    pub parent: usize,
    pub position: usize,
}

/// An edgelet seen from one of its ends. A forward half starts at `from`
/// and reads `letter`; a backward half starts at `to` and reads its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub edgelet: usize,
    pub forward: bool,
}

/// Two half-edges with the same origin and the same label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FoldPair {
    pub vertex: usize,
    #[serde(serialize_with = "ser_letter")]
    pub letter: Letter,
    #[serde(serialize_with = "ser_half")]
    pub first: HalfEdge,
    #[serde(serialize_with = "ser_half")]
    pub second: HalfEdge,
}

fn ser_letter<S: serde::Serializer>(l: &Letter, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&Word::letter(*l).to_string())
}

fn ser_half<S: serde::Serializer>(h: &HalfEdge, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(h.edgelet as u64)
}

/// Subdivided graph in which every edge reads one letter.
///
/// Vertex and edgelet ids are stable under folding: a fold deletes one
/// edgelet and possibly one vertex but never renumbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeletGraph {
    rank: usize,
    alive: Vec<bool>,
    edgelets: Vec<Option<Edgelet>>,
    base: usize,
}

/// Outcome of full folding of an edgelet graph.
#[derive(Clone, Debug)]
pub struct MarkingReport {
    pub source_rank: usize,
    pub folded_rank: usize,
    pub folds: usize,
    /// The folded graph is the standard rose, so the marking is onto.
    pub onto: bool,
    pub is_basis: bool,
    pub folded: EdgeletGraph,
}

impl EdgeletGraph {
    pub fn subdivide(x: &LabeledGraph) -> EdgeletGraph {
        let mut alive = vec![true; x.vertex_count()];
        let mut edgelets = Vec::new();
        for (pi, e) in x.edges().iter().enumerate() {
            let n = e.label.len();
            let mut cur = e.from;
            for (pos, &l) in e.label.letters().iter().enumerate() {
                let nxt = if pos + 1 == n {
                    e.to
                } else {
                    alive.push(true);
                    alive.len() - 1
                };
                edgelets.push(Some(Edgelet {
                    from: cur,
                    to: nxt,
                    letter: l,
                    parent: pi,
                    position: pos,
                }));
                cur = nxt;
            }
        }
        EdgeletGraph {
            rank: x.rank(),
            alive,
            edgelets,
            base: x.base(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|a| **a).count()
    }

    pub fn edgelet_count(&self) -> usize {
        self.edgelets.iter().flatten().count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, a)| **a)
            .map(|(v, _)| v)
    }

    pub fn edgelets(&self) -> impl Iterator<Item = (usize, &Edgelet)> + '_ {
        self.edgelets
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.as_ref().map(|e| (i, e)))
    }

    pub fn edgelet(&self, id: usize) -> Option<&Edgelet> {
        self.edgelets.get(id).and_then(Option::as_ref)
    }

    /// First Betti number.
    pub fn betti(&self) -> usize {
        self.edgelet_count() + 1 - self.vertex_count()
    }

    fn live(&self, h: HalfEdge) -> &Edgelet {
        self.edgelets[h.edgelet].as_ref().expect("live edgelet")
    }

    pub fn half_origin(&self, h: HalfEdge) -> usize {
        let e = self.live(h);
        if h.forward {
            e.from
        } else {
            e.to
        }
    }

    pub fn half_target(&self, h: HalfEdge) -> usize {
        let e = self.live(h);
        if h.forward {
            e.to
        } else {
            e.from
        }
    }

    pub fn half_letter(&self, h: HalfEdge) -> Letter {
        let e = self.live(h);
        if h.forward {
            e.letter
        } else {
            e.letter.inverse()
        }
    }

    /// Half-edges grouped by (origin, label), each group in edgelet order.
    fn stars(&self) -> BTreeMap<(usize, Letter), Vec<HalfEdge>> {
        let mut stars: BTreeMap<(usize, Letter), Vec<HalfEdge>> = BTreeMap::new();
        for (id, _) in self.edgelets() {
            for forward in [true, false] {
                let h = HalfEdge {
                    edgelet: id,
                    forward,
                };
                stars
                    .entry((self.half_origin(h), self.half_letter(h)))
                    .or_default()
                    .push(h);
            }
        }
        stars
    }

    /// Every admissible pair, in selection order.
    pub fn admissible_pairs(&self) -> Vec<FoldPair> {
        let mut out = Vec::new();
        for ((vertex, letter), hs) in self.stars() {
            for i in 0..hs.len() {
                for j in i + 1..hs.len() {
                    out.push(FoldPair {
                        vertex,
                        letter,
                        first: hs[i],
                        second: hs[j],
                    });
                }
            }
        }
        out
    }

    /// The fold chosen by the fixed rule: least origin vertex, then least
    /// label, then least edgelet ids.
    pub fn next_fold(&self) -> Option<FoldPair> {
        self.stars()
            .into_iter()
            .find(|(_, hs)| hs.len() >= 2)
            .map(|((vertex, letter), hs)| FoldPair {
                vertex,
                letter,
                first: hs[0],
                second: hs[1],
            })
    }

    pub fn is_folded(&self) -> bool {
        self.next_fold().is_none()
    }

    /// Identifies the two half-edges of `pair`. The edgelet with the larger
    /// id is deleted; if the far ends differ they are merged, the basepoint
    /// or else the smaller vertex surviving. Returns `false` when the far
    /// ends already coincided, which lowers the rank.
    pub fn fold(&mut self, pair: FoldPair) -> Result<bool> {
        let FoldPair {
            vertex,
            letter,
            first,
            second,
        } = pair;
        for h in [first, second] {
            if self.edgelet(h.edgelet).is_none()
                || self.half_origin(h) != vertex
                || self.half_letter(h) != letter
            {
                return Err(Error::Config(format!(
                    "edgelets {} and {} cannot be folded",
                    first.edgelet, second.edgelet
                )));
            }
        }
        if first.edgelet == second.edgelet {
            return Err(Error::SameEdge(first.edgelet));
        }
        let (keep, gone) = if first.edgelet < second.edgelet {
            (first, second)
        } else {
            (second, first)
        };
        let (u1, u2) = (self.half_target(keep), self.half_target(gone));
        self.edgelets[gone.edgelet] = None;
        if u1 == u2 {
            return Ok(false);
        }
        let (survivor, merged) = if u2 == self.base || (u1 != self.base && u2 < u1) {
            (u2, u1)
        } else {
            (u1, u2)
        };
        for e in self.edgelets.iter_mut().flatten() {
            if e.from == merged {
                e.from = survivor;
            }
            if e.to == merged {
                e.to = survivor;
            }
        }
        self.alive[merged] = false;
        Ok(true)
    }

    /// One deterministic fold; `None` when the graph is folded.
    pub fn fold_once(&mut self) -> Option<FoldPair> {
        let pair = self.next_fold()?;
        self.fold(pair).expect("selected pair is admissible");
        Some(pair)
    }

    /// True when this is a single vertex with one loop per generator.
    pub fn is_standard_rose(&self) -> bool {
        if self.vertex_count() != 1 || self.edgelet_count() != self.rank {
            return false;
        }
        let mut seen = vec![false; self.rank];
        for (_, e) in self.edgelets() {
            if e.letter.index() > self.rank || seen[e.letter.index() - 1] {
                return false;
            }
            seen[e.letter.index() - 1] = true;
        }
        true
    }

    /// Treats every edgelet as an edge of a labeled graph, keeping ids.
    pub fn to_labeled_graph(&self, name: &str) -> Result<LabeledGraph> {
        let verts: Vec<usize> = self.vertices().collect();
        let mut dense = vec![usize::MAX; self.alive.len()];
        for (i, &v) in verts.iter().enumerate() {
            dense[v] = i;
        }
        let edges = self
            .edgelets()
            .map(|(id, e)| Edge {
                id,
                from: dense[e.from],
                to: dense[e.to],
                label: Word::letter(e.letter),
            })
            .collect();
        LabeledGraph::new(name, self.rank, verts, edges, dense[self.base])
    }

    pub fn validate(mut self) -> MarkingReport {
        let source_rank = self.betti();
        let mut folds = 0;
        while self.fold_once().is_some() {
            folds += 1;
        }
        let onto = self.is_standard_rose();
        let folded_rank = self.betti();
        MarkingReport {
            source_rank,
            folded_rank,
            folds,
            onto,
            is_basis: onto && source_rank == self.rank,
            folded: self,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabeledGraph;

    fn rose(rank: usize, labels: &[&str]) -> LabeledGraph {
        let ws: Vec<Word> = labels.iter().map(|s| Word::parse(s).unwrap()).collect();
        LabeledGraph::rose("r", rank, &ws).unwrap()
    }

    #[test]
    fn standard_rose_is_folded() {
        let mut g = rose(3, &["a", "b", "c"]).subdivide_to_edgelets();
        assert!(g.is_standard_rose());
        assert_eq!(g.fold_once(), None);
    }

    #[test]
    fn two_loops_labeled_a_fold_to_one() {
        let edges = vec![
            Edge {
                id: 0,
                from: 0,
                to: 0,
                label: Word::parse("a").unwrap(),
            },
            Edge {
                id: 1,
                from: 0,
                to: 0,
                label: Word::parse("a").unwrap(),
            },
        ];
        let g = LabeledGraph::new("w", 2, vec![0], edges, 0).unwrap();
        let mut e = g.subdivide_to_edgelets();
        let p = e.fold_once().unwrap();
        assert_eq!((p.first.edgelet, p.second.edgelet), (0, 1));
        assert_eq!(e.edgelet_count(), 1);
        assert!(e.is_folded());
        assert_eq!(e.betti(), 1);
    }

    #[test]
    fn thm_a_rose_has_one_admissible_pair_per_step() {
        // Oracle: enumerate all admissible pairs at each step.
        let mut g = rose(3, &["a", "b", "cab"]).subdivide_to_edgelets();
        let mut steps = 0;
        loop {
            let pairs = g.admissible_pairs();
            if pairs.is_empty() {
                break;
            }
            assert_eq!(pairs.len(), 1);
            // The first fold pulls the last edgelet of the third petal (b,
            // into the basepoint) onto petal b.
            if steps == 0 {
                assert_eq!(pairs[0].vertex, g.base());
                assert_eq!(pairs[0].letter, Letter::new(2, true));
                let ids = [pairs[0].first.edgelet, pairs[0].second.edgelet];
                assert_eq!(ids, [1, 4]);
            }
            g.fold_once();
            steps += 1;
        }
        assert_eq!(steps, 2);
        assert!(g.is_standard_rose());
    }

    #[test]
    fn marking_reports() {
        let r = rose(3, &["a", "b", "ab"]).validate_marking();
        assert!(!r.is_basis);
        assert_eq!(r.folded_rank, 2);
        assert!(!r.onto);
        assert!(rose(3, &["a", "b", "c"]).validate_marking().is_basis);
        let r = rose(3, &["abb", "b", "c"]).validate_marking();
        assert!(r.is_basis);
        assert_eq!(r.folded_rank, 3);
        // Not onto: ⟨aa, b⟩.
        let r = rose(2, &["aa", "b"]).validate_marking();
        assert!(!r.onto && !r.is_basis && r.folded_rank == 2);
    }

    #[test]
    fn abelianization_confirms_rank_drop() {
        // det of exponent-sum matrix of ⟨a,b,ab⟩ vanishes.
        let rows: Vec<Vec<i64>> = ["a", "b", "ab"]
            .iter()
            .map(|s| Word::parse(s).unwrap().exponent_sums(3))
            .collect();
        let det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
        assert_eq!(det, 0);
    }

    #[test]
    fn provenance_reproduces_labels() {
        let x = rose(3, &["cABab", "bb", "a"]);
        let e = x.subdivide_to_edgelets();
        for (pi, edge) in x.edges().iter().enumerate() {
            let mut parts: Vec<(usize, Letter)> = e
                .edgelets()
                .filter(|(_, l)| l.parent == pi)
                .map(|(_, l)| (l.position, l.letter))
                .collect();
            parts.sort();
            let w = Word::reduce(parts.into_iter().map(|(_, l)| l));
            assert_eq!(w, edge.label);
        }
    }
}
