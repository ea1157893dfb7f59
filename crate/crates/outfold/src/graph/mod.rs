//! Labeled graphs and roses, edgelet subdivision, spanning-tree collapse and
//! combinatorial length.
//!
//! A labeled graph carries a word on every edge. Reading labels along closed
//! paths at the basepoint gives the marking `π₁(x) → F_n`.

mod edgelet;
mod format;

pub use edgelet::{Edgelet, EdgeletGraph, FoldPair, HalfEdge, MarkingReport};
pub use format::{parse_any, parse_graph, parse_rose, write_graph, write_rose};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Basis, Letter, Loop, Word};

/// One edge of a [`LabeledGraph`]. Endpoints are dense vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub from: usize,
    pub to: usize,
    pub label: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    name: String,
    rank: usize,
    /// External vertex ids, indexed by dense vertex index.
    vertex_ids: Vec<usize>,
    edges: Vec<Edge>,
    base: usize,
}

/// Tree edge into a vertex and its direction; `None` at the basepoint.
type TreeStep = Option<(usize, bool)>;

impl LabeledGraph {
    /// Checks connectivity, degrees, label support and the Betti number.
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        vertex_ids: Vec<usize>,
        edges: Vec<Edge>,
        base: usize,
    ) -> Result<LabeledGraph> {
        if vertex_ids.is_empty() || edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if rank == 0 || rank > crate::word::MAX_RANK {
            return Err(Error::UnsupportedRank(rank));
        }
        let nv = vertex_ids.len();
        if base >= nv {
            return Err(Error::UnknownVertex(base));
        }
        let mut degree = vec![0usize; nv];
        for e in &edges {
            for v in [e.from, e.to] {
                if v >= nv {
                    return Err(Error::UnknownVertex(v));
                }
                degree[v] += 1;
            }
            if e.label.is_identity() {
                return Err(Error::NotABasis {
                    reason: format!("edge {} has an empty label", e.id),
                });
            }
            if e.label.max_index() > rank {
                return Err(Error::RankExceeded {
                    index: e.label.max_index(),
                    rank,
                });
            }
        }
        if let Some(v) = degree.iter().position(|&d| d == 0) {
            return Err(Error::UnknownVertex(vertex_ids[v]));
        }
        let g = LabeledGraph {
            name: name.into(),
            rank,
            vertex_ids,
            edges,
            base,
        };
        if g.bfs_tree().0.iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        if g.betti() != rank {
            return Err(Error::RankMismatch {
                left: g.betti(),
                right: rank,
            });
        }
        Ok(g)
    }

    /// One-vertex graph with petal `i` labeled `labels[i]`. No basis check.
    pub fn rose(name: impl Into<String>, rank: usize, labels: &[Word]) -> Result<LabeledGraph> {
        let edges = labels
            .iter()
            .enumerate()
            .map(|(i, w)| Edge {
                id: i,
                from: 0,
                to: 0,
                label: w.clone(),
            })
            .collect();
        LabeledGraph::new(name, rank, vec![0], edges, 0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn vertex_ids(&self) -> &[usize] {
        &self.vertex_ids
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertex_ids.len()
    }

    pub fn is_rose(&self) -> bool {
        self.vertex_ids.len() == 1
    }

    /// BFS tree from the basepoint, scanning edges in index order.
    /// Entry `v` of the first vector is the tree edge used to reach `v` and
    /// whether it was traversed forward; the basepoint maps to `Some(None)`.
    /// The second vector is the visiting order.
    fn bfs_tree(&self) -> (Vec<Option<TreeStep>>, Vec<usize>) {
        let nv = self.vertex_ids.len();
        let mut incident: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); nv];
        for (i, e) in self.edges.iter().enumerate() {
            incident[e.from].push((i, e.to, true));
            incident[e.to].push((i, e.from, false));
        }
        let mut parent = vec![None; nv];
        parent[self.base] = Some(None);
        let mut order = vec![self.base];
        let mut queue = VecDeque::from([self.base]);
        while let Some(v) = queue.pop_front() {
            for &(i, b, fwd) in &incident[v] {
                if parent[b].is_none() {
                    parent[b] = Some(Some((i, fwd)));
                    order.push(b);
                    queue.push_back(b);
                }
            }
        }
        (parent, order)
    }

    /// Collapses the BFS spanning tree at the basepoint.
    pub fn collapse_spanning_tree(&self) -> Result<Collapse> {
        let (tree, order) = self.bfs_tree();
        let nv = self.vertex_ids.len();
        let ne = self.edges.len();
        // Path words from the basepoint: over S and over the edge alphabet.
        let mut label_path: Vec<Option<Word>> = vec![None; nv];
        let mut edge_path: Vec<Option<Word>> = vec![None; nv];
        label_path[self.base] = Some(Word::identity());
        edge_path[self.base] = Some(Word::identity());
        let mut tree_edge = vec![false; ne];
        for &v in &order {
            let Some(Some((i, fwd))) = tree[v] else {
                continue;
            };
            tree_edge[i] = true;
            let e = &self.edges[i];
            let prev = if fwd { e.from } else { e.to };
            let (lab, step) = if fwd {
                (e.label.clone(), Word::gen(i + 1))
            } else {
                (e.label.inverse(), Word::letter(Letter::new(i + 1, true)))
            };
            label_path[v] = Some(label_path[prev].as_ref().unwrap().mul(&lab));
            edge_path[v] = Some(edge_path[prev].as_ref().unwrap().mul(&step));
        }
        let label_path: Vec<Word> = label_path.into_iter().map(Option::unwrap).collect();
        let edge_path: Vec<Word> = edge_path.into_iter().map(Option::unwrap).collect();

        let mut labels = Vec::new();
        let mut petal_paths = Vec::new();
        let mut edge_to_petal = vec![None; ne];
        for (i, e) in self.edges.iter().enumerate() {
            if tree_edge[i] {
                continue;
            }
            edge_to_petal[i] = Some(labels.len());
            labels.push(
                label_path[e.from]
                    .mul(&e.label)
                    .mul(&label_path[e.to].inverse()),
            );
            petal_paths.push(
                edge_path[e.from]
                    .mul(&Word::gen(i + 1))
                    .mul(&edge_path[e.to].inverse()),
            );
        }
        let rose = LabeledRose::new(self.name.clone(), Basis::new(labels)?);
        Ok(Collapse {
            rose,
            tree_paths: label_path,
            edge_to_petal,
            petal_paths,
        })
    }

    /// Number of edges of `x` crossed by the immersed representative of `α`.
    pub fn combinatorial_length(&self, alpha: &Loop) -> Result<usize> {
        let c = self.collapse_spanning_tree()?;
        let coords = c.rose.basis().rewrite(alpha.representative())?;
        let path = coords.substitute(&c.petal_paths);
        let (core, _) = path.cyclic_reduce();
        if core.is_identity() {
            return Err(Error::TrivialLoop);
        }
        Ok(core.len())
    }

    /// Label read along a path given over the edge alphabet (edge `i` is
    /// generator `i + 1`).
    pub fn read_edge_path(&self, path: &Word) -> Word {
        let labels: Vec<Word> = self.edges.iter().map(|e| e.label.clone()).collect();
        path.substitute(&labels)
    }

    pub fn subdivide_to_edgelets(&self) -> EdgeletGraph {
        EdgeletGraph::subdivide(self)
    }

    /// Folds the edgelet graph completely and reports what the marking is.
    pub fn validate_marking(&self) -> MarkingReport {
        self.subdivide_to_edgelets().validate()
    }
}

/// Result of collapsing a spanning tree.
#[derive(Clone, Debug)]
pub struct Collapse {
    pub rose: LabeledRose,
    /// Label of the tree path from the basepoint to each vertex.
    pub tree_paths: Vec<Word>,
    /// Quotient map on edges: tree edges vanish, the rest become petals.
    pub edge_to_petal: Vec<Option<usize>>,
    /// Each petal as a closed edge path in the original graph.
    pub petal_paths: Vec<Word>,
}

impl Collapse {
    /// Image of an edge path under the quotient map, as a word over petals.
    pub fn map_edge_path(&self, path: &Word) -> Word {
        Word::reduce(path.letters().iter().filter_map(|l| {
            self.edge_to_petal[l.index() - 1].map(|p| Letter::new(p + 1, l.is_inverse()))
        }))
    }
}

/// A one-vertex labeled graph whose labels form a basis. Equality ignores
/// the name.
#[derive(Clone, Debug)]
pub struct LabeledRose {
    name: String,
    basis: Basis,
}

impl LabeledRose {
    pub fn new(name: impl Into<String>, basis: Basis) -> LabeledRose {
        LabeledRose {
            name: name.into(),
            basis,
        }
    }

    pub fn standard(rank: usize) -> LabeledRose {
        LabeledRose::new("R0", Basis::standard(rank))
    }

    pub fn from_labels(labels: &[&str]) -> Result<LabeledRose> {
        Ok(LabeledRose::new("rose", Basis::parse(labels)?))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> LabeledRose {
        self.name = name.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn labels(&self) -> &[Word] {
        self.basis.elements()
    }

    pub fn label(&self, i: usize) -> &Word {
        self.basis.element(i)
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn is_standard(&self) -> bool {
        self.basis.is_standard()
    }

    pub fn to_graph(&self) -> LabeledGraph {
        LabeledGraph::rose(self.name.clone(), self.rank(), self.labels()).expect("rose graph")
    }

    /// `ℓ_R(α)`: cyclic length of `α` rewritten in the labels.
    pub fn combinatorial_length(&self, alpha: &Loop) -> Result<usize> {
        let coords = self.basis.rewrite(alpha.representative())?;
        let (core, _) = coords.cyclic_reduce();
        if core.is_identity() {
            return Err(Error::TrivialLoop);
        }
        Ok(core.len())
    }

    pub fn total_label_len(&self) -> usize {
        self.labels().iter().map(Word::len).sum()
    }
}

impl PartialEq for LabeledRose {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for LabeledRose {}

impl fmt::Display for LabeledRose {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn theta() -> LabeledGraph {
        let edges = vec![
            Edge {
                id: 0,
                from: 0,
                to: 1,
                label: w("ab"),
            },
            Edge {
                id: 1,
                from: 0,
                to: 1,
                label: w("abab"),
            },
            Edge {
                id: 2,
                from: 0,
                to: 1,
                label: w("b"),
            },
        ];
        LabeledGraph::new("theta", 2, vec![0, 1], edges, 0).unwrap()
    }

    #[test]
    fn edgelet_counts() {
        let r = LabeledGraph::rose("r", 3, &[w("a"), w("b"), w("cababab")]).unwrap();
        assert_eq!(r.subdivide_to_edgelets().edgelet_count(), 9);
        let r = LabeledGraph::rose("r", 3, &[w("abb"), w("b"), w("c")]).unwrap();
        assert_eq!(r.subdivide_to_edgelets().edgelet_count(), 5);
        let std = LabeledRose::standard(3).to_graph();
        let e = std.subdivide_to_edgelets();
        assert_eq!(e.edgelet_count(), 3);
        assert_eq!(e.vertex_count(), 1);
    }

    #[test]
    fn theta_collapse_keeps_marking() {
        let g = theta();
        let c = g.collapse_spanning_tree().unwrap();
        assert_eq!(c.rose.rank(), 2);
        // Edge 0 is the tree; petals read abab·(ab)⁻¹ and b·(ab)⁻¹.
        assert_eq!(c.rose.labels(), &[w("ab"), w("A")]);
        // Oracle: every closed edge path at the base of length <= 4 reads the
        // same element in the graph and, through the quotient map, in the rose.
        for path in crate::word::tests::all_words(3, 4) {
            let mut at = g.base();
            let mut closed = true;
            for l in path.letters() {
                let e = &g.edges()[l.index() - 1];
                let (a, b) = if l.is_inverse() {
                    (e.to, e.from)
                } else {
                    (e.from, e.to)
                };
                if a != at {
                    closed = false;
                    break;
                }
                at = b;
            }
            if !closed || at != g.base() {
                continue;
            }
            let read = g.read_edge_path(&path);
            let petals = c.map_edge_path(&path);
            assert_eq!(c.rose.basis().evaluate(&petals), read, "{path:?}");
        }
    }

    #[test]
    fn rose_collapse_is_identity() {
        let r = LabeledRose::from_labels(&["abb", "b", "c"]).unwrap();
        let c = r.to_graph().collapse_spanning_tree().unwrap();
        assert_eq!(c.rose.labels(), r.labels());
    }

    #[test]
    fn subdivided_petal_collapses_back() {
        let edges = vec![
            Edge {
                id: 0,
                from: 0,
                to: 0,
                label: w("a"),
            },
            Edge {
                id: 1,
                from: 0,
                to: 1,
                label: w("b"),
            },
            Edge {
                id: 2,
                from: 1,
                to: 0,
                label: w("ca"),
            },
            Edge {
                id: 3,
                from: 0,
                to: 0,
                label: w("c"),
            },
        ];
        let g = LabeledGraph::new("split", 3, vec![0, 1], edges, 0).unwrap();
        let c = g.collapse_spanning_tree().unwrap();
        assert_eq!(c.rose.labels(), &[w("a"), w("bca"), w("c")]);
        let bad = vec![Edge {
            id: 0,
            from: 0,
            to: 1,
            label: w("a"),
        }];
        assert_eq!(
            LabeledGraph::new("t", 1, vec![0, 1], bad, 0),
            Err(Error::RankMismatch { left: 0, right: 1 })
        );
    }

    #[test]
    fn combinatorial_length_examples() {
        let r0 = LabeledRose::standard(3);
        assert_eq!(
            r0.combinatorial_length(&Loop::parse("abab").unwrap()),
            Ok(4)
        );
        let r = LabeledRose::from_labels(&["abb", "b", "c"]).unwrap();
        assert_eq!(r.combinatorial_length(&Loop::parse("a").unwrap()), Ok(3));
        let r = LabeledRose::from_labels(&["a", "b", "cababab"]).unwrap();
        assert_eq!(r.combinatorial_length(&Loop::parse("ab").unwrap()), Ok(2));
        // Theta graph: a = ab·b⁻¹ crosses two edges; b needs all four
        // half-turns since no two-edge loop reads a conjugate of b.
        let g = theta();
        assert_eq!(g.combinatorial_length(&Loop::parse("a").unwrap()), Ok(2));
        assert_eq!(g.combinatorial_length(&Loop::parse("b").unwrap()), Ok(4));
    }

    #[test]
    fn graph_length_of_rose_matches_rose_length() {
        let r = LabeledRose::from_labels(&["abb", "bc", "c"]).unwrap();
        let g = r.to_graph();
        for x in crate::word::tests::all_words(3, 4).into_iter().skip(1) {
            let Ok(a) = Loop::new(&x) else { continue };
            assert_eq!(g.combinatorial_length(&a), r.combinatorial_length(&a));
        }
    }

    #[test]
    fn standard_length_is_core_length() {
        let r0 = LabeledRose::standard(2);
        for x in crate::word::tests::all_words(2, 8).into_iter().skip(1) {
            let (core, _) = x.cyclic_reduce();
            if core.is_identity() {
                continue;
            }
            let a = Loop::new(&x).unwrap();
            assert_eq!(r0.combinatorial_length(&a), Ok(core.len()));
        }
    }
}
