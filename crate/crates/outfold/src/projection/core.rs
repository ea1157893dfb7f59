use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// A directed edge read forward with a positive letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoreEdge {
    pub from: usize,
    pub to: usize,
    pub gen: usize,
}

/// A folded graph of a finitely generated subgroup: reading a word from the
/// base and returning to it is membership.
#[derive(Clone, Debug)]
pub struct SubgroupGraph {
    rank: usize,
    vertices: usize,
    edges: Vec<CoreEdge>,
    base: usize,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl SubgroupGraph {
    /// Wedge of loops spelling the generators, folded.
    pub fn from_generators(gens: &[Word], rank: usize) -> SubgroupGraph {
        let mut vertices = 1;
        let mut raw = Vec::new();
        for g in gens {
            let mut at = 0;
            for (i, &l) in g.letters().iter().enumerate() {
                let next = if i + 1 == g.len() {
                    0
                } else {
                    vertices += 1;
                    vertices - 1
                };
                let (from, to) = if l.is_inverse() {
                    (next, at)
                } else {
                    (at, next)
                };
                raw.push(CoreEdge {
                    from,
                    to,
                    gen: l.index(),
                });
                at = next;
            }
        }
        let mut parent: Vec<usize> = (0..vertices).collect();
        // Identify edges with a common endpoint and label until none remain.
        loop {
            let mut merged = false;
            let mut seen: std::collections::HashMap<(usize, usize, bool), usize> =
                Default::default();
            for e in &raw {
                let (f, t) = (find(&mut parent, e.from), find(&mut parent, e.to));
                for (key, other) in [((f, e.gen, true), t), ((t, e.gen, false), f)] {
                    match seen.get(&key) {
                        Some(&o) => {
                            let (a, b) = (find(&mut parent, o), find(&mut parent, other));
                            if a != b {
                                parent[a.max(b)] = a.min(b);
                                merged = true;
                            }
                        }
                        None => {
                            seen.insert(key, other);
                        }
                    }
                }
            }
            if !merged {
                break;
            }
        }
        let mut ids = vec![usize::MAX; vertices];
        let mut count = 0;
        for v in 0..vertices {
            let r = find(&mut parent, v);
            if ids[r] == usize::MAX {
                ids[r] = count;
                count += 1;
            }
        }
        let mut edges: Vec<CoreEdge> = Vec::new();
        for e in raw {
            let c = CoreEdge {
                from: ids[find(&mut parent, e.from)],
                to: ids[find(&mut parent, e.to)],
                gen: e.gen,
            };
            if !edges.contains(&c) {
                edges.push(c);
            }
        }
        SubgroupGraph {
            rank,
            vertices: count,
            edges,
            base: ids[find(&mut parent, 0)],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[CoreEdge] {
        &self.edges
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices
    }

    /// The edge leaving `v` along letter `l`, as (edge index, endpoint).
    pub fn step(&self, v: usize, l: Letter) -> Option<(usize, usize)> {
        self.edges.iter().enumerate().find_map(|(i, e)| {
            if e.gen != l.index() {
                None
            } else if !l.is_inverse() && e.from == v {
                Some((i, e.to))
            } else if l.is_inverse() && e.to == v {
                Some((i, e.from))
            } else {
                None
            }
        })
    }

    /// End of the path spelling `w` from `v`, if it exists.
    pub fn read_from(&self, v: usize, w: &Word) -> Option<usize> {
        w.letters()
            .iter()
            .try_fold(v, |at, &l| self.step(at, l).map(|(_, to)| to))
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.read_from(self.base, w) == Some(self.base)
    }

    /// Breadth-first spanning tree from the base, as a flag per edge.
    pub(crate) fn spanning_tree(&self) -> Vec<bool> {
        let mut in_tree = vec![false; self.edges.len()];
        let mut seen = vec![false; self.vertices];
        seen[self.base] = true;
        let mut queue = VecDeque::from([self.base]);
        while let Some(v) = queue.pop_front() {
            for (i, e) in self.edges.iter().enumerate() {
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        in_tree[i] = true;
                        queue.push_back(b);
                    }
                }
            }
        }
        in_tree
    }

    /// Vertices of the core: repeatedly removes vertices of degree at most
    /// one, the base included.
    pub fn core_vertices(&self) -> Vec<bool> {
        let mut alive = vec![true; self.vertices];
        let mut degree = vec![0usize; self.vertices];
        for e in &self.edges {
            degree[e.from] += 1;
            degree[e.to] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertices).filter(|&v| degree[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for e in &self.edges {
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == v && alive[b] && b != v {
                        degree[b] -= 1;
                        if degree[b] == 1 {
                            stack.push(b);
                        }
                    }
                }
            }
        }
        alive
    }
}

/// Folded graph of a subgroup restricted to its core, with the edges outside
/// a spanning tree naming a basis of the subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupCore {
    #[serde(skip)]
    pub graph: SubgroupGraph,
    /// Edges of the core, as indices into `graph.edges()`.
    pub core_edges: Vec<usize>,
    pub core_vertices: usize,
    /// For each edge, the graph-basis generator it crosses, if any.
    #[serde(skip)]
    pub(crate) crossing: Vec<Option<usize>>,
    /// Abelianised graph-basis images of the subgroup's generators.
    pub generator_matrix: [[i64; 2]; 2],
}

impl SubgroupCore {
    /// The core of the subgroup generated by `gens`, which must have rank 2.
    pub fn new(gens: &[Word], rank: usize) -> Result<SubgroupCore> {
        let graph = SubgroupGraph::from_generators(gens, rank);
        if gens.len() != 2 || graph.betti() != 2 {
            return Err(Error::FactorRank(graph.betti()));
        }
        let in_tree = graph.spanning_tree();
        let mut crossing = vec![None; graph.edges().len()];
        let mut next = 0;
        for (i, t) in in_tree.iter().enumerate() {
            if !t {
                crossing[i] = Some(next);
                next += 1;
            }
        }
        let alive = graph.core_vertices();
        let core_edges: Vec<usize> = (0..graph.edges().len())
            .filter(|&i| alive[graph.edges()[i].from] && alive[graph.edges()[i].to])
            .collect();
        let mut core = SubgroupCore {
            core_vertices: alive.iter().filter(|a| **a).count(),
            graph,
            core_edges,
            crossing,
            generator_matrix: [[0; 2]; 2],
        };
        for (row, g) in gens.iter().enumerate() {
            core.generator_matrix[row] = core
                .abelianize_path(core.graph.base(), g)
                .expect("generator is a loop");
        }
        let det = core.det();
        if det.abs() != 1 {
            return Err(Error::NotABasis {
                reason: format!("generators span index {} in their graph", det.abs()),
            });
        }
        Ok(core)
    }

    fn det(&self) -> i64 {
        let m = self.generator_matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Graph-basis word of the path spelling `w` from `v`, as a sequence of
    /// signed generator crossings.
    pub fn crossings(&self, v: usize, w: &Word) -> Option<Vec<(usize, bool)>> {
        let mut at = v;
        let mut out = Vec::new();
        for &l in w.letters() {
            let (i, to) = self.graph.step(at, l)?;
            if let Some(c) = self.crossing[i] {
                out.push((c, l.is_inverse()));
            }
            at = to;
        }
        Some(out)
    }

    fn abelianize_path(&self, v: usize, w: &Word) -> Option<[i64; 2]> {
        let mut out = [0; 2];
        for (c, inv) in self.crossings(v, w)? {
            out[c] += if inv { -1 } else { 1 };
        }
        Some(out)
    }

    /// Coordinates, with respect to the generators, of a graph-basis
    /// abelian vector.
    pub fn to_generator_coords(&self, v: [i64; 2]) -> [i64; 2] {
        // Solve s·M = v with det M = ±1.
        let m = self.generator_matrix;
        let d = self.det();
        [
            (v[0] * m[1][1] - v[1] * m[1][0]) * d,
            (v[1] * m[0][0] - v[0] * m[0][1]) * d,
        ]
    }

    pub fn core_edge_count(&self) -> usize {
        self.core_edges.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn folding_examples() {
        let g = SubgroupGraph::from_generators(&[w("a"), w("b")], 3);
        assert_eq!((g.vertex_count(), g.edges().len()), (1, 2));
        let g = SubgroupGraph::from_generators(&[w("aab"), w("ab")], 2);
        assert_eq!((g.vertex_count(), g.edges().len()), (1, 2));
        let g = SubgroupGraph::from_generators(&[w("aa"), w("bb")], 2);
        assert_eq!(g.betti(), 2);
        assert!(g.contains(&w("aabb")));
        assert!(!g.contains(&w("ab")));
    }

    #[test]
    fn core_prunes_hair() {
        let g = SubgroupGraph::from_generators(&[w("caC"), w("cbC")], 3);
        assert_eq!(g.vertex_count(), 2);
        let alive = g.core_vertices();
        assert_eq!(alive.iter().filter(|a| **a).count(), 1);
        assert!(!alive[g.base()]);
    }

    #[test]
    fn generator_coordinates() {
        let core = SubgroupCore::new(&[w("ab"), w("b")], 2).unwrap();
        let v = core.crossings(core.graph.base(), &w("a")).unwrap();
        let mut ab = [0; 2];
        for (c, inv) in v {
            ab[c] += if inv { -1 } else { 1 };
        }
        // a = (ab)·b⁻¹
        assert_eq!(core.to_generator_coords(ab), [1, -1]);
        assert!(matches!(
            SubgroupCore::new(&[w("a")], 2),
            Err(Error::FactorRank(1))
        ));
    }
}
