use std::collections::HashMap;

use super::{Letter, Word};
use crate::error::{Error, Result};

/// Folded provenance-tracking graph of a basis rose.
///
/// Every edgelet carries a word over the basis alphabet `x₁..x_n`, and a
/// closed path at the basepoint multiplies those words together. Folding is
/// done up to a gauge change at the vertex being absorbed, so the product
/// along any closed basepoint path is preserved. When the basis is genuine
/// the graph folds to the standard rose, whose loop `sᵢ` then carries the
/// basis coordinates of `sᵢ`.
#[derive(Clone, Debug)]
pub struct BasisRewriter {
    rank: usize,
    /// Coordinates of each standard generator in the basis alphabet.
    coords: Vec<Word>,
}

#[derive(Clone, Debug)]
struct Edgelet {
    from: usize,
    to: usize,
    letter: Letter,
    prov: Word,
}

#[derive(Clone, Copy, Debug)]
struct Half {
    edge: usize,
    forward: bool,
}

struct Graph {
    edges: Vec<Option<Edgelet>>,
    base: usize,
}

impl Graph {
    fn half_target(&self, h: Half) -> usize {
        let e = self.edges[h.edge].as_ref().unwrap();
        if h.forward {
            e.to
        } else {
            e.from
        }
    }

    fn half_prov(&self, h: Half) -> Word {
        let e = self.edges[h.edge].as_ref().unwrap();
        if h.forward {
            e.prov.clone()
        } else {
            e.prov.inverse()
        }
    }

    fn find_conflict(&self) -> Option<(usize, Half, Half)> {
        let mut seen: HashMap<(usize, Letter), Half> = HashMap::new();
        let mut best: Option<(usize, Letter, Half, Half)> = None;
        for (id, e) in self.edges.iter().enumerate() {
            let Some(e) = e else { continue };
            for (v, l, h) in [
                (
                    e.from,
                    e.letter,
                    Half {
                        edge: id,
                        forward: true,
                    },
                ),
                (
                    e.to,
                    e.letter.inverse(),
                    Half {
                        edge: id,
                        forward: false,
                    },
                ),
            ] {
                if let Some(prev) = seen.get(&(v, l)) {
                    let cand = (v, l, *prev, h);
                    if best.as_ref().is_none_or(|b| (v, l) < (b.0, b.1)) {
                        best = Some(cand);
                    }
                } else {
                    seen.insert((v, l), h);
                }
            }
        }
        best.map(|(v, _, a, b)| (v, a, b))
    }

    fn gauge(&mut self, u: usize, g: &Word) {
        let gi = g.inverse();
        for e in self.edges.iter_mut().flatten() {
            if e.from == u {
                e.prov = g.mul(&e.prov);
            }
            if e.to == u {
                e.prov = e.prov.mul(&gi);
            }
        }
    }

    fn merge(&mut self, gone: usize, keep: usize) {
        for e in self.edges.iter_mut().flatten() {
            if e.from == gone {
                e.from = keep;
            }
            if e.to == gone {
                e.to = keep;
            }
        }
    }

    /// Returns `false` when a fold would collapse two parallel edgelets,
    /// which can only happen when the tuple is not a basis.
    fn fold_once(&mut self) -> Option<bool> {
        let (v, mut h1, mut h2) = self.find_conflict()?;
        let (mut u1, mut u2) = (self.half_target(h1), self.half_target(h2));
        if u1 == u2 {
            return Some(false);
        }
        if u2 == self.base || (u2 == v && u1 != self.base) {
            std::mem::swap(&mut h1, &mut h2);
            std::mem::swap(&mut u1, &mut u2);
        }
        let g = self.half_prov(h1).inverse().mul(&self.half_prov(h2));
        self.gauge(u2, &g);
        self.merge(u2, u1);
        self.edges[h2.edge] = None;
        Some(true)
    }
}

impl BasisRewriter {
    /// Folds the rose labeled by `elements` and certifies that the labels
    /// form a basis of the free group of rank `rank`.
    pub fn new(elements: &[Word], rank: usize) -> Result<BasisRewriter> {
        if elements.len() != rank {
            return Err(Error::WrongArity {
                found: elements.len(),
                rank,
            });
        }
        let mut edges = Vec::new();
        let mut next_vertex = 1;
        for (i, w) in elements.iter().enumerate() {
            if w.is_identity() {
                return Err(Error::NotABasis {
                    reason: format!("element {} is trivial", i + 1),
                });
            }
            if w.max_index() > rank {
                return Err(Error::RankExceeded {
                    index: w.max_index(),
                    rank,
                });
            }
            let mut cur = 0;
            for (pos, &l) in w.letters().iter().enumerate() {
                let nxt = if pos + 1 == w.len() {
                    0
                } else {
                    next_vertex += 1;
                    next_vertex - 1
                };
                let prov = if pos == 0 {
                    Word::gen(i + 1)
                } else {
                    Word::identity()
                };
                let e = if l.is_inverse() {
                    Edgelet {
                        from: nxt,
                        to: cur,
                        letter: l.inverse(),
                        prov: prov.inverse(),
                    }
                } else {
                    Edgelet {
                        from: cur,
                        to: nxt,
                        letter: l,
                        prov,
                    }
                };
                edges.push(Some(e));
                cur = nxt;
            }
        }
        let mut g = Graph { edges, base: 0 };
        while let Some(ok) = g.fold_once() {
            if !ok {
                return Err(Error::NotABasis {
                    reason: "folding identifies two parallel edgelets (rank drops)".into(),
                });
            }
        }
        let live: Vec<&Edgelet> = g.edges.iter().flatten().collect();
        let mut coords = vec![None; rank];
        for e in &live {
            if e.from != 0 || e.to != 0 {
                return Err(Error::NotABasis {
                    reason: "folded graph is not the standard rose".into(),
                });
            }
            coords[e.letter.index() - 1] = Some(e.prov.clone());
        }
        if live.len() != rank || coords.iter().any(|c| c.is_none()) {
            return Err(Error::NotABasis {
                reason: format!("folded graph has {} petals, expected {}", live.len(), rank),
            });
        }
        Ok(BasisRewriter {
            rank,
            coords: coords.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Basis coordinates of each standard generator.
    pub fn generator_coords(&self) -> &[Word] {
        &self.coords
    }

    /// Traces `w` through the folded graph and reads off provenance.
    pub fn rewrite(&self, w: &Word) -> Result<Word> {
        if w.max_index() > self.rank {
            return Err(Error::RankExceeded {
                index: w.max_index(),
                rank: self.rank,
            });
        }
        Ok(w.substitute(&self.coords))
    }
}
