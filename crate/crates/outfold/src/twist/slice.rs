use std::collections::HashSet;

use serde::Serialize;

use super::Dfa;
use crate::word::{Basis, Letter, Word};

/// Edges of the standard tree that form an intersection square with the
/// origin edge `(ε, xᵢ)` of the tree of a basis. Each edge is named by the
/// reduced word of its far endpoint.
#[derive(Clone, Debug, Serialize)]
pub struct OriginSlice {
    pub petal: usize,
    pub edges: Vec<Word>,
    /// Longest edge name found.
    pub depth: usize,
    /// Set when the search stopped at the depth budget with mixed prefixes
    /// left unexplored, in which case `edges` may be incomplete.
    pub truncated: bool,
}

impl OriginSlice {
    pub fn contains(&self, set: &HashSet<Word>, e: &Word) -> bool {
        debug_assert_eq!(set.len(), self.edges.len());
        set.contains(e)
    }

    pub fn edge_set(&self) -> HashSet<Word> {
        self.edges.iter().cloned().collect()
    }
}

struct Search<'a> {
    dfa: &'a Dfa,
    inf_acc: Vec<bool>,
    inf_rej: Vec<bool>,
    budget: usize,
    out: Vec<Word>,
    truncated: bool,
}

impl Search<'_> {
    fn live(&self, q: u32) -> Vec<(Letter, u32)> {
        let rank = self.dfa.rank();
        (0..2 * rank)
            .map(Letter::from_symbol)
            .map(|l| (l, self.dfa.step(q, l)))
            .filter(|&(_, r)| !self.dfa.is_trap(r))
            .collect()
    }

    /// `out_acc`/`out_rej`: whether the complement of the cylinder of `p`
    /// already holds infinitely many accepted/rejected words.
    fn visit(&mut self, p: &mut Vec<Letter>, q: u32, out_acc: bool, out_rej: bool) {
        let kids = self.live(q);
        for &(l, r) in &kids {
            if !(self.inf_acc[r as usize] && self.inf_rej[r as usize]) {
                continue;
            }
            if p.len() + 1 > self.budget {
                self.truncated = true;
                continue;
            }
            let sib = |t: &Vec<bool>| kids.iter().any(|&(m, s)| m != l && t[s as usize]);
            let acc = out_acc || sib(&self.inf_acc);
            let rej = out_rej || sib(&self.inf_rej);
            p.push(l);
            if acc && rej {
                self.out.push(Word::reduce(p.iter().copied()));
            }
            self.visit(p, r, acc, rej);
            p.pop();
        }
    }
}

/// Enumerates the slice of `(ε, xᵢ)` exactly, by depth-first search over
/// prefixes whose cylinder meets both sides of the partition infinitely.
/// Those prefixes form a finite subtree; `budget` caps its depth.
pub fn origin_slice(basis: &Basis, petal: usize, budget: usize) -> OriginSlice {
    let dfa = Dfa::cone(basis, &Word::gen(petal + 1));
    let inf_acc = dfa.infinite_table();
    let inf_rej = dfa.complement().infinite_table();
    let mut s = Search {
        dfa: &dfa,
        inf_acc,
        inf_rej,
        budget,
        out: Vec::new(),
        truncated: false,
    };
    s.visit(&mut Vec::new(), dfa.start(), false, false);
    let mut edges = s.out;
    edges.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let depth = edges.last().map_or(0, Word::len);
    OriginSlice {
        petal,
        edges,
        depth,
        truncated: s.truncated,
    }
}
