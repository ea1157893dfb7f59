//! Brute-force twist: cut the tree of `R` along a truncated frontier, use
//! each frontier vertex as a stand-in for the boundary points behind it, and
//! test every nearby edge of the tree of `R₀` against every axis edge
//! directly through the four quadrants.

use std::collections::HashMap;

use outfold::graph::LabeledRose;
use outfold::word::{Letter, Loop, Word};

#[derive(Clone, Copy)]
struct Span(i64, i64);

impl Span {
    const EMPTY: Span = Span(i64::MAX, i64::MIN);

    fn join(self, o: Span) -> Span {
        Span(self.0.min(o.0), self.1.max(o.1))
    }

    fn is_empty(self) -> bool {
        self.0 > self.1
    }
}

/// Index of the closest point of the axis of `w` (cyclically reduced, through
/// the origin) to the vertex `v`.
fn axis_index(v: &[Letter], w: &[Letter]) -> i64 {
    let l = w.len();
    let fwd = (0..v.len()).take_while(|&i| v[i] == w[i % l]).count();
    if fwd > 0 {
        return fwd as i64;
    }
    let back = (0..v.len())
        .take_while(|&i| v[i] == w[l - 1 - i % l].inverse())
        .count();
    -(back as i64)
}

pub struct Oracle {
    /// Cut depth in the tree of `R`; axis indices are clipped to it.
    pub depth: usize,
    /// Steps taken off the axis before a vertex is settled regardless.
    pub reach: usize,
    /// Base-tree edges are tried out to this far past the axis of `α` in
    /// the tree of `R₀`.
    pub margin: usize,
}

struct Walk<'a> {
    oracle: &'a Oracle,
    w: Vec<Letter>,
    /// Image of each letter symbol of `R`, inverses included.
    images: Vec<Vec<Letter>>,
    prefix: usize,
    slack: usize,
    symbols: usize,
    /// Axis indices seen per frontier prefix, keyed by base-7 code and length.
    leaves: HashMap<(u64, usize), Span>,
}

impl Walk<'_> {
    fn visit(&mut self, v: &mut Vec<Letter>, b: &mut Vec<Letter>) {
        let x = axis_index(v, &self.w);
        let off = v.len() - x.unsigned_abs() as usize;
        // Off the axis the projection is fixed, and a long enough image
        // fixes the cylinder of every boundary point behind `v`.
        let settled = off > 0 && (b.len() >= self.prefix + self.slack || off >= self.oracle.reach);
        if settled || v.len() >= self.oracle.depth {
            let n = self.prefix.min(b.len());
            let key = b[..n]
                .iter()
                .fold(0u64, |c, l| c * 7 + l.symbol() as u64 + 1);
            let e = self.leaves.entry((key, n)).or_insert(Span::EMPTY);
            *e = e.join(Span(x, x));
            return;
        }
        for sym in 0..self.symbols {
            let l = Letter::from_symbol(sym);
            if v.last() == Some(&l.inverse()) {
                continue;
            }
            let (mut popped, mut pushed) = (Vec::new(), 0);
            for i in 0..self.images[sym].len() {
                let y = self.images[sym][i];
                if pushed == 0 && b.last() == Some(&y.inverse()) {
                    popped.push(b.pop().unwrap());
                } else {
                    b.push(y);
                    pushed += 1;
                }
            }
            v.push(l);
            self.visit(v, b);
            v.pop();
            b.truncate(b.len() - pushed);
            b.extend(popped.into_iter().rev());
        }
    }
}

impl Oracle {
    /// `(numerator, denominator)` of the twist of `α` in `R` relative to `R₀`.
    pub fn twist(&self, r: &LabeledRose, r0: &LabeledRose, alpha: &Loop) -> (u64, u64) {
        let rep = alpha.representative();
        let coords = r.basis().rewrite(rep).unwrap();
        assert_eq!(&r.basis().evaluate(&coords), rep);
        let (w, _) = coords.cyclic_reduce();

        // Each letter of R in R₀ coordinates, checked by substitution.
        let images: Vec<Word> = r
            .labels()
            .iter()
            .map(|x| {
                let b = r0.basis().rewrite(x).unwrap();
                assert_eq!(&r0.basis().evaluate(&b), x);
                b
            })
            .collect();
        let (core0, conj0) = w.substitute(&images).cyclic_reduce();
        let mut walk = Walk {
            oracle: self,
            w: w.letters().to_vec(),
            images: (0..2 * r.rank())
                .map(|s| {
                    let l = Letter::from_symbol(s);
                    let b = &images[l.index() - 1];
                    let b = if l.is_inverse() {
                        b.inverse()
                    } else {
                        b.clone()
                    };
                    b.letters().to_vec()
                })
                .collect(),
            prefix: (conj0.len() + core0.len() + self.margin).min(22),
            slack: images.iter().map(Word::len).max().unwrap_or(1),
            symbols: 2 * r.rank(),
            leaves: HashMap::new(),
        };
        walk.visit(&mut Vec::new(), &mut Vec::new());

        // Spans of whole cylinders: every leaf counts for all its ancestors.
        let mut inside: HashMap<u64, Span> = HashMap::new();
        for (&(mut key, n), &sp) in &walk.leaves {
            for _ in 0..n {
                let e = inside.entry(key).or_insert(Span::EMPTY);
                *e = e.join(sp);
                key /= 7;
            }
        }

        // Complement of each cylinder: the parent's complement plus siblings.
        let mut best = 0i64;
        let mut level = vec![(0u64, Span::EMPTY)];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &(parent, outside) in &level {
                let kids: Vec<(u64, Span)> = (0..walk.symbols as u64)
                    .filter_map(|s| {
                        let c = parent * 7 + s + 1;
                        inside.get(&c).map(|&sp| (c, sp))
                    })
                    .collect();
                for &(c, sp) in &kids {
                    let out = kids
                        .iter()
                        .filter(|k| k.0 != c)
                        .fold(outside, |acc, k| acc.join(k.1));
                    if !out.is_empty() {
                        best = best.max(sp.1.min(out.1) - sp.0.max(out.0));
                    }
                    next.push((c, out));
                }
            }
            level = next;
        }
        (best.max(0) as u64, w.len() as u64)
    }
}
