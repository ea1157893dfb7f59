//! Finite automata over reduced words.
//!
//! Every [`Dfa`] here is complete over the signed alphabet of its rank and
//! sends exactly the non-reduced words to a non-accepting trap state. That
//! makes complement within the reduced-word universe a flip of the accept
//! flags away from the trap.

use std::collections::{HashMap, VecDeque};

use crate::word::{Basis, Letter, Word};

#[derive(Clone, Debug, Default)]
struct NfaState {
    trans: Vec<(u8, u32)>,
    eps: Vec<u32>,
    accept: bool,
}

/// Nondeterministic automaton with ε-moves over symbols `0..2n`.
#[derive(Clone, Debug)]
struct Nfa {
    states: Vec<NfaState>,
}

impl Nfa {
    fn add(&mut self) -> u32 {
        self.states.push(NfaState::default());
        (self.states.len() - 1) as u32
    }

    fn edge(&mut self, from: u32, sym: usize, to: u32) {
        let t = &mut self.states[from as usize].trans;
        if !t.contains(&(sym as u8, to)) {
            t.push((sym as u8, to));
        }
    }

    fn closure(&self, set: &mut Vec<u32>) {
        let mut seen = vec![false; self.states.len()];
        for &s in set.iter() {
            seen[s as usize] = true;
        }
        let mut stack = set.clone();
        while let Some(s) = stack.pop() {
            for &t in &self.states[s as usize].eps {
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    set.push(t);
                    stack.push(t);
                }
            }
        }
        set.sort_unstable();
    }

    fn step(&self, set: &[u32], sym: usize) -> Vec<u32> {
        let mut out = Vec::new();
        for &s in set {
            for &(a, t) in &self.states[s as usize].trans {
                if a as usize == sym && !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        self.closure(&mut out);
        out
    }

    /// Adds ε-moves across every path reading a letter then its inverse,
    /// until closed. Afterwards the reduced words accepted are exactly the
    /// free reductions of the words accepted before.
    fn saturate(&mut self, alphabet: usize) {
        loop {
            let mut added = false;
            for p in 0..self.states.len() as u32 {
                let mut start = vec![p];
                self.closure(&mut start);
                for a in 0..alphabet {
                    let mid = self.step(&start, a);
                    if mid.is_empty() {
                        continue;
                    }
                    for r in self.step(&mid, a ^ 1) {
                        if r != p && !self.states[p as usize].eps.contains(&r) {
                            self.states[p as usize].eps.push(r);
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
    }
}

/// Complete deterministic automaton over reduced words.
#[derive(Clone, Debug)]
pub struct Dfa {
    alphabet: usize,
    trans: Vec<u32>,
    accept: Vec<bool>,
    start: u32,
    trap: u32,
}

impl Dfa {
    pub fn rank(&self) -> usize {
        self.alphabet / 2
    }

    pub fn state_count(&self) -> usize {
        self.accept.len()
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn is_trap(&self, q: u32) -> bool {
        q == self.trap
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accept[q as usize]
    }

    pub fn step(&self, q: u32, l: Letter) -> u32 {
        self.trans[q as usize * self.alphabet + l.symbol()]
    }

    fn step_sym(&self, q: u32, sym: usize) -> u32 {
        self.trans[q as usize * self.alphabet + sym]
    }

    pub fn run(&self, w: &Word) -> u32 {
        w.letters().iter().fold(self.start, |q, &l| self.step(q, l))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.accept[self.run(w) as usize]
    }

    /// All reduced words.
    pub fn universe(rank: usize) -> Dfa {
        let alphabet = 2 * rank;
        // states: 0 start, 1..=2n last letter, 2n+1 trap
        let trap = alphabet as u32 + 1;
        let mut trans = Vec::with_capacity((alphabet + 2) * alphabet);
        for q in 0..alphabet + 2 {
            for a in 0..alphabet {
                let t = if q as u32 == trap || (q >= 1 && (q - 1) == a ^ 1) {
                    trap
                } else {
                    a as u32 + 1
                };
                trans.push(t);
            }
        }
        let mut accept = vec![true; alphabet + 2];
        accept[trap as usize] = false;
        Dfa {
            alphabet,
            trans,
            accept,
            start: 0,
            trap,
        }
    }

    /// Free reductions of `θ(Q·u)`, with `u` ranging over reduced words in the
    /// basis letters that do not begin with the inverse of the last letter of
    /// `Q`. Here `θ` substitutes the basis elements.
    pub fn cone(basis: &Basis, q: &Word) -> Dfa {
        let rank = basis.rank();
        let alphabet = 2 * rank;
        let mut nfa = Nfa { states: Vec::new() };
        let start = nfa.add();
        let mut cur = start;
        for &l in basis.evaluate(q).letters() {
            let nxt = nfa.add();
            nfa.edge(cur, l.symbol(), nxt);
            cur = nxt;
        }
        let entry = cur;
        let hubs: Vec<u32> = (0..alphabet).map(|_| nfa.add()).collect();
        // Spelled image of each basis symbol: first S-letter and the rest.
        let images: Vec<Word> = (0..alphabet)
            .map(|z| {
                let l = Letter::from_symbol(z);
                let b = basis.element(l.index() - 1);
                if l.is_inverse() {
                    b.inverse()
                } else {
                    b.clone()
                }
            })
            .collect();
        let mut heads = Vec::with_capacity(alphabet);
        for (z, img) in images.iter().enumerate() {
            // chain from the second letter to hub z
            let letters = img.letters();
            let mut after_first = hubs[z];
            if letters.len() > 1 {
                let chain: Vec<u32> = (1..letters.len()).map(|_| nfa.add()).collect();
                after_first = chain[0];
                for i in 1..letters.len() {
                    let to = if i + 1 < letters.len() {
                        chain[i]
                    } else {
                        hubs[z]
                    };
                    nfa.edge(chain[i - 1], letters[i].symbol(), to);
                }
            }
            heads.push((letters[0].symbol(), after_first));
        }
        let sources: Vec<(u32, Option<usize>)> =
            std::iter::once((entry, q.last().map(|l| l.symbol())))
                .chain(hubs.iter().enumerate().map(|(z, &h)| (h, Some(z))))
                .collect();
        for (src, last) in sources {
            for (z, &(sym, to)) in heads.iter().enumerate() {
                if last == Some(z ^ 1) {
                    continue;
                }
                nfa.edge(src, sym, to);
            }
        }
        nfa.states[entry as usize].accept = true;
        for &h in &hubs {
            nfa.states[h as usize].accept = true;
        }
        nfa.saturate(alphabet);
        Dfa::determinize(&nfa, alphabet, start)
    }

    fn determinize(nfa: &Nfa, alphabet: usize, start: u32) -> Dfa {
        let mut ids: HashMap<(Vec<u32>, u8), u32> = HashMap::new();
        let mut keys: Vec<(Vec<u32>, u8)> = Vec::new();
        // last letter `alphabet` means none
        let none = alphabet as u8;
        let mut s0 = vec![start];
        nfa.closure(&mut s0);
        ids.insert((s0.clone(), none), 0);
        keys.push((s0, none));
        let trap_key = (Vec::new(), u8::MAX);
        let mut trans: Vec<u32> = Vec::new();
        let mut trap = None;
        let mut i = 0;
        while i < keys.len() {
            let (set, last) = keys[i].clone();
            for a in 0..alphabet {
                let key = if last == u8::MAX || (last != none && last as usize == a ^ 1) {
                    trap_key.clone()
                } else {
                    (nfa.step(&set, a), a as u8)
                };
                let id = match ids.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = keys.len() as u32;
                        if key.1 == u8::MAX {
                            trap = Some(id);
                        }
                        ids.insert(key.clone(), id);
                        keys.push(key);
                        id
                    }
                };
                trans.push(id);
            }
            i += 1;
        }
        let accept = keys
            .iter()
            .map(|(set, last)| {
                *last != u8::MAX && set.iter().any(|&s| nfa.states[s as usize].accept)
            })
            .collect();
        let trap = trap.expect("rank >= 1 always reaches the trap");
        Dfa {
            alphabet,
            trans,
            accept,
            start: 0,
            trap,
        }
    }

    /// Complement inside the reduced words.
    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        for (q, a) in d.accept.iter_mut().enumerate() {
            *a = q as u32 != self.trap && !*a;
        }
        d
    }

    fn product(&self, other: &Dfa, op: impl Fn(bool, bool) -> bool) -> Dfa {
        assert_eq!(
            self.alphabet, other.alphabet,
            "automata over different ranks"
        );
        let alphabet = self.alphabet;
        let mut ids: HashMap<(u32, u32), u32> = HashMap::new();
        let mut keys = Vec::new();
        let canon = |p: (u32, u32)| {
            if p.0 == self.trap || p.1 == other.trap {
                (self.trap, other.trap)
            } else {
                p
            }
        };
        let s = canon((self.start, other.start));
        ids.insert(s, 0);
        keys.push(s);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < keys.len() {
            let (a, b) = keys[i];
            for sym in 0..alphabet {
                let k = canon((self.step_sym(a, sym), other.step_sym(b, sym)));
                let id = *ids.entry(k).or_insert_with(|| {
                    keys.push(k);
                    keys.len() as u32 - 1
                });
                trans.push(id);
            }
            i += 1;
        }
        let trap = ids[&(self.trap, other.trap)];
        let accept = keys
            .iter()
            .map(|&(a, b)| {
                a != self.trap
                    && b != other.trap
                    && op(self.accept[a as usize], other.accept[b as usize])
            })
            .collect();
        Dfa {
            alphabet,
            trans,
            accept,
            start: 0,
            trap,
        }
    }

    pub fn intersect(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a || b)
    }

    pub fn difference(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a != b)
    }

    /// Per state: are infinitely many continuations accepted?
    pub fn infinite_table(&self) -> Vec<bool> {
        let n = self.accept.len();
        let succ =
            |q: usize| (0..self.alphabet).map(move |a| self.trans[q * self.alphabet + a] as usize);
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for t in succ(q) {
                pred[t].push(q);
            }
        }
        // states that reach an accepting state
        let mut co = self.accept.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| co[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &pred[q] {
                if !co[p] {
                    co[p] = true;
                    queue.push_back(p);
                }
            }
        }
        // states of `co` on a cycle inside `co`
        let comp = scc(n, |q| succ(q).filter(|&t| co[t] && co[q]).collect());
        let mut size = vec![0usize; n];
        for &c in &comp {
            size[c] += 1;
        }
        let mut inf: Vec<bool> = (0..n)
            .map(|q| co[q] && (size[comp[q]] > 1 || succ(q).any(|t| t == q)))
            .collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| inf[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &pred[q] {
                if !inf[p] && co[p] {
                    inf[p] = true;
                    queue.push_back(p);
                }
            }
        }
        inf
    }

    pub fn is_infinite(&self) -> bool {
        self.infinite_table()[self.start as usize]
    }

    pub fn is_empty(&self) -> bool {
        let mut seen = vec![false; self.accept.len()];
        let mut stack = vec![self.start as usize];
        seen[self.start as usize] = true;
        while let Some(q) = stack.pop() {
            if self.accept[q] {
                return false;
            }
            for a in 0..self.alphabet {
                let t = self.trans[q * self.alphabet + a] as usize;
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        true
    }

    /// Accepted words of length at most `max_len`, in shortlex order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut layer = vec![(Vec::<Letter>::new(), self.start)];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (w, q) in &layer {
                if self.accept[*q as usize] {
                    out.push(Word::from_reduced_unchecked(w.clone()));
                }
                if len == max_len {
                    continue;
                }
                for a in 0..self.alphabet {
                    let t = self.step_sym(*q, a);
                    if t == self.trap {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(Letter::from_symbol(a));
                    next.push((v, t));
                }
            }
            layer = next;
        }
        out
    }
}

/// Strongly connected components (iterative Kosaraju); returns a component
/// id per node.
fn scc(n: usize, succ: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let adj: Vec<Vec<usize>> = (0..n).map(&succ).collect();
    let mut radj = vec![Vec::new(); n];
    for (q, ts) in adj.iter().enumerate() {
        for &t in ts {
            radj[t].push(q);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((q, i)) = stack.pop() {
            if i < adj[q].len() {
                stack.push((q, i + 1));
                let t = adj[q][i];
                if !seen[t] {
                    seen[t] = true;
                    stack.push((t, 0));
                }
            } else {
                order.push(q);
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for &root in order.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = c;
        let mut stack = vec![root];
        while let Some(q) = stack.pop() {
            for &p in &radj[q] {
                if comp[p] == usize::MAX {
                    comp[p] = c;
                    stack.push(p);
                }
            }
        }
        c += 1;
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::tests::all_words;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn universe_accepts_reduced_words() {
        let u = Dfa::universe(2);
        for x in all_words(2, 5) {
            assert!(u.accepts(&x));
        }
        assert!(u.is_infinite());
        assert!(u.complement().is_empty());
    }

    #[test]
    fn standard_cylinder() {
        let b = Basis::standard(2);
        let d = Dfa::cone(&b, &w("a"));
        for x in all_words(2, 5) {
            assert_eq!(d.accepts(&x), x.first() == Some(Letter::gen(1)), "{x:?}");
        }
        let d = Dfa::cone(&b, &w("ba"));
        for x in all_words(2, 5) {
            assert_eq!(d.accepts(&x), x.starts_with(&w("ba")), "{x:?}");
        }
    }

    /// Oracle: `x` lies in the cone of `Q` iff its basis coordinates start
    /// with `Q`.
    fn check_cone(basis: &[&str], q: &str, max_len: usize) {
        let b = Basis::parse(basis).unwrap();
        let q = w(q);
        let d = Dfa::cone(&b, &q);
        for x in all_words(b.rank(), max_len) {
            let expect = b.rewrite(&x).unwrap().starts_with(&q);
            assert_eq!(d.accepts(&x), expect, "{basis:?} {q:?} {x:?}");
        }
    }

    #[test]
    fn cones_match_rewriting() {
        check_cone(&["ab", "b"], "a", 7);
        check_cone(&["ab", "b"], "", 5);
        check_cone(&["abb", "b", "c"], "A", 5);
        check_cone(&["aba", "ab"], "b", 7);
        check_cone(&["Ba", "Abb"], "aB", 7);
        check_cone(&["abC", "b", "cB"], "bC", 5);
    }

    #[test]
    fn membership_example() {
        let b = Basis::parse(&["ab", "b"]).unwrap();
        let d = Dfa::cone(&b, &w("a"));
        assert!(d.accepts(&w("abb")));
        assert!(!d.accepts(&w("b")));
        assert!(d.complement().accepts(&w("b")));
    }

    #[test]
    fn boolean_operations() {
        let b = Basis::standard(2);
        let a = Dfa::cone(&b, &w("a"));
        let ab = Dfa::cone(&b, &w("ab"));
        assert!(a.intersect(&a.complement()).is_empty());
        assert!(a.union(&a.complement()).complement().is_empty());
        assert!(ab.difference(&a).is_empty());
        assert!(a.difference(&ab).is_infinite());
        assert!(!a.symmetric_difference(&a).is_infinite());
        // finite language: {a}
        let single = a
            .difference(&Dfa::cone(&b, &w("aa")))
            .difference(&ab)
            .difference(&Dfa::cone(&b, &w("aB")));
        assert_eq!(single.enumerate(6), vec![w("a")]);
        assert!(!single.is_infinite());
        assert!(!single.is_empty());
    }
}
