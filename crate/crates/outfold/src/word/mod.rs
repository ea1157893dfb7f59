//! Reduced words in a free group, loops (conjugacy classes), bases and
//! automorphisms given by generator images.
//!
//! Words use a one-letter external syntax: a lowercase ASCII letter is a
//! generator (`a` = 1, `b` = 2, ...), the uppercase letter is its inverse,
//! and the empty string is the identity. `"cABab"` is c·a⁻¹·b⁻¹·a·b.

mod automorphism;
mod rewriter;

pub use automorphism::{Automorphism, Basis};
pub use rewriter::BasisRewriter;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank expressible in the one-letter syntax.
pub const MAX_RANK: usize = 26;

/// A generator or its inverse. Stored as a nonzero signed index.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i16);

impl Letter {
    /// Generator `index` (1-based), inverted when `inverse` is set.
    pub fn new(index: usize, inverse: bool) -> Letter {
        assert!(
            index >= 1 && index <= i16::MAX as usize,
            "generator index {index}"
        );
        let v = index as i16;
        Letter(if inverse { -v } else { v })
    }

    pub fn gen(index: usize) -> Letter {
        Letter::new(index, false)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn sign(self) -> i64 {
        if self.0 < 0 {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Dense code in `0..2n`: a = 0, A = 1, b = 2, B = 3, ...
    ///
    /// This is also the total order on letters.
    pub fn symbol(self) -> usize {
        2 * (self.index() - 1) + usize::from(self.is_inverse())
    }

    pub fn from_symbol(sym: usize) -> Letter {
        Letter::new(sym / 2 + 1, sym % 2 == 1)
    }

    pub fn to_char(self) -> char {
        let i = self.index();
        if i > MAX_RANK {
            return '?';
        }
        let base = if self.is_inverse() { b'A' } else { b'a' };
        (base + (i - 1) as u8) as char
    }

    pub fn from_char(ch: char) -> Result<Letter> {
        match ch {
            'a'..='z' => Ok(Letter::new((ch as u8 - b'a') as usize + 1, false)),
            'A'..='Z' => Ok(Letter::new((ch as u8 - b'A') as usize + 1, true)),
            _ => Err(Error::InvalidLetter { ch }),
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbol().cmp(&other.symbol())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index() <= MAX_RANK {
            write!(f, "{}", self.to_char())
        } else {
            write!(
                f,
                "x{}{}",
                self.index(),
                if self.is_inverse() { "'" } else { "" }
            )
        }
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn gen(index: usize) -> Word {
        Word(vec![Letter::gen(index)])
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Wraps letters that are already known to be reduced.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Word {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        Word(letters)
    }

    pub fn parse(s: &str) -> Result<Word> {
        let letters = s
            .chars()
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::reduce(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Largest generator index used, 0 for the identity.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut i = 0;
        let (a, b) = (&self.0, &other.0);
        while i < a.len() && i < b.len() && a[a.len() - 1 - i] == b[i].inverse() {
            i += 1;
        }
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * i);
        out.extend_from_slice(&a[..a.len() - i]);
        out.extend_from_slice(&b[i..]);
        Word(out)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(f), Some(l)) => self.0.len() == 1 || *f != l.inverse(),
            _ => true,
        }
    }

    /// Splits `self = conjugator · core · conjugator⁻¹` with `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.0.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.0[k] == self.0[n - 1 - k].inverse() {
            k += 1;
        }
        (Word(self.0[k..n - k].to_vec()), Word(self.0[..k].to_vec()))
    }

    /// Exponent sum of each generator `1..=rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0; rank];
        for l in &self.0 {
            if l.index() <= rank {
                sums[l.index() - 1] += l.sign();
            }
        }
        sums
    }

    /// Letterwise substitution followed by free reduction.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for l in &self.0 {
            let img = &images[l.index() - 1];
            out = if l.is_inverse() {
                out.mul(&img.inverse())
            } else {
                out.mul(img)
            };
        }
        out
    }

    /// Cyclic rotation by `k` letters (only meaningful for cyclically reduced words).
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{:?}", l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{}", self)
        }
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A conjugacy class of a nontrivial element, stored by its least cyclic
/// rotation. Inverse classes are distinct loops.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Loop(Word);

impl Loop {
    pub fn new(w: &Word) -> Result<Loop> {
        let (core, _) = w.cyclic_reduce();
        if core.is_identity() {
            return Err(Error::TrivialLoop);
        }
        let best = (0..core.len())
            .map(|k| core.rotate(k))
            .min()
            .expect("nonempty");
        Ok(Loop(best))
    }

    pub fn parse(s: &str) -> Result<Loop> {
        Loop::new(&Word::parse(s)?)
    }

    /// Cyclically reduced representative.
    pub fn representative(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn inverse(&self) -> Loop {
        Loop::new(&self.0.inverse()).expect("nontrivial")
    }
}

impl fmt::Display for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w("aAb"), w("b"));
        assert_eq!(w(""), Word::identity());
        assert_eq!(w("abBAc"), w("c"));
        assert_eq!(w("cABab").to_string(), "cABab");
    }

    #[test]
    fn rejects_bad_characters() {
        assert_eq!(Word::parse("a1"), Err(Error::InvalidLetter { ch: '1' }));
    }

    #[test]
    fn cyclic_reduction_examples() {
        assert_eq!(w("abA").cyclic_reduce(), (w("b"), w("a")));
        assert_eq!(w("ab").cyclic_reduce(), (w("ab"), w("")));
        let x = w("abaBA");
        let (core, conj) = x.cyclic_reduce();
        assert_eq!((core.clone(), conj.clone()), (w("a"), w("ab")));
        assert_eq!(core.conjugate_by(&conj), x);
        assert!(core.is_cyclically_reduced());
    }

    #[test]
    fn cyclic_reduce_matches_brute_force_conjugates() {
        // Enumerate every reduced word of length <= 5 over {a,b} and check
        // the peeled core against the shortest conjugate g·w·g⁻¹ with |g| <= |w|.
        let words = all_words(2, 5);
        for x in &words {
            let (core, conj) = x.cyclic_reduce();
            assert_eq!(core.conjugate_by(&conj), *x);
            let shortest = words
                .iter()
                .filter(|g| g.len() <= x.len())
                .map(|g| x.conjugate_by(g).len())
                .min()
                .unwrap();
            assert_eq!(core.len(), shortest, "{x:?}");
        }
    }

    #[test]
    fn loop_canonical_form_keeps_orientation() {
        let l = Loop::parse("ba").unwrap();
        assert_eq!(l.representative(), &w("ab"));
        assert_ne!(l, l.inverse());
        assert_eq!(Loop::parse("cabC").unwrap(), Loop::parse("ab").unwrap());
        assert_eq!(Loop::parse("aA"), Err(Error::TrivialLoop));
    }

    #[test]
    fn letter_order() {
        let a = Letter::gen(1);
        assert!(a < a.inverse());
        assert!(a.inverse() < Letter::gen(2));
        assert_eq!(Letter::from_symbol(a.inverse().symbol()), a.inverse());
    }

    pub(crate) fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::identity()];
        let mut frontier = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &frontier {
                for sym in 0..2 * rank {
                    let l = Letter::from_symbol(sym);
                    if x.last() == Some(l.inverse()) {
                        continue;
                    }
                    let mut v = x.letters().to_vec();
                    v.push(l);
                    next.push(Word::from_reduced_unchecked(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn raw_letters() -> impl Strategy<Value = Vec<Letter>> {
            prop::collection::vec((1usize..=3, any::<bool>()), 0..16)
                .prop_map(|v| v.into_iter().map(|(i, s)| Letter::new(i, s)).collect())
        }

        proptest! {
            #[test]
            fn reduce_is_idempotent(raw in raw_letters()) {
                let x = Word::reduce(raw.clone());
                prop_assert_eq!(Word::reduce(x.letters().to_vec()), x.clone());
                prop_assert!(x.len() <= raw.len());
            }

            #[test]
            fn product_length_bound(u in raw_letters(), v in raw_letters()) {
                let (u, v) = (Word::reduce(u), Word::reduce(v));
                prop_assert!(u.mul(&v).len() <= u.len() + v.len());
                prop_assert_eq!(u.mul(&u.inverse()), Word::identity());
            }
        }
    }
}
