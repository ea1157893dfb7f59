use std::fmt;

use serde::Serialize;

use super::{BasisRewriter, Word, MAX_RANK};
use crate::error::{Error, Result};

/// An ordered tuple of `n` words generating the free group of rank `n`.
///
/// Construction folds the rose on the tuple; a tuple that does not fold to
/// the standard rose is rejected.
#[derive(Clone, Debug)]
pub struct Basis {
    elements: Vec<Word>,
    rewriter: BasisRewriter,
}

impl Basis {
    pub fn new(elements: Vec<Word>) -> Result<Basis> {
        let rank = elements.len();
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::UnsupportedRank(rank));
        }
        let rewriter = BasisRewriter::new(&elements, rank)?;
        Ok(Basis { elements, rewriter })
    }

    pub fn standard(rank: usize) -> Basis {
        Basis::new((1..=rank).map(Word::gen).collect()).expect("standard basis")
    }

    pub fn parse(words: &[&str]) -> Result<Basis> {
        Basis::new(
            words
                .iter()
                .map(|s| Word::parse(s))
                .collect::<Result<_>>()?,
        )
    }

    pub fn rank(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Word {
        &self.elements[i]
    }

    pub fn rewriter(&self) -> &BasisRewriter {
        &self.rewriter
    }

    pub fn is_standard(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::gen(i + 1))
    }

    /// The unique reduced word in `x₁..x_n` equal to `w`.
    pub fn rewrite(&self, w: &Word) -> Result<Word> {
        self.rewriter.rewrite(w)
    }

    /// Evaluates a word over the basis alphabet back in the standard letters.
    pub fn evaluate(&self, coords: &Word) -> Word {
        coords.substitute(&self.elements)
    }

    pub fn max_label_len(&self) -> usize {
        self.elements.iter().map(Word::len).max().unwrap_or(0)
    }
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Basis {}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, w) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "⟩")
    }
}

/// An automorphism given by the images of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    images: Basis,
}

impl Serialize for Automorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.elements().serialize(s)
    }
}

impl Automorphism {
    pub fn new(images: Vec<Word>) -> Result<Automorphism> {
        Ok(Automorphism {
            images: Basis::new(images)?,
        })
    }

    pub fn parse(images: &[&str]) -> Result<Automorphism> {
        Ok(Automorphism {
            images: Basis::parse(images)?,
        })
    }

    pub fn from_basis(images: Basis) -> Automorphism {
        Automorphism { images }
    }

    pub fn identity(rank: usize) -> Automorphism {
        Automorphism {
            images: Basis::standard(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.rank()
    }

    pub fn images(&self) -> &[Word] {
        self.images.elements()
    }

    pub fn as_basis(&self) -> &Basis {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_standard()
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(self.images.elements())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let images = other.images().iter().map(|w| self.apply(w)).collect();
        Automorphism::new(images).expect("composition of automorphisms")
    }

    pub fn inverse(&self) -> Automorphism {
        let images = self.images.rewriter().generator_coords().to_vec();
        Automorphism::new(images).expect("inverse of an automorphism")
    }

    pub fn pow(&self, k: i64) -> Automorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Automorphism::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images()
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{}→{}", Word::gen(i + 1), w))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}
