use std::cmp::Ordering;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use super::{farey_distance, PrimitiveClass, SubgroupCore};
use crate::error::{Error, Result};
use crate::graph::LabeledRose;
use crate::word::{Basis, Letter, Loop, Word};

/// Lower Christoffel word with `p` letters `x₁` and `q` letters `x₂`.
pub fn christoffel_word(p: usize, q: usize) -> Word {
    let n = p + q;
    Word::reduce((1..=n).map(|i| {
        if (i * q) / n > ((i - 1) * q) / n {
            Letter::gen(2)
        } else {
            Letter::gen(1)
        }
    }))
}

/// Whether a word in two letters is primitive. A cyclically reduced
/// primitive word uses each letter with one sign only, and after making
/// the signs positive it is a rotation of the Christoffel word with the
/// same letter counts.
pub fn is_primitive_rank2(w: &Word) -> bool {
    let (core, _) = w.cyclic_reduce();
    if core.is_identity() || core.max_index() > 2 {
        return false;
    }
    let mut sign = [None; 2];
    let mut count = [0usize; 2];
    for &l in core.letters() {
        let i = l.index() - 1;
        if *sign[i].get_or_insert(l.is_inverse()) != l.is_inverse() {
            return false;
        }
        count[i] += 1;
    }
    if count[0].gcd(&count[1]) != 1 {
        return false;
    }
    let positive = Word::reduce(core.letters().iter().map(|l| Letter::gen(l.index())));
    let c = christoffel_word(count[0], count[1]);
    (0..positive.len()).any(|k| positive.rotate(k) == c)
}

/// A rank-2 free factor given by two words that extend to a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeFactor {
    generators: Vec<Word>,
    rank: usize,
}

impl FreeFactor {
    /// Certifies the factor by completing it with standard letters to a
    /// basis.
    pub fn new(generators: Vec<Word>, rank: usize) -> Result<FreeFactor> {
        if generators.len() != 2 {
            return Err(Error::FactorRank(generators.len()));
        }
        if rank < 2 || generators.iter().any(|g| g.max_index() > rank) {
            return Err(Error::UnsupportedRank(rank));
        }
        let letters: Vec<Word> = (1..=rank).map(Word::gen).collect();
        let found = subsets(rank, rank - 2).into_iter().any(|pick| {
            let mut all = generators.clone();
            all.extend(pick.iter().map(|&i| letters[i].clone()));
            Basis::new(all).is_ok()
        });
        if !found {
            return Err(Error::NotABasis {
                reason: "generators do not extend to a basis".into(),
            });
        }
        Ok(FreeFactor { generators, rank })
    }

    /// `⟨a, b⟩` inside the free group of the given rank.
    pub fn standard(rank: usize) -> FreeFactor {
        FreeFactor {
            generators: vec![Word::gen(1), Word::gen(2)],
            rank,
        }
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Parses `"a,b"` for a factor of the free group of rank `rank`.
    pub fn parse(s: &str, rank: usize) -> Result<FreeFactor> {
        let gens = s
            .split(',')
            .map(|g| Word::from_str(g.trim()))
            .collect::<Result<Vec<_>>>()?;
        FreeFactor::new(gens, rank)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Core of the cover of `x` for the factor, drawn with the petals of `x`.
pub fn subgroup_core(x: &LabeledRose, factor: &FreeFactor) -> Result<SubgroupCore> {
    if x.rank() != factor.rank() {
        return Err(Error::RankMismatch {
            left: x.rank(),
            right: factor.rank(),
        });
    }
    let gens = factor
        .generators()
        .iter()
        .map(|g| x.basis().rewrite(g))
        .collect::<Result<Vec<_>>>()?;
    SubgroupCore::new(&gens, x.rank())
}

#[derive(Clone, Debug, Serialize)]
pub struct ShortestLoop {
    pub class: PrimitiveClass,
    /// Number of core edges crossed.
    pub length: usize,
    /// The loop in standard letters, cyclically reduced.
    pub word: Word,
}

/// A closed immersed path in the core: its edge letters and its word in
/// the basis named by the core.
struct CoreLoop {
    letters: Vec<Letter>,
    basis_word: Word,
}

fn closed_paths(core: &SubgroupCore, len: usize) -> Vec<CoreLoop> {
    let g = &core.graph;
    // Half-edges leaving each vertex: (edge, letter read, endpoint).
    let mut out_edges: Vec<Vec<(usize, Letter, usize)>> = vec![Vec::new(); g.vertex_count()];
    for &i in &core.core_edges {
        let e = g.edges()[i];
        out_edges[e.from].push((i, Letter::gen(e.gen), e.to));
        out_edges[e.to].push((i, Letter::new(e.gen, true), e.from));
    }
    let mut found = Vec::new();
    let mut path: Vec<(usize, Letter)> = Vec::new();
    fn walk(
        out_edges: &[Vec<(usize, Letter, usize)>],
        start: usize,
        at: usize,
        len: usize,
        path: &mut Vec<(usize, Letter)>,
        found: &mut Vec<Vec<(usize, Letter)>>,
    ) {
        if path.len() == len {
            let (first, last) = (path[0], path[len - 1]);
            if at == start && !(first.0 == last.0 && first.1 == last.1.inverse()) {
                found.push(path.clone());
            }
            return;
        }
        for &(i, l, to) in &out_edges[at] {
            if let Some(&(pi, pl)) = path.last() {
                if pi == i && pl == l.inverse() {
                    continue;
                }
            }
            path.push((i, l));
            walk(out_edges, start, to, len, path, found);
            path.pop();
        }
    }
    let mut raw = Vec::new();
    for v in 0..g.vertex_count() {
        if !out_edges[v].is_empty() {
            walk(&out_edges, v, v, len, &mut path, &mut raw);
        }
    }
    for p in raw {
        let basis_word =
            Word::reduce(p.iter().filter_map(|&(i, l)| {
                core.crossing[i].map(|c| Letter::new(c + 1, l.is_inverse()))
            }));
        found.push(CoreLoop {
            letters: p.iter().map(|&(_, l)| l).collect(),
            basis_word,
        });
    }
    found
}

fn canonical(w: &Word) -> Word {
    let a = Loop::new(w).expect("nontrivial").representative().clone();
    let b = Loop::new(&w.inverse())
        .expect("nontrivial")
        .representative()
        .clone();
    a.min(b)
}

fn slope(core: &SubgroupCore, basis_word: &Word) -> Result<PrimitiveClass> {
    let s = basis_word.exponent_sums(2);
    let c = core.to_generator_coords([s[0], s[1]]);
    PrimitiveClass::new(c[0], c[1])
}

/// The shortest immersed loop of the core that is primitive in the factor.
/// Ties go to the shorter, then smaller, word in standard letters.
pub fn shortest_primitive_loop(
    core: &SubgroupCore,
    x: &LabeledRose,
    cap: usize,
) -> Result<ShortestLoop> {
    for len in 1..=cap {
        let mut best: Option<(usize, Word, PrimitiveClass)> = None;
        for l in closed_paths(core, len) {
            if !is_primitive_rank2(&l.basis_word) {
                continue;
            }
            let word = canonical(&x.basis().evaluate(&Word::reduce(l.letters.iter().copied())));
            let class = slope(core, &l.basis_word)?;
            let better = match &best {
                None => true,
                Some((n, w, _)) => (word.len(), &word).cmp(&(*n, w)) == Ordering::Less,
            };
            if better {
                best = Some((word.len(), word, class));
            }
        }
        if let Some((_, word, class)) = best {
            return Ok(ShortestLoop {
                class,
                length: len,
                word,
            });
        }
    }
    Err(Error::LengthCapExceeded { cap })
}

pub const DEFAULT_LOOP_CAP: usize = 64;

/// `Θ_A(x)`: the slope of the shortest primitive loop of the factor in `x`.
pub fn theta_projection(x: &LabeledRose, factor: &FreeFactor) -> Result<ShortestLoop> {
    shortest_primitive_loop(&subgroup_core(x, factor)?, x, DEFAULT_LOOP_CAP)
}

/// Slope of a loop of the factor, which must be primitive in it.
pub fn loop_slope(factor: &FreeFactor, alpha: &Loop) -> Result<PrimitiveClass> {
    let core = subgroup_core(&LabeledRose::standard(factor.rank()), factor)?;
    let w = alpha.representative();
    for v in 0..core.graph.vertex_count() {
        if core.graph.read_from(v, w) == Some(v) {
            let basis_word = Word::reduce(
                core.crossings(v, w)
                    .expect("readable")
                    .into_iter()
                    .map(|(c, inv)| Letter::new(c + 1, inv)),
            );
            if !is_primitive_rank2(&basis_word) {
                return Err(Error::Config(format!(
                    "{alpha} is not primitive in the factor"
                )));
            }
            return slope(&core, &basis_word);
        }
    }
    Err(Error::Config(format!(
        "{alpha} is not carried by the factor"
    )))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionBound {
    pub projection: PrimitiveClass,
    pub loop_class: PrimitiveClass,
    pub distance: usize,
    pub loop_length: usize,
    pub bound: usize,
    pub holds: bool,
}

/// Checks `d(Θ_A(x), α) ≤ 6·ℓ_x(α) + 13`.
pub fn projection_bound_check(
    x: &LabeledRose,
    factor: &FreeFactor,
    alpha: &Loop,
) -> Result<ProjectionBound> {
    let projection = theta_projection(x, factor)?.class;
    let loop_class = loop_slope(factor, alpha)?;
    let distance = farey_distance(projection, loop_class);
    let loop_length = x.combinatorial_length(alpha)?;
    let bound = 6 * loop_length + 13;
    Ok(ProjectionBound {
        projection,
        loop_class,
        distance,
        loop_length,
        bound,
        holds: distance <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::tests::all_words;
    use crate::word::Automorphism;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn class(p: i64, q: i64) -> PrimitiveClass {
        PrimitiveClass::new(p, q).unwrap()
    }

    /// Oracle: a rank-2 word is primitive iff some partner completes it to
    /// a basis; partners are searched up to length 5.
    fn primitive_by_search(x: &Word) -> bool {
        all_words(2, 5)
            .into_iter()
            .any(|y| Basis::new(vec![x.clone(), y]).is_ok())
    }

    #[test]
    fn christoffel_examples() {
        assert_eq!(christoffel_word(1, 0), w("a"));
        assert_eq!(christoffel_word(2, 1), w("aab"));
        assert_eq!(christoffel_word(3, 2), w("aabab"));
    }

    #[test]
    fn primitivity_matches_search() {
        for x in all_words(2, 5).into_iter().filter(|x| !x.is_identity()) {
            assert_eq!(is_primitive_rank2(&x), primitive_by_search(&x), "{x}");
        }
    }

    #[test]
    fn factor_certification() {
        assert!(FreeFactor::parse("a,b", 3).is_ok());
        assert!(FreeFactor::parse("ab,cb", 3).is_ok());
        assert!(FreeFactor::parse("aa,b", 3).is_err());
        assert!(FreeFactor::parse("a", 3).is_err());
    }

    fn psi_power(q: i64) -> LabeledRose {
        let psi = Automorphism::parse(&["aba", "ab", "c"]).unwrap().pow(q);
        LabeledRose::new("psi", psi.as_basis().clone())
    }

    #[test]
    fn projection_examples() {
        let a = FreeFactor::standard(3);
        let r0 = LabeledRose::standard(3);
        let t = theta_projection(&r0, &a).unwrap();
        assert_eq!(
            (t.class, t.length, t.word.clone()),
            (class(1, 0), 1, w("a"))
        );
        let t = theta_projection(&psi_power(1), &a).unwrap();
        assert_eq!((t.class, t.word.clone()), (class(1, 1), w("ab")));
        let fixed = LabeledRose::from_labels(&["a", "b", "cabAB"]).unwrap();
        assert_eq!(theta_projection(&fixed, &a).unwrap().class, class(1, 0));
    }

    #[test]
    fn core_examples() {
        let a = FreeFactor::standard(3);
        let c = subgroup_core(&LabeledRose::standard(3), &a).unwrap();
        assert_eq!((c.core_vertices, c.core_edge_count()), (1, 2));
        let c = subgroup_core(&psi_power(1), &a).unwrap();
        assert_eq!((c.core_vertices, c.core_edge_count()), (1, 2));
        // ⟨a,b⟩ seen from a rose whose petals mix in c.
        let x = LabeledRose::from_labels(&["ac", "b", "c"]).unwrap();
        let c = subgroup_core(&x, &a).unwrap();
        assert!(c.core_edge_count() >= 3);
    }

    #[test]
    fn psi_drifts_along_farey_axis() {
        let a = FreeFactor::standard(3);
        let base = theta_projection(&LabeledRose::standard(3), &a)
            .unwrap()
            .class;
        let d: Vec<usize> = (0..=4)
            .map(|q| farey_distance(base, theta_projection(&psi_power(q), &a).unwrap().class))
            .collect();
        assert_eq!(d[0], 0);
        assert!(d.windows(2).all(|p| p[1] >= p[0]));
        assert!(d[4] >= 2);
    }

    #[test]
    fn projection_bound_examples() {
        let a = FreeFactor::standard(3);
        let r = projection_bound_check(&LabeledRose::standard(3), &a, &Loop::parse("a").unwrap())
            .unwrap();
        assert_eq!((r.distance, r.bound), (0, 19));
        let r = projection_bound_check(&psi_power(2), &a, &Loop::parse("a").unwrap()).unwrap();
        assert!(r.holds);
        assert!(loop_slope(&a, &Loop::parse("abAB").unwrap()).is_err());
        assert!(loop_slope(&a, &Loop::parse("c").unwrap()).is_err());
        assert_eq!(
            loop_slope(&a, &Loop::parse("aab").unwrap()).unwrap(),
            class(2, 1)
        );
    }
}
