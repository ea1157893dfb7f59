use std::collections::{BTreeSet, HashSet};

use num_rational::Ratio;
use serde::Serialize;

use super::{is_intersection_square, origin_slice, TreeEdge};
use crate::error::{Error, Result};
use crate::graph::LabeledRose;
use crate::word::{Automorphism, Basis, Loop, Word};

/// A fundamental domain of the axis of `w` in the tree of a basis, and
/// optionally the contiguous run of axis edges lying in a slice. Axis edge
/// `n = k·ℓ + j` is `wᵏ` applied to fundamental edge `j`.
#[derive(Clone, Debug, Serialize)]
pub struct AxisSegment {
    pub w: Word,
    pub basis: Vec<Word>,
    pub fundamental: Vec<TreeEdge>,
    /// First and last axis index in the slice, if any.
    pub segment: Option<(i64, i64)>,
}

impl AxisSegment {
    pub fn translation_length(&self) -> usize {
        self.fundamental.len()
    }

    pub fn segment_len(&self) -> usize {
        self.segment.map_or(0, |(a, b)| (b - a + 1) as usize)
    }
}

pub fn axis_of(basis: &Basis, w: &Word) -> Result<AxisSegment> {
    let (core, conj) = basis.rewrite(w)?.cyclic_reduce();
    if core.is_identity() {
        return Err(Error::TrivialLoop);
    }
    let fundamental = (0..core.len())
        .map(|j| TreeEdge::new(conj.mul(&core.prefix(j)), core.letters()[j]))
        .collect();
    Ok(AxisSegment {
        w: w.clone(),
        basis: basis.elements().to_vec(),
        fundamental,
        segment: None,
    })
}

/// The group element `g` with `edge = g·(ε, xᵢ)`, and `i`.
fn as_translate(basis: &Basis, e: &TreeEdge) -> (Word, usize) {
    let i = e.letter.index() - 1;
    let base = if e.letter.is_inverse() {
        e.head()
    } else {
        e.base.clone()
    };
    (basis.evaluate(&base), i)
}

type Segment = Option<(i64, i64)>;

fn contiguous(hits: &[i64]) -> Result<Segment> {
    match (hits.first(), hits.last()) {
        (Some(&a), Some(&b)) if (b - a + 1) as usize == hits.len() => Ok(Some((a, b))),
        (Some(_), _) => Err(Error::NonConvexSlice),
        _ => Ok(None),
    }
}

/// Scans axis edges `k ∈ [−K, K]` of `w` in `T_B` with direct square tests
/// against `e₀`, an edge of the standard tree.
pub fn axis_slice_segment(
    w: &Word,
    e0: &TreeEdge,
    basis: &Basis,
    window_k: usize,
) -> Result<AxisSegment> {
    let mut axis = axis_of(basis, w)?;
    let l = axis.translation_length() as i64;
    let std = Basis::standard(basis.rank());
    let coords = basis.rewrite(w)?;
    let k = window_k as i64;
    let mut hits = Vec::new();
    for n in -k * l..(k + 1) * l {
        let (kk, j) = (n.div_euclid(l), n.rem_euclid(l) as usize);
        let e = axis.fundamental[j].translate(&coords.pow(kk));
        if is_intersection_square(basis, &e, &std, e0) {
            hits.push(n);
        }
    }
    axis.segment = contiguous(&hits)?;
    if let Some((a, b)) = axis.segment {
        if a == -k * l || b == (k + 1) * l - 1 {
            return Err(Error::UnstableWindow { k });
        }
    }
    Ok(axis)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TwistConfig {
    /// Initial depth budget for slice enumeration; `None` picks
    /// `2·(max label length) + ℓ₀(α)`.
    pub rho: Option<usize>,
    /// Budget doubling stops here.
    pub max_rho: usize,
    /// Fixed axis scan radius; `None` uses a radius that provably covers
    /// every slice member.
    pub window_k: Option<usize>,
}

impl Default for TwistConfig {
    fn default() -> Self {
        TwistConfig {
            rho: None,
            max_rho: 256,
            window_k: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistWitness {
    /// Edge of the base tree, in the coordinates of the base rose's labels.
    pub e0: TreeEdge,
    pub w: Word,
    pub segment: AxisSegment,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistResult {
    pub numerator: u64,
    /// Translation length of the loop in the first tree.
    pub denominator: u64,
    pub integer_part: u64,
    pub witness: Option<TwistWitness>,
    pub rho_used: usize,
    pub window_k: usize,
    /// False when slices hit the depth budget or the segment touched a fixed
    /// window; the value is then a lower bound.
    pub stable: bool,
}

impl TwistResult {
    pub fn value(&self) -> Ratio<i64> {
        Ratio::new(self.numerator as i64, self.denominator as i64)
    }
}

struct Engine {
    basis: Basis,
    w: Word,
    /// Translates `gⱼ` and petals `iⱼ` of the fundamental edges.
    domain: Vec<(Word, usize)>,
    slices: Vec<Option<HashSet<Word>>>,
    depth: usize,
    truncated: bool,
}

impl Engine {
    fn new(basis: &Basis, w: &Word, rho: usize) -> Result<Engine> {
        let axis = axis_of(basis, w)?;
        let domain: Vec<(Word, usize)> = axis
            .fundamental
            .iter()
            .map(|e| as_translate(basis, e))
            .collect();
        let mut slices = vec![None; basis.rank()];
        let (mut depth, mut truncated) = (0, false);
        for &(_, i) in &domain {
            if slices[i].is_none() {
                let s = origin_slice(basis, i, rho);
                depth = depth.max(s.depth);
                truncated |= s.truncated;
                slices[i] = Some(s.edge_set());
            }
        }
        Ok(Engine {
            basis: basis.clone(),
            w: w.clone(),
            domain,
            slices,
            depth,
            truncated,
        })
    }

    /// Scan radius that covers every slice member for this `e₀`.
    fn radius(&self, p0: &Word) -> usize {
        let g = self.domain.iter().map(|(g, _)| g.len()).max().unwrap_or(0);
        (self.depth + p0.len() + g).div_ceil(self.w.len()) + 1
    }

    /// Axis indices whose edge squares with the edge named `p0`.
    fn hits(&self, p0: &Word, k: usize) -> Vec<i64> {
        let l = self.domain.len() as i64;
        let e0 = TreeEdge::from_prefix(p0);
        let mut out = Vec::new();
        for kk in -(k as i64)..=k as i64 {
            let back = self.w.pow(-kk);
            for (j, (g, i)) in self.domain.iter().enumerate() {
                let h = g.inverse().mul(&back);
                let name = e0.translate(&h).far_end();
                if self.slices[*i].as_ref().is_some_and(|s| s.contains(&name)) {
                    out.push(kk * l + j as i64);
                }
            }
        }
        out
    }

    fn candidates(&self) -> BTreeSet<(usize, Word)> {
        let mut out = BTreeSet::new();
        for (g, i) in &self.domain {
            for c in self.slices[*i].iter().flatten() {
                let name = TreeEdge::from_prefix(c).translate(g).far_end();
                out.insert((name.len(), name));
            }
        }
        out
    }
}

/// `tw_α(R, R₀)`: the largest number of edges of an axis of `α` in the tree
/// of `R` lying in the slice of one edge of the tree of `R₀`, over the
/// translation length of `α` in the tree of `R`.
pub fn relative_twist(
    r: &LabeledRose,
    r0: &LabeledRose,
    alpha: &Loop,
    cfg: &TwistConfig,
) -> Result<TwistResult> {
    if r.rank() != r0.rank() {
        return Err(Error::RankMismatch {
            left: r.rank(),
            right: r0.rank(),
        });
    }
    let psi = Automorphism::from_basis(r0.basis().clone()).inverse();
    let basis = Basis::new(r.labels().iter().map(|b| psi.apply(b)).collect())?;
    let (w, _) = psi.apply(alpha.representative()).cyclic_reduce();
    let mut rho = cfg
        .rho
        .unwrap_or(2 * basis.max_label_len() + w.len())
        .max(1);
    let mut engine = Engine::new(&basis, &w, rho)?;
    while engine.truncated && rho < cfg.max_rho {
        rho = (2 * rho).min(cfg.max_rho);
        engine = Engine::new(&basis, &w, rho)?;
    }
    let l = engine.domain.len();
    let mut best: Option<(usize, Word, Segment)> = None;
    let (mut window_used, mut stable) = (0, !engine.truncated);
    for (_, p0) in engine.candidates() {
        let k = cfg.window_k.unwrap_or_else(|| engine.radius(&p0));
        window_used = window_used.max(k);
        let seg = contiguous(&engine.hits(&p0, k))?;
        if let (Some(_), Some((a, b))) = (cfg.window_k, seg) {
            let k = k as i64;
            stable &= a > -k * l as i64 && b < (k + 1) * l as i64 - 1;
        }
        let n = seg.map_or(0, |(a, b)| (b - a + 1) as usize);
        if best.as_ref().is_none_or(|(m, _, _)| n > *m) {
            best = Some((n, p0, seg));
        }
    }
    let numerator = best.as_ref().map_or(0, |b| b.0) as u64;
    let witness = match best {
        Some((n, p0, segment)) if n > 0 => {
            let mut seg = axis_of(&engine.basis, &engine.w)?;
            seg.segment = segment;
            Some(TwistWitness {
                e0: TreeEdge::from_prefix(&p0),
                w: alpha.representative().clone(),
                segment: seg,
            })
        }
        _ => None,
    };
    Ok(TwistResult {
        numerator,
        denominator: l as u64,
        integer_part: numerator / l as u64,
        witness,
        rho_used: rho,
        window_k: window_used,
        stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn twisted(t: i64) -> LabeledRose {
        let c = w("c").mul(&w("ab").pow(t));
        LabeledRose::new("twist", Basis::new(vec![w("a"), w("b"), c]).unwrap())
    }

    #[test]
    fn axis_examples() {
        let a = axis_of(&Basis::standard(2), &w("ab")).unwrap();
        assert_eq!(
            a.fundamental,
            vec![
                TreeEdge::origin(0),
                TreeEdge::new(w("a"), w("b").first().unwrap())
            ]
        );
        let b = Basis::parse(&["abb", "b", "c"]).unwrap();
        assert_eq!(axis_of(&b, &w("a")).unwrap().translation_length(), 3);
        assert_eq!(
            axis_of(&Basis::standard(3), &w("a"))
                .unwrap()
                .translation_length(),
            1
        );
        assert!(matches!(
            axis_of(&Basis::standard(2), &w("abAB").mul(&w("baBA"))),
            Err(Error::TrivialLoop)
        ));
    }

    #[test]
    fn identical_trees_have_no_twist() {
        let r0 = LabeledRose::standard(3);
        for a in ["a", "ab", "abC", "aaB"] {
            let t = relative_twist(&r0, &r0, &Loop::parse(a).unwrap(), &TwistConfig::default())
                .unwrap();
            assert_eq!(t.numerator, 0);
            assert!(t.witness.is_none());
            assert!(t.stable);
        }
    }

    /// Frozen from direct four-quadrant tests over all edges of the standard
    /// tree up to length 4: the slice of (ε, a) covers 2t − 1 axis edges.
    /// The c-edge hangs off the axis and crosses none of them.
    #[test]
    fn twisting_c_around_ab() {
        let r0 = LabeledRose::standard(3);
        let alpha = Loop::parse("ab").unwrap();
        for t in 1..=3 {
            let res = relative_twist(&twisted(t), &r0, &alpha, &TwistConfig::default()).unwrap();
            assert_eq!(
                (res.numerator, res.denominator),
                (2 * t as u64 - 1, 2),
                "{res:?}"
            );
            assert_eq!(res.integer_part, t as u64 - 1);
            assert_eq!(res.witness.unwrap().e0, TreeEdge::origin(0));
            assert!(res.stable);
        }
    }

    #[test]
    fn segment_scan_agrees_with_slices() {
        let b = Basis::new(twisted(3).labels().to_vec()).unwrap();
        let a = TreeEdge::origin(0);
        let seg = axis_slice_segment(&w("ab"), &a, &b, 6).unwrap();
        assert_eq!(seg.segment, Some((1, 5)));
        assert_eq!(
            axis_slice_segment(&w("ab"), &TreeEdge::origin(2), &b, 6)
                .unwrap()
                .segment_len(),
            0
        );
        let far = TreeEdge::new(w("ccccc"), w("a").first().unwrap());
        assert_eq!(
            axis_slice_segment(&w("ab"), &far, &b, 6)
                .unwrap()
                .segment_len(),
            0
        );
        assert!(matches!(
            axis_slice_segment(&w("ab"), &a, &b, 1),
            Err(Error::UnstableWindow { .. })
        ));
    }

    #[test]
    fn fixed_window_flags_instability() {
        let cfg = TwistConfig {
            window_k: Some(1),
            ..TwistConfig::default()
        };
        let res = relative_twist(
            &twisted(3),
            &LabeledRose::standard(3),
            &Loop::parse("ab").unwrap(),
            &cfg,
        )
        .unwrap();
        assert!(!res.stable);
        assert!(res.numerator <= 5);
    }

    #[test]
    fn base_change_is_invariant() {
        let phi = Automorphism::parse(&["ab", "b", "cA"]).unwrap();
        let r = twisted(2);
        let moved = |x: &LabeledRose| {
            LabeledRose::new(
                "m",
                Basis::new(x.labels().iter().map(|l| phi.apply(l)).collect()).unwrap(),
            )
        };
        let alpha = Loop::parse("ab").unwrap();
        let moved_alpha = Loop::new(&phi.apply(&w("ab"))).unwrap();
        let a = relative_twist(
            &r,
            &LabeledRose::standard(3),
            &alpha,
            &TwistConfig::default(),
        )
        .unwrap();
        let b = relative_twist(
            &moved(&r),
            &moved(&LabeledRose::standard(3)),
            &moved_alpha,
            &TwistConfig::default(),
        )
        .unwrap();
        assert_eq!(a.value(), b.value());
    }
}
