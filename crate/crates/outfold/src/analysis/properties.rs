use rand::Rng;
use serde_json::json;

use super::backtrack::conjugated_twist;
use super::random::{random_rose, rng, ExperimentConfig};
use super::{Anchor, Report};
use crate::error::Result;
use crate::graph::LabeledRose;
use crate::projection::{
    christoffel_word, farey_distance, projection_bound_check, theta_projection, FareyBall,
    FreeFactor,
};
use crate::twist::Dfa;
use crate::twist::{behind_language, front_language, FoldMorphism, GroupEdge, TreeEdge};
use crate::word::{Automorphism, Basis, Letter, Loop, Word};

fn random_word(rng: &mut impl Rng, letters: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::reduce((0..len).map(|_| Letter::from_symbol(rng.gen_range(0..2 * letters))))
}

fn random_letter(rng: &mut impl Rng, rank: usize) -> Letter {
    Letter::from_symbol(rng.gen_range(0..2 * rank))
}

/// Front and behind split the reduced words with nothing shared or missed.
pub fn partition_holds(basis: &Basis, e: &TreeEdge) -> bool {
    let (f, b) = (front_language(basis, e), behind_language(basis, e));
    f.intersect(&b).is_empty()
        && Dfa::universe(basis.rank())
            .difference(&f.union(&b))
            .is_empty()
}

/// Partition and fold-compatibility checks on random `(rose, fold)` pairs
/// of rank 2 or 3.
pub fn run_fold_invariants(cfg: &ExperimentConfig, pairs: usize) -> Result<Report> {
    let mut report = Report::new(
        "verify properties (folds)",
        json!({ "seed": cfg.seed, "pairs": pairs }),
    );
    let mut rng = rng(cfg.seed ^ 0x0f0f);
    for i in 0..pairs {
        let rank = if i % 3 == 0 { 2 } else { 3 };
        let steps = rng.gen_range(0..=6);
        let rose = random_rose(&mut rng, rank, steps, cfg.max_label);
        let target = rng.gen_range(0..rank);
        let guide = (target + rng.gen_range(1..rank)) % rank;
        let f = FoldMorphism::new(&rose, target, guide)?;
        let g = random_word(&mut rng, rank, 3);
        let labels: Vec<String> = rose.labels().iter().map(Word::to_string).collect();
        let inputs = json!({ "pair": i, "rose": labels, "target": target, "guide": guide, "g": g.to_string() });

        let mut ok = true;
        for basis in [&f.before, &f.after] {
            for _ in 0..5 {
                let e = TreeEdge::new(
                    random_word(&mut rng, rank, 3),
                    random_letter(&mut rng, rank),
                );
                ok &= partition_holds(basis, &e);
            }
        }
        report.check(
            Anchor::PARTITION,
            inputs.clone(),
            json!({ "edges": 10 }),
            ok,
        );

        if let Some(petal) = (0..rank).find(|&p| p != target && p != guide) {
            let c = f.check_untouched(&g, petal)?;
            report.check(
                Anchor::UNTOUCHED_EDGE,
                inputs.clone(),
                json!(c),
                c.boundary && c.vertex,
            );
        }
        let c = f.check_target(&g)?;
        report.check(Anchor::TARGET_EDGE, inputs.clone(), json!(c), c.boundary);
        let c = f.check_guide(&g)?;
        report.check(
            Anchor::GUIDE_EDGE,
            inputs.clone(),
            json!(c),
            c.boundary && c.vertex,
        );

        let e1 = GroupEdge {
            base: g.clone(),
            letter: random_letter(&mut rng, rank),
        };
        let head = e1.head(rose.labels());
        let (l2, e2) = loop {
            let l2 = random_letter(&mut rng, rank);
            let e2 = GroupEdge {
                base: head.clone(),
                letter: l2,
            };
            if l2 != e1.letter.inverse() && !f.is_folded_pair(&e1, &e2) {
                break (l2, e2);
            }
        };
        report.check(
            Anchor::ADJACENT_EDGE,
            inputs,
            json!({ "e1": e1.letter.to_char().to_string(), "e2": l2.to_char().to_string() }),
            f.check_adjacent(&e1, &e2)?,
        );
    }
    Ok(report.finish())
}

/// A primitive element of `⟨a, b⟩` with slope `(p, ±q)`.
fn random_primitive(rng: &mut impl Rng) -> Word {
    loop {
        let (p, q) = (rng.gen_range(0..=5usize), rng.gen_range(0..=5usize));
        if num_integer::gcd(p, q) != 1 {
            continue;
        }
        let w = christoffel_word(p, q);
        return if rng.gen_bool(0.5) {
            Automorphism::parse(&["a", "B", "c"])
                .expect("literal")
                .apply(&w)
        } else {
            w
        };
    }
}

/// Farey distance against ball BFS, the `6L + 13` bound on a random sweep,
/// and invariance of the projection under automorphisms fixing `a, b`.
pub fn run_projection_suite(
    cfg: &ExperimentConfig,
    sweep: usize,
    farey_bound: i64,
) -> Result<Report> {
    let mut report = Report::new(
        "verify properties (projection)",
        json!({ "seed": cfg.seed, "sweep": sweep, "farey_bound": farey_bound }),
    );
    let small = FareyBall::new(farey_bound).vertices;
    let region = FareyBall::new(farey_bound.max(1) * 5 / 2);
    let mut mismatches = 0;
    for &x in &small {
        let dist = region.distances(x);
        mismatches += small
            .iter()
            .filter(|&&y| dist.get(&y) != Some(&farey_distance(x, y)))
            .count();
    }
    report.check(
        Anchor::FAREY_BFS,
        json!({ "entries_up_to": farey_bound }),
        json!({ "pairs": small.len() * small.len(), "mismatches": mismatches }),
        mismatches == 0,
    );

    let a = FreeFactor::standard(3);
    let mut rng = rng(cfg.seed ^ 0x3333);
    for i in 0..sweep {
        let steps = rng.gen_range(0..=8);
        let x = random_rose(&mut rng, 3, steps, cfg.max_label);
        let alpha = Loop::new(&random_primitive(&mut rng))?;
        let r = projection_bound_check(&x, &a, &alpha)?;
        let labels: Vec<String> = x.labels().iter().map(Word::to_string).collect();
        report.check(
            Anchor::PROJECTION_BOUND,
            json!({ "case": i, "rose": labels, "alpha": alpha.to_string() }),
            json!({ "distance": r.distance, "bound": r.bound, "length": r.loop_length }),
            r.holds,
        );
    }

    let base = theta_projection(&LabeledRose::standard(3), &a)?.class;
    let mut fixers: Vec<Automorphism> = (0..=3)
        .flat_map(|q| (1..=4).map(move |t| conjugated_twist(q, t)))
        .collect();
    for _ in 0..10 {
        let (u, v) = (random_word(&mut rng, 2, 4), random_word(&mut rng, 2, 4));
        let c = if rng.gen_bool(0.5) {
            Word::gen(3)
        } else {
            Word::gen(3).inverse()
        };
        fixers.push(Automorphism::new(vec![
            Word::gen(1),
            Word::gen(2),
            u.mul(&c).mul(&v),
        ])?);
    }
    for phi in fixers {
        let r = LabeledRose::new("phi", phi.as_basis().clone());
        let class = theta_projection(&r, &a)?.class;
        report.check(
            Anchor::SAME_PROJECTION,
            json!({ "phi": phi.to_string() }),
            json!({ "projection": class.to_string(), "base": base.to_string(), "distance": farey_distance(base, class) }),
            class == base,
        );
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_on_standard_and_folded() {
        let b = Basis::parse(&["a", "b", "c"]).unwrap();
        assert!(partition_holds(&b, &TreeEdge::origin(0)));
        let b = Basis::parse(&["aab", "ab", "c"]).unwrap();
        assert!(partition_holds(
            &b,
            &TreeEdge::new(Word::parse("cB").unwrap(), Letter::gen(1))
        ));
    }

    #[test]
    fn suites_pass_small() {
        let cfg = ExperimentConfig::default();
        let r = run_fold_invariants(&cfg, 8).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
        let r = run_projection_suite(&cfg, 10, 5).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
    }
}
