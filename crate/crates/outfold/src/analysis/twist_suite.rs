use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::Rng;
use serde_json::json;

use super::log_example::{check_log_example, log_example_path};
use super::random::{random_fold, random_loop, random_rose, rng, ExperimentConfig};
use super::{Anchor, Report};
use crate::error::{Error, Result};
use crate::fold::{apply_move, FoldMove, Move};
use crate::graph::LabeledRose;
use crate::twist::{relative_twist, TwistConfig, TwistResult};
use crate::word::{Basis, Loop, Word};

#[derive(Clone, Debug)]
pub struct SlowChangeCase {
    pub rose: LabeledRose,
    pub fold: FoldMove,
    pub alpha: Loop,
}

impl SlowChangeCase {
    pub fn folded(&self) -> Result<LabeledRose> {
        apply_move(&self.rose, Move::Fold(self.fold))
    }
}

/// Seeded `(R, fold, α)` triples with labels of `R` at most `max_label`.
pub fn slow_change_corpus(cfg: &ExperimentConfig) -> Vec<SlowChangeCase> {
    let mut rng = rng(cfg.seed);
    (0..cfg.trials)
        .map(|_| {
            let steps = rng.gen_range(1..=8);
            let rose = random_rose(&mut rng, cfg.rank, steps, cfg.max_label);
            let fold = random_fold(&mut rng, cfg.rank);
            let alpha = random_loop(&mut rng, cfg.rank, cfg.max_loop);
            SlowChangeCase { rose, fold, alpha }
        })
        .collect()
}

fn ratio(t: &TwistResult) -> Ratio<i64> {
    Ratio::new(t.numerator as i64, t.denominator as i64)
}

/// `[x] + {x}/4`, with `[x]` the floor.
pub fn fractional_floor(x: Ratio<i64>) -> Ratio<i64> {
    let f = x.floor();
    f + (x - f) / 4
}

pub fn run_slow_change(cfg: &ExperimentConfig) -> Result<Report> {
    let mut report = Report::new("verify slow-change", cfg);
    let r0 = LabeledRose::standard(cfg.rank);
    for (i, case) in slow_change_corpus(cfg).iter().enumerate() {
        let folded = case.folded()?;
        let before = relative_twist(&case.rose, &r0, &case.alpha, &cfg.twist)?;
        let after = relative_twist(&folded, &r0, &case.alpha, &cfg.twist)?;
        let stable = before.stable && after.stable;
        let inputs = json!({
            "case": i,
            "rose": case.rose.labels().iter().map(Word::to_string).collect::<Vec<_>>(),
            "fold": case.fold.to_string(),
            "alpha": case.alpha.to_string(),
        });
        let (tw, tw2) = (ratio(&before), ratio(&after));
        let drop_ok = stable && after.integer_part + 1 >= before.integer_part;
        report.check(
            Anchor::TWIST_DROP,
            inputs.clone(),
            json!({ "before": before.integer_part, "after": after.integer_part, "stable": stable }),
            drop_ok,
        );
        let l = case.rose.combinatorial_length(&case.alpha)? as i64;
        let bound = fractional_floor(tw - Ratio::new(2, l));
        report.check(
            Anchor::FRACTIONAL,
            inputs,
            json!({ "before": tw.to_string(), "after": tw2.to_string(), "bound": bound.to_string(), "L": l }),
            stable && bound <= tw2,
        );
    }
    Ok(report.finish())
}

/// Translation length never more than doubles across one fold.
pub fn run_length_halving(cfg: &ExperimentConfig, trials: usize) -> Result<Report> {
    let mut report = Report::new(
        "verify length-halving",
        json!({ "seed": cfg.seed, "rank": cfg.rank, "trials": trials }),
    );
    let mut rng = rng(cfg.seed ^ 0x5a5a);
    for i in 0..trials {
        let steps = rng.gen_range(0..=10);
        let rose = random_rose(&mut rng, cfg.rank, steps, cfg.max_label);
        let fold = random_fold(&mut rng, cfg.rank);
        let alpha = random_loop(&mut rng, cfg.rank, 2 * cfg.max_loop);
        let folded = apply_move(&rose, Move::Fold(fold))?;
        let (l, l2) = (
            rose.combinatorial_length(&alpha)?,
            folded.combinatorial_length(&alpha)?,
        );
        report.check(
            Anchor::LENGTH_HALVING,
            json!({ "case": i, "fold": fold.to_string(), "alpha": alpha.to_string() }),
            json!({ "before": l, "after": l2 }),
            2 * l >= l2,
        );
    }
    Ok(report.finish())
}

/// `⟨a, b, c(ab)ᵗ⟩` folded back to the standard rose, one letter per fold.
pub fn twist_by_t_sequence(t: usize) -> Result<Vec<LabeledRose>> {
    let w = |x: &str| Word::parse(x).expect("literal");
    let start = w("c").mul(&w("ab").pow(t as i64));
    let labels = vec![w("a"), w("b"), start.clone()];
    let mut rose = LabeledRose::new("twist-by-t", Basis::new(labels)?);
    let mut seq = vec![rose.clone()];
    for n in (1..start.len()).rev() {
        let want = start.prefix(n);
        let m = FoldMove::reaching(rose.labels(), 2, &want)
            .ok_or_else(|| Error::Config(format!("no fold reaches {want}")))?;
        rose = apply_move(&rose, Move::Fold(m))?;
        seq.push(rose.clone());
    }
    Ok(seq)
}

fn random_sequence(rng: &mut impl Rng, cfg: &ExperimentConfig) -> Result<Vec<LabeledRose>> {
    let steps = rng.gen_range(0..=6);
    let mut rose = random_rose(rng, cfg.rank, steps, cfg.max_label);
    let mut seq = vec![rose.clone()];
    let n = rng.gen_range(1..=6);
    let mut attempts = 0;
    while seq.len() <= n && attempts < 100 {
        attempts += 1;
        let next = apply_move(&rose, Move::Fold(random_fold(rng, cfg.rank)))?;
        if next.labels().iter().all(|l| l.len() <= 2 * cfg.max_label) {
            rose = next;
            seq.push(rose.clone());
        }
    }
    Ok(seq)
}

fn check_sequence(
    report: &mut Report,
    name: &str,
    seq: &[LabeledRose],
    alpha: &Loop,
    cfg: &TwistConfig,
) -> Result<()> {
    let m = seq.len() - 1;
    let tw = relative_twist(&seq[0], &seq[m], alpha, cfg)?;
    let min = seq
        .iter()
        .map(|r| r.combinatorial_length(alpha))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .unwrap_or(0);
    let inputs = json!({ "sequence": name, "alpha": alpha.to_string(), "folds": m });
    report.check(
        Anchor::FOLDS_BOUND_TWIST,
        inputs.clone(),
        json!({ "twist": format!("{}/{}", tw.numerator, tw.denominator), "integer": tw.integer_part, "stable": tw.stable }),
        tw.stable && m as u64 >= tw.integer_part,
    );
    if min > 50 {
        let bound =
            tw.integer_part.to_f64().unwrap_or(f64::INFINITY) * (min as f64 / 50.0).log(5.0);
        report.check(
            Anchor::LOG_BOUND,
            inputs,
            json!({ "min_length": min, "bound": bound }),
            m as f64 > bound,
        );
    }
    Ok(())
}

/// Fold sequences of several kinds, each checked against `m ≥ tw` and,
/// when every length along the way exceeds 50, the logarithmic bound.
pub fn run_slow_twist_suite(cfg: &ExperimentConfig) -> Result<Report> {
    let mut report = Report::new("verify slow-twist", cfg);
    let mut rng = rng(cfg.seed ^ 0xa5a5);
    let still = random_rose(&mut rng, cfg.rank, 4, cfg.max_label);
    check_sequence(
        &mut report,
        "constant",
        &[still],
        &random_loop(&mut rng, cfg.rank, cfg.max_loop),
        &cfg.twist,
    )?;
    let ab = Loop::parse("ab")?;
    for t in cfg.t_range.0..=cfg.t_range.1 {
        check_sequence(
            &mut report,
            &format!("twist-by-{t}"),
            &twist_by_t_sequence(t)?,
            &ab,
            &cfg.twist,
        )?;
    }
    for i in 0..cfg.trials / 5 {
        let seq = random_sequence(&mut rng, cfg)?;
        let alpha = random_loop(&mut rng, cfg.rank, cfg.max_loop);
        check_sequence(
            &mut report,
            &format!("random-{i}"),
            &seq,
            &alpha,
            &cfg.twist,
        )?;
    }
    let bc = Loop::parse("bc")?;
    let mut applicable = 0;
    for m in cfg.m_range.0..=cfg.m_range.1 {
        for k in cfg.k_range.0..=cfg.k_range.1 {
            let seq = log_example_path(m, k)?.roses().to_vec();
            let before = report.rows.len();
            check_sequence(
                &mut report,
                &format!("log-example m={m} k={k}"),
                &seq,
                &bc,
                &cfg.twist,
            )?;
            applicable += report.rows[before..]
                .iter()
                .filter(|r| r.anchor == Anchor::LOG_BOUND)
                .count();
            if m > 0 {
                check_log_example(&mut report, m, k, &cfg.twist)?;
            }
        }
    }
    report.note(json!({ "log_bound_applicable": applicable }));
    Ok(report.finish())
}
