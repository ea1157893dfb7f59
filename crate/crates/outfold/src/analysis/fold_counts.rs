use serde_json::json;

use super::{Anchor, Report};
use crate::error::{Error, Result};
use crate::fold::{stallings_decompose, FoldMove, FoldPath, Move};
use crate::graph::LabeledRose;
use crate::word::{Basis, Word};

/// `⟨a, b, c(abˢ)ᵗ⟩`.
pub fn twisted_power_rose(s: usize, t: usize) -> LabeledRose {
    let w = |x: &str| Word::parse(x).expect("literal");
    let abs = w("a").mul(&w("b").pow(s as i64));
    let c = w("c").mul(&abs.pow(t as i64));
    LabeledRose::new("thm-a", Basis::new(vec![w("a"), w("b"), c]).expect("basis"))
}

fn step_towards(p: &mut FoldPath, target: usize, want: &Word) -> Result<()> {
    let m = FoldMove::reaching(p.end().labels(), target, want)
        .ok_or_else(|| Error::Config(format!("no fold reaches {want}")))?;
    p.push(Move::Fold(m))?;
    Ok(())
}

/// `⟨a,b,c(abˢ)ᵗ⟩ → ⟨abˢ,b,c(abˢ)ᵗ⟩ → ⟨abˢ,b,c⟩ → ⟨a,b,c⟩`, one general fold
/// per letter added or removed.
pub fn alternate_path(s: usize, t: usize) -> Result<FoldPath> {
    let mut p = FoldPath::start(twisted_power_rose(s, t));
    let (a, b) = (Word::gen(1), Word::gen(2));
    for i in 1..=s {
        step_towards(&mut p, 0, &a.mul(&b.pow(i as i64)))?;
    }
    let abs = a.mul(&b.pow(s as i64));
    for j in (0..t).rev() {
        step_towards(&mut p, 2, &Word::gen(3).mul(&abs.pow(j as i64)))?;
    }
    for i in (0..s).rev() {
        step_towards(&mut p, 0, &a.mul(&b.pow(i as i64)))?;
    }
    Ok(p)
}

pub fn verify_fold_counts(s: usize, t: usize) -> Result<Report> {
    let mut report = Report::new("verify thm-a", json!({ "s": s, "t": t }));
    check_fold_counts(&mut report, s, t)?;
    Ok(report.finish())
}

pub(crate) fn check_fold_counts(report: &mut Report, s: usize, t: usize) -> Result<()> {
    if s == 0 || t == 0 {
        return Err(Error::Config("s and t must be positive".into()));
    }
    let r = twisted_power_rose(s, t);
    let stallings = stallings_decompose(&r.to_graph())?;
    let alt = alternate_path(s, t)?;
    let inputs = json!({ "s": s, "t": t });
    let (n1, n2) = (stallings.len(), alt.len());
    report.check(
        Anchor::FOLD_COUNT,
        inputs.clone(),
        json!({ "folds": n1, "expected": t * (s + 1) }),
        n1 == t * (s + 1),
    );
    report.check(
        Anchor::ALTERNATE_PATH,
        inputs.clone(),
        json!({ "folds": n2, "expected": 2 * s + t }),
        n2 == 2 * s + t,
    );
    if s >= 3 && t >= 3 {
        report.check(
            Anchor::ALTERNATE_SHORTER,
            inputs.clone(),
            json!({ "stallings": n1, "alternate": n2 }),
            n1 > n2,
        );
    }
    let last = stallings
        .graphs()
        .last()
        .map(|g| g.is_standard_rose())
        .unwrap_or(false);
    let ends = last && alt.end().is_standard();
    report.check(
        Anchor::BOTH_END_AT_BASE,
        inputs,
        json!({ "stallings": last, "alternate": alt.end().is_standard() }),
        ends,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let r = verify_fold_counts(2, 3).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
        assert_eq!(r.rows[0].values["folds"], 9);
        assert_eq!(r.rows[1].values["folds"], 7);
        let r = verify_fold_counts(1, 1).unwrap();
        assert_eq!(
            (
                r.rows[0].values["folds"].as_u64(),
                r.rows[1].values["folds"].as_u64()
            ),
            (Some(2), Some(3))
        );
        let r = verify_fold_counts(4, 4).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.rows[0].values["folds"], 20);
    }

    #[test]
    fn alternate_path_shape() {
        let p = alternate_path(2, 2).unwrap();
        let labels: Vec<String> = p.roses()[2].labels().iter().map(Word::to_string).collect();
        assert_eq!(labels, ["abb", "b", "cabbabb"]);
        let labels: Vec<String> = p.roses()[4].labels().iter().map(Word::to_string).collect();
        assert_eq!(labels, ["abb", "b", "c"]);
    }
}
