use serde::Serialize;
use serde_json::json;

use super::{Anchor, Report};
use crate::error::{Error, Result};
use crate::fold::{FoldMove, FoldPath, Move};
use crate::graph::LabeledRose;
use crate::twist::{relative_twist, TwistConfig};
use crate::word::{Automorphism, Basis, Loop, Word};

/// `d ↦ de, e ↦ d` on the last two letters of rank 5, fixing `a, b, c`.
pub fn growth_automorphism() -> Automorphism {
    Automorphism::parse(&["a", "b", "c", "de", "d"]).expect("literal")
}

fn w(s: &str) -> Word {
    Word::parse(s).expect("literal")
}

/// `⟨(bc)ᵐa, db, φᵏ(d)c, d, e⟩`; with `m = 0` this is the base rose.
pub fn log_example_rose(m: usize, k: usize) -> LabeledRose {
    let pk = growth_automorphism().pow(k as i64).apply(&w("d"));
    let labels = vec![
        w("bc").pow(m as i64).mul(&w("a")),
        w("db"),
        pk.mul(&w("c")),
        w("d"),
        w("e"),
    ];
    LabeledRose::new(
        if m == 0 { "base" } else { "twisted" },
        Basis::new(labels).expect("basis"),
    )
}

fn fold_to(p: &mut FoldPath, target: usize, want: Word) -> Result<()> {
    let m = FoldMove::reaching(p.end().labels(), target, &want)
        .ok_or_else(|| Error::Config(format!("no fold reaches {want}")))?;
    p.push(Move::Fold(m))?;
    Ok(())
}

/// One pass removes a `bc` from the first petal: cancel `b` with two folds,
/// push `⟨d, e⟩` forward `k` times, cancel `c` with two folds, pull `⟨d, e⟩`
/// back. Each push or pull is a swap and a fold.
pub fn log_example_path(m: usize, k: usize) -> Result<FoldPath> {
    let mut p = FoldPath::start(log_example_rose(m, k));
    for _ in 0..m {
        let l = |p: &FoldPath, i: usize| p.end().labels()[i].clone();
        let want = l(&p, 3).mul(&l(&p, 0));
        fold_to(&mut p, 0, want)?;
        let want = l(&p, 1).inverse().mul(&l(&p, 0));
        fold_to(&mut p, 0, want)?;
        for _ in 0..k {
            p.push(Move::Swap {
                first: 3,
                second: 4,
            })?;
            let want = l(&p, 4).mul(&l(&p, 3));
            fold_to(&mut p, 3, want)?;
        }
        let want = l(&p, 3).mul(&l(&p, 0));
        fold_to(&mut p, 0, want)?;
        let want = l(&p, 2).inverse().mul(&l(&p, 0));
        fold_to(&mut p, 0, want)?;
        for _ in 0..k {
            let want = l(&p, 4).inverse().mul(&l(&p, 3));
            fold_to(&mut p, 3, want)?;
            p.push(Move::Swap {
                first: 3,
                second: 4,
            })?;
        }
    }
    Ok(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct LogExample {
    pub m: usize,
    pub k: usize,
    pub path_length: usize,
    /// `|φ^⌊k/2⌋(d)|`.
    pub floor: usize,
    pub length_trace: Vec<usize>,
    pub twist_numerator: u64,
    pub twist_denominator: u64,
    pub twist_integer: u64,
}

pub fn log_example(m: usize, k: usize, cfg: &TwistConfig) -> Result<LogExample> {
    let path = log_example_path(m, k)?;
    let alpha = Loop::parse("bc")?;
    let floor = growth_automorphism()
        .pow((k / 2) as i64)
        .apply(&w("d"))
        .len();
    let length_trace = path
        .roses()
        .iter()
        .map(|r| r.combinatorial_length(&alpha))
        .collect::<Result<Vec<_>>>()?;
    let tw = relative_twist(path.source(), path.end(), &alpha, cfg)?;
    Ok(LogExample {
        m,
        k,
        path_length: path.len(),
        floor,
        length_trace,
        twist_numerator: tw.numerator,
        twist_denominator: tw.denominator,
        twist_integer: tw.integer_part,
    })
}

pub fn run_log_example_demo(m: usize, k: usize, cfg: &TwistConfig) -> Result<Report> {
    let mut report = Report::new(
        "verify log-example",
        json!({ "m": m, "k": k, "twist": cfg }),
    );
    check_log_example(&mut report, m, k, cfg)?;
    Ok(report.finish())
}

pub(crate) fn check_log_example(
    report: &mut Report,
    m: usize,
    k: usize,
    cfg: &TwistConfig,
) -> Result<LogExample> {
    let ex = log_example(m, k, cfg)?;
    let inputs = json!({ "m": m, "k": k });
    let (n, d) = (ex.twist_numerator, ex.twist_denominator);
    let m64 = m as u64;
    // The twisted strip is m full turns; the slice misses its last edge.
    let in_bracket = if m == 0 {
        n == 0
    } else {
        n <= m64 * d && n > (m64 - 1) * d
    };
    report.check(
        Anchor::LOG_EXAMPLE_TWIST,
        inputs.clone(),
        json!({ "twist": format!("{n}/{d}"), "integer": ex.twist_integer }),
        in_bracket,
    );
    let min = ex.length_trace.iter().copied().min().unwrap_or(0);
    report.check(
        Anchor::LOG_EXAMPLE_FLOOR,
        inputs.clone(),
        json!({ "min_length": min, "floor": ex.floor }),
        min >= ex.floor,
    );
    let end = log_example_path(m, k)?.end().clone();
    report.check(
        Anchor::LOG_EXAMPLE_END,
        inputs,
        json!({ "path_length": ex.path_length }),
        end == log_example_rose(0, k),
    );
    if m > 0 && ex.floor > 1 {
        let ratio = ex.path_length as f64 / (m as f64 * (ex.floor as f64).ln());
        report.note(json!({ "m": m, "k": k, "path_length": ex.path_length, "floor": ex.floor, "ratio": ratio }));
    } else {
        report.note(json!({ "m": m, "k": k, "path_length": ex.path_length, "floor": ex.floor }));
    }
    Ok(ex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_lengths() {
        assert_eq!(log_example_path(0, 2).unwrap().len(), 0);
        assert_eq!(log_example_path(1, 1).unwrap().len(), 8);
        let p = log_example_path(2, 3).unwrap();
        assert_eq!(p.len(), 2 * (4 + 4 * 3));
        assert_eq!(p.end(), &log_example_rose(0, 3));
    }

    /// Frozen from the exact slice computation: numerator m·ℓ − 1.
    #[test]
    fn twist_values() {
        let cfg = TwistConfig::default();
        let ex = log_example(1, 1, &cfg).unwrap();
        assert_eq!((ex.twist_numerator, ex.twist_denominator), (4, 5));
        let ex = log_example(3, 2, &cfg).unwrap();
        assert_eq!((ex.twist_numerator, ex.twist_denominator), (17, 6));
        assert!(ex.length_trace.iter().all(|&l| l >= ex.floor));
        assert_eq!(log_example(0, 1, &cfg).unwrap().twist_numerator, 0);
    }

    #[test]
    fn demo_report_passes() {
        for (m, k) in [(0, 1), (1, 1), (3, 2)] {
            let r = run_log_example_demo(m, k, &TwistConfig::default()).unwrap();
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }
}
