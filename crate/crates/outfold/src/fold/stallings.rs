use crate::error::{Error, Result};
use crate::graph::{EdgeletGraph, FoldPair, LabeledGraph};

/// One Stallings fold with the graphs on either side of it.
#[derive(Clone, Debug)]
pub struct StallingsStep {
    pub before: EdgeletGraph,
    pub after: EdgeletGraph,
    pub pair: FoldPair,
}

/// The deterministic Stallings folding of a labeled graph down to the
/// standard rose.
#[derive(Clone, Debug)]
pub struct StallingsPath {
    pub source: LabeledGraph,
    pub steps: Vec<StallingsStep>,
}

impl StallingsPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every graph along the path, source subdivision first.
    pub fn graphs(&self) -> Vec<&EdgeletGraph> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        if let Some(first) = self.steps.first() {
            out.push(&first.before);
        }
        out.extend(self.steps.iter().map(|s| &s.after));
        out
    }
}

/// Performs the selected fold, or `None` when `x` is folded.
pub fn stallings_fold_once(x: &EdgeletGraph) -> Option<StallingsStep> {
    let mut after = x.clone();
    let pair = after.fold_once()?;
    Some(StallingsStep {
        before: x.clone(),
        after,
        pair,
    })
}

pub fn stallings_decompose(x: &LabeledGraph) -> Result<StallingsPath> {
    let report = x.validate_marking();
    if !report.is_basis {
        return Err(Error::NotABasis {
            reason: format!(
                "graph of rank {} folds to rank {}{}",
                report.source_rank,
                report.folded_rank,
                if report.onto {
                    ""
                } else {
                    " and misses generators"
                }
            ),
        });
    }
    let mut cur = x.subdivide_to_edgelets();
    let mut steps = Vec::new();
    while let Some(step) = stallings_fold_once(&cur) {
        cur = step.after.clone();
        steps.push(step);
    }
    Ok(StallingsPath {
        source: x.clone(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabeledRose;

    fn thm_a(s: usize, t: usize) -> LabeledGraph {
        let c = format!("c{}", format!("a{}", "b".repeat(s)).repeat(t));
        LabeledRose::from_labels(&["a", "b", &c])
            .unwrap()
            .to_graph()
    }

    #[test]
    fn twisted_power_counts() {
        for s in 1..=4 {
            for t in 1..=4 {
                assert_eq!(
                    stallings_decompose(&thm_a(s, t)).unwrap().len(),
                    t * (s + 1)
                );
            }
        }
        assert_eq!(
            stallings_decompose(&LabeledRose::standard(3).to_graph())
                .unwrap()
                .len(),
            0
        );
    }

    #[test]
    fn each_step_is_forced() {
        let p = stallings_decompose(&thm_a(2, 3)).unwrap();
        for step in &p.steps {
            assert_eq!(step.before.admissible_pairs().len(), 1);
        }
        assert!(p.steps.last().unwrap().after.is_standard_rose());
    }

    #[test]
    fn non_basis_is_an_error() {
        let g = LabeledGraph::rose(
            "r",
            3,
            &["a", "b", "ab"].map(|s| crate::word::Word::parse(s).unwrap()),
        )
        .unwrap();
        assert!(matches!(
            stallings_decompose(&g),
            Err(Error::NotABasis { .. })
        ));
    }
}
