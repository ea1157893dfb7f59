use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// The claim a row checks, stated in words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Anchor(&'static str);

impl Anchor {
    pub const FOLD_COUNT: Anchor = Anchor("Stallings path takes t(s+1) folds");
    pub const ALTERNATE_PATH: Anchor = Anchor("alternate path takes 2s+t folds");
    pub const ALTERNATE_SHORTER: Anchor = Anchor("t(s+1) > 2s+t for s,t >= 3");
    pub const BOTH_END_AT_BASE: Anchor = Anchor("both paths end at the standard rose");
    pub const TWIST_DROP: Anchor = Anchor("integer twist drops by at most 1 per fold");
    pub const FRACTIONAL: Anchor = Anchor("twist' >= [tw - 2/L] + {tw - 2/L}/4");
    pub const LENGTH_HALVING: Anchor = Anchor("translation length at least halves per fold");
    pub const FOLDS_BOUND_TWIST: Anchor = Anchor("m >= tw");
    pub const LOG_BOUND: Anchor = Anchor("m > tw * log5(L/50) when lengths stay above L > 50");
    pub const LOG_EXAMPLE_TWIST: Anchor = Anchor("twisted rose has twist m up to one axis edge");
    pub const LOG_EXAMPLE_FLOOR: Anchor = Anchor("loop length stays at least L along the recipe");
    pub const LOG_EXAMPLE_END: Anchor = Anchor("recipe ends at the base rose");
    pub const SAME_PROJECTION: Anchor = Anchor("a twist fixing a and b keeps the projection");
    pub const EXCURSION: Anchor = Anchor("efficient path travels away in the factor graph");
    pub const PATH_BOUND: Anchor = Anchor("efficient path length q(|psi|+|psi^-1|) + t");
    pub const PARTITION: Anchor = Anchor("front and behind partition the vertices");
    pub const UNTOUCHED_EDGE: Anchor = Anchor("edges other than s and t keep their partition");
    pub const TARGET_EDGE: Anchor = Anchor("(w, wt) and (ws, ws s^-1 t) are boundary equivalent");
    pub const GUIDE_EDGE: Anchor = Anchor("folded s-edge front is the union of the s and t fronts");
    pub const ADJACENT_EDGE: Anchor =
        Anchor("back of e1 lies in the back of each image edge of e2");
    pub const FAREY_BFS: Anchor = Anchor("continued-fraction distance equals BFS distance");
    pub const PROJECTION_BOUND: Anchor = Anchor("d(theta(x), alpha) <= 6 l_x(alpha) + 13");

    pub fn text(self) -> &'static str {
        self.0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub inputs: Value,
    pub values: Value,
    pub anchor: Anchor,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub rows: Vec<Row>,
    /// Quantities measured but not asserted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Value>,
    pub summary: Summary,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(command: &str, config: impl Serialize) -> Report {
        Report {
            command: command.to_string(),
            config: serde_json::to_value(config).unwrap_or(Value::Null),
            rows: Vec::new(),
            notes: Vec::new(),
            summary: Summary::default(),
            started: Some(Instant::now()),
        }
    }

    pub fn check(&mut self, anchor: Anchor, inputs: Value, values: Value, pass: bool) -> bool {
        self.rows.push(Row {
            inputs,
            values,
            anchor,
            pass,
        });
        pass
    }

    pub fn note(&mut self, value: Value) {
        self.notes.push(value);
    }

    /// Appends another report's rows and notes.
    pub fn absorb(&mut self, other: Report) {
        self.rows.extend(other.rows);
        self.notes.extend(other.notes);
    }

    pub fn finish(mut self) -> Report {
        self.summary.passed = self.rows.iter().filter(|r| r.pass).count();
        self.summary.failed = self.rows.len() - self.summary.passed;
        self.summary.runtime_ms = self.started.map_or(0, |s| s.elapsed().as_millis());
        self
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    /// Plain-text rendering: one line per row, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for r in &self.rows {
            let mark = if r.pass { "ok  " } else { "FAIL" };
            out.push_str(&format!(
                "  {mark} {}  {}  {}\n",
                r.anchor.text(),
                r.inputs,
                r.values
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note {n}\n"));
        }
        out.push_str(&format!(
            "  {} passed, {} failed, {} ms\n",
            self.summary.passed, self.summary.failed, self.summary.runtime_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_counts() {
        let mut r = Report::new("demo", json!({"seed": 1}));
        r.check(Anchor::FOLD_COUNT, json!({"s": 1}), json!(2), true);
        r.check(Anchor::ALTERNATE_PATH, json!({"s": 1}), json!(3), false);
        let r = r.finish();
        assert_eq!((r.summary.passed, r.summary.failed), (1, 1));
        assert!(!r.all_passed());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["rows"][0]["anchor"], "Stallings path takes t(s+1) folds");
        assert!(v.get("notes").is_none());
    }
}
