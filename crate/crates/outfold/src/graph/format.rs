//! Text formats.
//!
//! ```text
//! rose twist3 rank 3
//! edge a: a
//! edge b: b
//! edge c: cababab   # three turns
//! ```
//!
//! ```text
//! graph theta rank 2
//! vertex 0
//! vertex 1
//! edge 0 0 1: ab
//! edge 1 0 1: abab
//! edge 2 0 1: b
//! base 0
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Edge, LabeledGraph, LabeledRose};
use crate::error::{Error, Result};
use crate::word::{Basis, Letter, Word};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header<'a>(line: usize, text: &'a str, keyword: &str) -> Result<(&'a str, usize)> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    match parts.as_slice() {
        [k, name, r, n] if *k == keyword && *r == "rank" => {
            let rank = n
                .parse()
                .map_err(|_| perr(line, format!("bad rank {n:?}")))?;
            Ok((name, rank))
        }
        _ => Err(perr(line, format!("expected `{keyword} <name> rank <n>`"))),
    }
}

fn parse_label(line: usize, s: &str, rank: usize) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() {
        return Err(perr(line, "empty label"));
    }
    let w = Word::parse(s).map_err(|e| perr(line, e.to_string()))?;
    if w.max_index() > rank {
        return Err(perr(
            line,
            format!("label {w} uses a letter outside rank {rank}"),
        ));
    }
    Ok(w)
}

/// Reads a rose file into a one-vertex graph without certifying the labels.
pub fn parse_rose(text: &str) -> Result<LabeledGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let (name, rank) = parse_header(hl, header, "rose")?;
    let mut labels: Vec<Option<Word>> = vec![None; rank];
    for (ln, line) in lines {
        let rest = line
            .strip_prefix("edge ")
            .ok_or_else(|| perr(ln, "expected `edge <letter>: <word>`"))?;
        let (key, label) = rest
            .split_once(':')
            .ok_or_else(|| perr(ln, "missing `:`"))?;
        let key = key.trim();
        let mut chars = key.chars();
        let l = match (chars.next(), chars.next()) {
            (Some(c), None) => Letter::from_char(c).map_err(|e| perr(ln, e.to_string()))?,
            _ => return Err(perr(ln, format!("edge name {key:?} is not one letter"))),
        };
        if l.is_inverse() || l.index() > rank {
            return Err(perr(ln, format!("edge name {key:?} outside rank {rank}")));
        }
        if labels[l.index() - 1].is_some() {
            return Err(perr(ln, format!("edge {key} given twice")));
        }
        labels[l.index() - 1] = Some(parse_label(ln, label, rank)?);
    }
    let labels: Vec<Word> = labels
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.ok_or_else(|| perr(hl, format!("edge {} missing", Word::gen(i + 1)))))
        .collect::<Result<_>>()?;
    LabeledGraph::rose(name, rank, &labels)
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let (name, rank) = parse_header(hl, header, "graph")?;
    let mut vertex_ids = Vec::new();
    let mut dense = HashMap::new();
    let mut edges = Vec::new();
    let mut base = None;
    let lookup = |dense: &HashMap<usize, usize>, ln: usize, s: &str| -> Result<usize> {
        let id: usize = s
            .parse()
            .map_err(|_| perr(ln, format!("bad vertex id {s:?}")))?;
        dense
            .get(&id)
            .copied()
            .ok_or_else(|| perr(ln, format!("unknown vertex {id}")))
    };
    for (ln, line) in lines {
        let (kw, rest) = line.split_once(' ').unwrap_or((line, ""));
        match kw {
            "vertex" => {
                let id: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| perr(ln, format!("bad vertex id {rest:?}")))?;
                if dense.insert(id, vertex_ids.len()).is_some() {
                    return Err(perr(ln, format!("vertex {id} given twice")));
                }
                vertex_ids.push(id);
            }
            "edge" => {
                let (head, label) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(ln, "missing `:`"))?;
                let f: Vec<&str> = head.split_whitespace().collect();
                let [id, from, to] = f.as_slice() else {
                    return Err(perr(ln, "expected `edge <id> <from> <to>: <word>`"));
                };
                let id: usize = id
                    .parse()
                    .map_err(|_| perr(ln, format!("bad edge id {id:?}")))?;
                let from = lookup(&dense, ln, from)?;
                let to = lookup(&dense, ln, to)?;
                edges.push(Edge {
                    id,
                    from,
                    to,
                    label: parse_label(ln, label, rank)?,
                });
            }
            "base" => {
                base = Some(lookup(&dense, ln, rest.trim())?);
            }
            _ => return Err(perr(ln, format!("unknown keyword {kw:?}"))),
        }
    }
    let base = base.ok_or_else(|| perr(hl, "missing `base` line"))?;
    LabeledGraph::new(name, rank, vertex_ids, edges, base)
}

/// Parses either format, dispatching on the first keyword.
pub fn parse_any(text: &str) -> Result<LabeledGraph> {
    match content_lines(text).next() {
        Some((_, l)) if l.starts_with("graph") => parse_graph(text),
        _ => parse_rose(text),
    }
}

impl LabeledRose {
    /// Reads a rose file and certifies its labels.
    pub fn parse(text: &str) -> Result<LabeledRose> {
        let g = parse_rose(text)?;
        let labels = g.edges().iter().map(|e| e.label.clone()).collect();
        Ok(LabeledRose::new(g.name(), Basis::new(labels)?))
    }
}

pub fn write_rose(r: &LabeledRose) -> String {
    let mut out = format!("rose {} rank {}\n", r.name(), r.rank());
    for (i, w) in r.labels().iter().enumerate() {
        let _ = writeln!(out, "edge {}: {}", Word::gen(i + 1), w);
    }
    out
}

pub fn write_graph(g: &LabeledGraph) -> String {
    let mut out = format!("graph {} rank {}\n", g.name(), g.rank());
    for v in g.vertex_ids() {
        let _ = writeln!(out, "vertex {v}");
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "edge {} {} {}: {}",
            e.id,
            g.vertex_ids()[e.from],
            g.vertex_ids()[e.to],
            e.label
        );
    }
    let _ = writeln!(out, "base {}", g.vertex_ids()[g.base()]);
    out
}
