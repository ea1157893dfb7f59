use serde::Serialize;
use serde_json::json;

use super::{Anchor, Report};
use crate::error::{Error, Result};
use crate::fold::{bfs_move_path, BfsConfig, BfsOutcome, FoldPath, Move};
use crate::graph::LabeledRose;
use crate::projection::{farey_distance, theta_projection, FreeFactor};
use crate::word::Automorphism;

/// `a ↦ aba, b ↦ ab, c ↦ c`.
pub fn psi() -> Automorphism {
    Automorphism::parse(&["aba", "ab", "c"]).expect("literal")
}

/// `c ↦ ca`, fixing `a` and `b`.
pub fn tau() -> Automorphism {
    Automorphism::parse(&["a", "b", "ca"]).expect("literal")
}

/// `ψ^q τ^t ψ^-q`, which sends `c` to `c·ψ^q(a)^t` and fixes `a, b`.
pub fn conjugated_twist(q: usize, t: usize) -> Automorphism {
    let pq = psi().pow(q as i64);
    pq.compose(&tau().pow(t as i64)).compose(&pq.inverse())
}

fn rose_of(phi: &Automorphism, name: &str) -> LabeledRose {
    LabeledRose::new(name, phi.as_basis().clone())
}

/// Shortest exact move sequence from the standard rose to `phi`'s rose.
pub fn shortest_moves(phi: &Automorphism, max_depth: usize) -> Result<Vec<Move>> {
    let cfg = BfsConfig {
        max_depth,
        up_to_relabeling: false,
        ..BfsConfig::default()
    };
    let r0 = LabeledRose::standard(phi.rank());
    match bfs_move_path(&r0, &rose_of(phi, "target"), &cfg)? {
        BfsOutcome::Found(p) => Ok(p.moves().to_vec()),
        BfsOutcome::NotFound { max_depth, .. } => Err(Error::BudgetExceeded(format!(
            "no path to {phi} within depth {max_depth}"
        ))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Backtrack {
    pub q: usize,
    pub t: usize,
    pub psi_norm: usize,
    pub psi_inverse_norm: usize,
    pub path_length: usize,
    /// `d(Θ(R₀), Θ(Rᵢ))` along the path.
    pub distances: Vec<usize>,
    pub endpoint_distance: usize,
    pub excursion: usize,
    pub reaches_target: bool,
}

/// Path from the identity to `ψ^q τ^t ψ^-q`: `q` copies of a shortest
/// `ψ` word, `t` copies of `τ`, then `q` copies of `ψ⁻¹`.
pub fn efficient_path(q: usize, t: usize, max_depth: usize) -> Result<(FoldPath, usize, usize)> {
    let fwd = shortest_moves(&psi(), max_depth)?;
    let back = shortest_moves(&psi().inverse(), max_depth)?;
    let tw = shortest_moves(&tau(), max_depth)?;
    let mut moves = Vec::new();
    (0..q).for_each(|_| moves.extend(&fwd));
    (0..t).for_each(|_| moves.extend(&tw));
    (0..q).for_each(|_| moves.extend(&back));
    Ok((
        FoldPath::from_moves(LabeledRose::standard(3), &moves)?,
        fwd.len(),
        back.len(),
    ))
}

pub fn backtrack(q: usize, t: usize, max_depth: usize) -> Result<Backtrack> {
    let (path, psi_norm, psi_inverse_norm) = efficient_path(q, t, max_depth)?;
    let a = FreeFactor::standard(3);
    let base = theta_projection(path.source(), &a)?.class;
    let distances = path
        .roses()
        .iter()
        .map(|r| Ok(farey_distance(base, theta_projection(r, &a)?.class)))
        .collect::<Result<Vec<_>>>()?;
    let target = rose_of(&conjugated_twist(q, t), "phi");
    let endpoint_distance = farey_distance(base, theta_projection(&target, &a)?.class);
    Ok(Backtrack {
        q,
        t,
        psi_norm,
        psi_inverse_norm,
        path_length: path.len(),
        excursion: distances.iter().copied().max().unwrap_or(0),
        distances,
        endpoint_distance,
        reaches_target: path.end().labels() == target.labels(),
    })
}

pub fn run_backtrack(q: usize, t: usize, max_depth: usize) -> Result<Report> {
    let mut report = Report::new(
        "verify backtrack",
        json!({ "q": q, "t": t, "max_depth": max_depth }),
    );
    check_backtrack(&mut report, q, t, max_depth)?;
    Ok(report.finish())
}

pub(crate) fn check_backtrack(
    report: &mut Report,
    q: usize,
    t: usize,
    max_depth: usize,
) -> Result<Backtrack> {
    let b = backtrack(q, t, max_depth)?;
    let inputs = json!({ "q": q, "t": t });
    let bound = q * (b.psi_norm + b.psi_inverse_norm) + t;
    report.check(
        Anchor::PATH_BOUND,
        inputs.clone(),
        json!({ "path_length": b.path_length, "bound": bound, "psi": b.psi_norm, "psi_inverse": b.psi_inverse_norm }),
        b.reaches_target && b.path_length <= bound,
    );
    report.check(
        Anchor::SAME_PROJECTION,
        inputs.clone(),
        json!({ "distance": b.endpoint_distance }),
        b.endpoint_distance == 0,
    );
    // With q = 0 the path never leaves the twist, so nothing moves.
    let deep_enough = match q {
        0 => b.excursion == 0,
        1 | 2 => true,
        _ => b.excursion >= 2,
    };
    report.check(
        Anchor::EXCURSION,
        inputs,
        json!({ "excursion": b.excursion, "distances": b.distances }),
        deep_enough,
    );
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    #[test]
    fn conjugated_twist_images() {
        let phi = conjugated_twist(1, 2);
        let labels: Vec<String> = phi.images().iter().map(Word::to_string).collect();
        assert_eq!(labels, ["a", "b", "cabaaba"]);
        assert!(conjugated_twist(0, 0).is_identity());
    }

    #[test]
    fn psi_norms() {
        assert_eq!(shortest_moves(&psi(), 4).unwrap().len(), 2);
        assert_eq!(shortest_moves(&tau(), 4).unwrap().len(), 1);
    }

    #[test]
    fn witness_values() {
        let b = backtrack(0, 3, 4).unwrap();
        assert_eq!((b.excursion, b.endpoint_distance, b.path_length), (0, 0, 3));
        let b = backtrack(3, 4, 4).unwrap();
        assert!(b.reaches_target);
        assert_eq!(b.endpoint_distance, 0);
        assert!(b.excursion >= 2, "{:?}", b.distances);
        assert!(run_backtrack(3, 4, 4).unwrap().all_passed());
    }
}
