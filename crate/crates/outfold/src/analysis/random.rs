use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fold::{apply_move, FoldMove, Move};
use crate::graph::LabeledRose;
use crate::twist::TwistConfig;
use crate::word::{Letter, Loop, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rose reached from the standard one by `steps` random moves, keeping
/// every label at most `max_label` long.
pub fn random_rose(rng: &mut impl Rng, rank: usize, steps: usize, max_label: usize) -> LabeledRose {
    let folds = FoldMove::all(rank);
    let mut r = LabeledRose::standard(rank);
    let mut done = 0;
    let mut attempts = 0;
    while done < steps && attempts < 50 * steps.max(1) {
        attempts += 1;
        let m = if rng.gen_bool(0.15) {
            Move::Invert {
                edge: rng.gen_range(0..rank),
            }
        } else {
            Move::Fold(*folds.choose(rng).expect("rank >= 2"))
        };
        if let Ok(next) = apply_move(&r, m) {
            if next.labels().iter().all(|l| l.len() <= max_label) {
                r = next;
                done += 1;
            }
        }
    }
    r
}

/// Nontrivial loop whose representative has length at most `max_len`.
pub fn random_loop(rng: &mut impl Rng, rank: usize, max_len: usize) -> Loop {
    loop {
        let len = rng.gen_range(1..=max_len);
        let w = Word::reduce((0..len).map(|_| Letter::from_symbol(rng.gen_range(0..2 * rank))));
        if let Ok(l) = Loop::new(&w) {
            return l;
        }
    }
}

/// A left fold of a random target along a different random guide.
pub fn random_fold(rng: &mut impl Rng, rank: usize) -> FoldMove {
    let target = rng.gen_range(0..rank);
    let guide = (target + rng.gen_range(1..rank)) % rank;
    FoldMove::left(target, guide)
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub rank: usize,
    pub trials: usize,
    pub max_label: usize,
    pub max_loop: usize,
    pub s_range: (usize, usize),
    pub t_range: (usize, usize),
    pub q_range: (usize, usize),
    pub m_range: (usize, usize),
    pub k_range: (usize, usize),
    pub max_depth: usize,
    pub twist: TwistConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            seed: 7,
            rank: 3,
            trials: 100,
            max_label: 6,
            max_loop: 4,
            s_range: (1, 4),
            t_range: (1, 4),
            q_range: (0, 3),
            m_range: (0, 3),
            k_range: (1, 2),
            max_depth: 4,
            twist: TwistConfig::default(),
        }
    }
}
