use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use outfold::analysis::{
    run_backtrack, run_fold_invariants, run_length_halving, run_log_example_demo,
    run_projection_suite, run_slow_change, run_slow_twist_suite, verify_fold_counts,
    ExperimentConfig, Report,
};
use outfold::fold::{
    bfs_move_path, stallings_decompose, stallings_path_to_outer_path, BfsConfig, BfsOutcome,
    MoveSet,
};
use outfold::graph::{parse_any, LabeledRose};
use outfold::projection::{subgroup_core, theta_projection, FreeFactor};
use outfold::twist::{relative_twist, TwistConfig};
use outfold::word::{Loop, Word};
use outfold::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "outfold",
    version,
    about = "Folds, twisting and factor projections for free groups"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Depth limit for move searches.
    #[arg(long, global = true, default_value_t = 4)]
    max_depth: usize,
    /// Fixed axis scan radius for twist computations.
    #[arg(long, global = true)]
    window_k: Option<usize>,
    /// Initial slice depth budget for twist computations.
    #[arg(long, global = true)]
    window_rho: Option<usize>,
    /// Report `runtime_ms` as 0 so reruns are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
}

impl Global {
    fn twist(&self) -> TwistConfig {
        TwistConfig {
            rho: self.window_rho,
            window_k: self.window_k,
            ..TwistConfig::default()
        }
    }

    fn experiment(&self) -> ExperimentConfig {
        ExperimentConfig {
            seed: self.seed,
            max_depth: self.max_depth,
            twist: self.twist(),
            ..ExperimentConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Stallings-fold a graph or rose down to the standard rose.
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// Shortest move sequence between two roses.
    FoldSearch {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Comma list over lf, rf, inv, swap.
        #[arg(long, default_value = "lf,rf,inv,swap")]
        moves: MoveSet,
    },
    /// Relative twisting number of a rose against a base rose around a loop.
    Twist {
        #[arg(long)]
        rose: PathBuf,
        #[arg(long)]
        base: PathBuf,
        #[arg(long = "loop")]
        alpha: String,
    },
    /// Combinatorial length of a loop in a rose or graph.
    Length {
        #[arg(long)]
        rose: PathBuf,
        #[arg(long = "loop")]
        alpha: String,
    },
    /// Projection of a rose to the free factor graph of a rank-2 factor.
    Project {
        #[arg(long)]
        rose: PathBuf,
        #[arg(long, default_value = "a,b")]
        factor: String,
    },
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Subcommand)]
enum Verify {
    /// Fold counts for `⟨a, b, c(abˢ)ᵗ⟩`; sweeps 1..=4 when s and t are omitted.
    ThmA {
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Twist drop and the fractional bound across single folds.
    SlowChange {
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Translation length across single folds.
    LengthHalving {
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Fold-count bounds on twist along generated sequences.
    SlowTwist,
    /// The rank-5 twisted rose and its unwinding path.
    LogExample {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Projection excursion along the conjugated-twist path.
    Backtrack {
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 4)]
        t: usize,
    },
    /// Boundary partition, fold compatibility and projection checks.
    Properties {
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        #[arg(long, default_value_t = 100)]
        sweep: usize,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn read_rose(path: &Path) -> Result<LabeledRose, Error> {
    LabeledRose::parse(&read(path)?)
}

fn labels(r: &LabeledRose) -> Vec<String> {
    r.labels().iter().map(Word::to_string).collect()
}

/// Output plus the exit code it implies.
enum Outcome {
    Value(serde_json::Value, String, u8),
    Report(Report),
}

fn value(v: impl Serialize, text: String) -> Outcome {
    Outcome::Value(serde_json::to_value(v).unwrap_or_default(), text, 0)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let g = &cli.global;
    let bfs = BfsConfig {
        max_depth: g.max_depth,
        ..BfsConfig::default()
    };
    Ok(match &cli.command {
        Command::Decompose { input } => {
            let graph = parse_any(&read(input)?)?;
            let path = stallings_decompose(&graph)?;
            let outer = stallings_path_to_outer_path(&path, &bfs)?;
            let roses: Vec<Vec<String>> = outer
                .automorphisms
                .iter()
                .map(|a| a.images().iter().map(Word::to_string).collect())
                .collect();
            let mut text = format!("{}: {} folds\n", graph.name(), path.len());
            for r in &roses {
                text.push_str(&format!("  {}\n", r.join(" ")));
            }
            value(
                json!({ "name": graph.name(), "folds": path.len(), "roses": roses, "step_sizes": outer.step_sizes }),
                text,
            )
        }
        Command::FoldSearch {
            source,
            target,
            moves,
        } => {
            let (a, b) = (read_rose(source)?, read_rose(target)?);
            let cfg = BfsConfig {
                moves: *moves,
                ..bfs
            };
            match bfs_move_path(&a, &b, &cfg)? {
                BfsOutcome::Found(p) => {
                    let ms: Vec<String> = p.moves().iter().map(ToString::to_string).collect();
                    let text = format!("distance {}\n  {}\n", p.len(), ms.join("\n  "));
                    value(
                        json!({ "distance": p.len(), "moves": ms, "end": labels(p.end()) }),
                        text,
                    )
                }
                BfsOutcome::NotFound {
                    max_depth,
                    explored,
                } => Outcome::Value(
                    json!({ "distance": null, "max_depth": max_depth, "explored": explored }),
                    format!("not found within depth {max_depth} ({explored} states)\n"),
                    EXIT_BUDGET,
                ),
            }
        }
        Command::Twist { rose, base, alpha } => {
            let (r, r0) = (read_rose(rose)?, read_rose(base)?);
            let t = relative_twist(&r, &r0, &Loop::parse(alpha)?, &g.twist())?;
            let text = format!(
                "twist {}/{}  integer part {}  {}\n",
                t.numerator,
                t.denominator,
                t.integer_part,
                if t.stable {
                    "stable"
                } else {
                    "lower bound only"
                }
            );
            let code = if t.stable { 0 } else { EXIT_BUDGET };
            Outcome::Value(serde_json::to_value(&t).unwrap_or_default(), text, code)
        }
        Command::Length { rose, alpha } => {
            let graph = parse_any(&read(rose)?)?;
            let l = graph.combinatorial_length(&Loop::parse(alpha)?)?;
            value(json!({ "length": l }), format!("{l}\n"))
        }
        Command::Project { rose, factor } => {
            let x = read_rose(rose)?;
            let f = FreeFactor::parse(factor, x.rank())?;
            let core = subgroup_core(&x, &f)?;
            let p = theta_projection(&x, &f)?;
            let text = format!(
                "slope {}  loop {} (length {})  core {} vertices, {} edges\n",
                p.class,
                p.word,
                p.length,
                core.core_vertices,
                core.core_edge_count()
            );
            value(
                json!({
                    "slope": p.class.to_string(),
                    "loop": p.word.to_string(),
                    "length": p.length,
                    "core_vertices": core.core_vertices,
                    "core_edges": core.core_edge_count(),
                }),
                text,
            )
        }
        Command::Verify(v) => Outcome::Report(verify(v, g)?),
    })
}

fn verify(v: &Verify, g: &Global) -> Result<Report, Error> {
    let cfg = g.experiment();
    match v {
        Verify::ThmA { s, t } => {
            if let (Some(s), Some(t)) = (s, t) {
                return verify_fold_counts(*s, *t);
            }
            let mut all = Report::new("verify thm-a", json!({ "s": [1, 4], "t": [1, 4] }));
            for s in 1..=4 {
                for t in 1..=4 {
                    all.absorb(verify_fold_counts(s, t)?);
                }
            }
            Ok(all.finish())
        }
        Verify::SlowChange { trials } => run_slow_change(&ExperimentConfig {
            trials: *trials,
            ..cfg
        }),
        Verify::LengthHalving { trials } => run_length_halving(&cfg, *trials),
        Verify::SlowTwist => run_slow_twist_suite(&cfg),
        Verify::LogExample { m, k } => run_log_example_demo(*m, *k, &cfg.twist),
        Verify::Backtrack { q, t } => run_backtrack(*q, *t, g.max_depth),
        Verify::Properties { pairs, sweep } => {
            let mut r = Report::new(
                "verify properties",
                json!({ "seed": g.seed, "pairs": pairs, "sweep": sweep }),
            );
            r.absorb(run_fold_invariants(&cfg, *pairs)?);
            r.absorb(run_projection_suite(&cfg, *sweep, 12)?);
            Ok(r.finish())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Value(v, text, code)) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&v).unwrap_or_default());
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Ok(Outcome::Report(mut r)) => {
            if cli.global.no_timing {
                r.summary.runtime_ms = 0;
            }
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&r).unwrap_or_default());
            } else {
                print!("{}", r.to_text());
            }
            ExitCode::from(if r.all_passed() { 0 } else { EXIT_FAILED })
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded(_)
                | Error::LengthCapExceeded { .. }
                | Error::UnstableWindow { .. } => EXIT_BUDGET,
                _ => EXIT_ERROR,
            };
            ExitCode::from(code)
        }
    }
}
