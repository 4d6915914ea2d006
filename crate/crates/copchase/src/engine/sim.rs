//! Seeded batch simulation.
//!
//! Reproducibility contract: trial `i` of a run with master seed `s` uses
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `i`, so every trial is
//! independent of worker count and schedule. Results are collected in trial
//! order and summarized sequentially; reports are bit-identical however the
//! work was distributed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{play_game, EngineError, GameConfig, PolicyFactory, PolicySpec, TrialOutcome};
use crate::graph::Graph;

/// Number of histogram buckets a report aims for.
const HISTOGRAM_BUCKETS: u64 = 16;

/// The RNG for one trial of a batch.
pub fn trial_rng(master_seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(stream);
    rng
}

/// Run `trials` independent games. `workers = 0` uses the global thread
/// pool; any other value builds a pool of exactly that size.
pub fn run_trials(
    g: &Graph,
    spec: PolicySpec,
    config: &GameConfig,
    trials: u64,
    master_seed: u64,
    workers: usize,
) -> Result<Vec<TrialOutcome>, EngineError> {
    let factory = PolicyFactory::new(spec, g);
    let body = || {
        (0..trials)
            .into_par_iter()
            .map(|i| {
                play_game(g, &factory, config, &mut trial_rng(master_seed, i)).map(|mut out| {
                    out.stream = Some(i);
                    out
                })
            })
            .collect::<Result<Vec<_>, _>>()
    };
    if workers == 0 {
        body()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(body)
    }
}

/// One half-open capture-time bucket `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramBucket {
    pub lo: u64,
    pub hi: u64,
    pub count: u64,
}

/// Aggregated staged-policy telemetry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageSummary {
    /// Average moves spent per stage, over all trials.
    pub mean_stage_moves: [f64; 4],
    /// Trials whose opening march reached the drunk's start.
    pub stage1_completions: u64,
    /// Trials that also finished the second march.
    pub stage2_completions: u64,
    /// Average cop-drunk distance at the stage handoffs, over the trials
    /// where the handoff happened.
    pub mean_d1: Option<f64>,
    pub mean_d2: Option<f64>,
    /// Trials that bailed to the endgame outside a scheduled boundary.
    pub early_exits: u64,
}

/// Summary of a batch. Truncated trials (no capture within the cap) are
/// counted into the moments at the cap value, biasing the mean low; the
/// `truncated` field says how many there were.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub policy: String,
    pub trials: u64,
    pub master_seed: u64,
    pub mean: f64,
    pub stderr: f64,
    pub min: u64,
    pub max: u64,
    pub truncated: u64,
    pub histogram: Vec<HistogramBucket>,
    pub stages: Option<StageSummary>,
}

/// Run a batch and summarize it.
pub fn monte_carlo(
    g: &Graph,
    spec: PolicySpec,
    config: &GameConfig,
    trials: u64,
    master_seed: u64,
    workers: usize,
) -> Result<SimulationReport, EngineError> {
    let outcomes = run_trials(g, spec, config, trials, master_seed, workers)?;
    Ok(summarize(spec, config, master_seed, &outcomes))
}

/// Sequential, order-independent-input summary of finished trials.
pub fn summarize(
    spec: PolicySpec,
    config: &GameConfig,
    master_seed: u64,
    outcomes: &[TrialOutcome],
) -> SimulationReport {
    let trials = outcomes.len() as u64;
    let values: Vec<u64> = outcomes
        .iter()
        .map(|o| o.capture_time.unwrap_or(config.move_cap))
        .collect();
    let truncated = outcomes.iter().filter(|o| o.capture_time.is_none()).count() as u64;

    let (mean, stderr, min, max) = if values.is_empty() {
        (0.0, 0.0, 0, 0)
    } else {
        let n = values.len() as f64;
        let mean = values.iter().map(|&v| v as f64).sum::<f64>() / n;
        let stderr = if values.len() > 1 {
            let ss: f64 = values.iter().map(|&v| (v as f64 - mean).powi(2)).sum();
            (ss / (n - 1.0)).sqrt() / n.sqrt()
        } else {
            0.0
        };
        let min = *values.iter().min().expect("nonempty");
        let max = *values.iter().max().expect("nonempty");
        (mean, stderr, min, max)
    };

    SimulationReport {
        policy: spec.name().to_string(),
        trials,
        master_seed,
        mean,
        stderr,
        min,
        max,
        truncated,
        histogram: histogram(&values, min, max),
        stages: stage_summary(outcomes),
    }
}

fn histogram(values: &[u64], min: u64, max: u64) -> Vec<HistogramBucket> {
    if values.is_empty() {
        return Vec::new();
    }
    let span = max - min + 1;
    let width = span.div_ceil(HISTOGRAM_BUCKETS).max(1);
    let buckets = span.div_ceil(width);
    let mut out: Vec<HistogramBucket> = (0..buckets)
        .map(|b| HistogramBucket {
            lo: min + b * width,
            hi: min + (b + 1) * width,
            count: 0,
        })
        .collect();
    for &v in values {
        out[((v - min) / width) as usize].count += 1;
    }
    out
}

fn stage_summary(outcomes: &[TrialOutcome]) -> Option<StageSummary> {
    let tels: Vec<_> = outcomes.iter().filter_map(|o| o.telemetry).collect();
    if tels.is_empty() || tels.len() != outcomes.len() {
        return None;
    }
    let n = tels.len() as f64;
    let mut mean_stage_moves = [0.0f64; 4];
    for tel in &tels {
        for (acc, &m) in mean_stage_moves.iter_mut().zip(tel.stage_moves.iter()) {
            *acc += m as f64 / n;
        }
    }
    let mean_of = |xs: Vec<usize>| {
        (!xs.is_empty()).then(|| xs.iter().map(|&d| d as f64).sum::<f64>() / xs.len() as f64)
    };
    let d1: Vec<usize> = tels.iter().filter_map(|t| t.d1).collect();
    let d2: Vec<usize> = tels.iter().filter_map(|t| t.d2).collect();
    Some(StageSummary {
        mean_stage_moves,
        stage1_completions: d1.len() as u64,
        stage2_completions: d2.len() as u64,
        mean_d1: mean_of(d1),
        mean_d2: mean_of(d2),
        early_exits: tels.iter().filter(|t| t.early_exit_from.is_some()).count() as u64,
    })
}
