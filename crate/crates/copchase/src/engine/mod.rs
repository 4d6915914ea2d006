//! Game engine: one pursuit trial and seeded Monte Carlo over many.
//!
//! A move is one cop step followed by one drunk step. The cop may capture
//! mid-move by stepping onto the drunk, in which case the drunk does not
//! reply. Coinciding starts count as capture at time zero.

pub mod policy;
pub mod sim;

pub use policy::{CopPolicy, FourStageState, PolicyFactory, PolicySpec, StageTelemetry, TieBreak};
pub use sim::{
    monte_carlo, run_trials, summarize, trial_rng, HistogramBucket, SimulationReport,
    StageSummary,
};

use rand::seq::IndexedRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("start vertex {vertex} out of range for a graph on {n} vertices")]
    StartOutOfRange { vertex: usize, n: usize },
    #[error("policy returned an illegal move {from} -> {to}")]
    PolicyFault { from: usize, to: usize },
    #[error("unknown policy {0:?}; expected one of oscillate, random, greedy:lex, greedy:random, greedy:history, hitting, smart")]
    UnknownPolicy(String),
}

/// Starting positions and run limits for one trial.
#[derive(Debug, Clone, Copy)]
pub struct GameConfig {
    pub cop_start: usize,
    pub drunk_start: usize,
    /// Allow the cop to stay put for a move.
    pub cop_may_idle: bool,
    /// Hard stop; a trial still running here reports no capture.
    pub move_cap: u64,
    /// Keep the full (cop, drunk) position list.
    pub record_trajectory: bool,
}

impl GameConfig {
    pub fn new(cop_start: usize, drunk_start: usize) -> GameConfig {
        GameConfig {
            cop_start,
            drunk_start,
            cop_may_idle: false,
            move_cap: 10_000_000,
            record_trajectory: false,
        }
    }

    pub fn with_trajectory(mut self) -> GameConfig {
        self.record_trajectory = true;
        self
    }

    pub fn with_move_cap(mut self, cap: u64) -> GameConfig {
        self.move_cap = cap;
        self
    }

    fn validate(&self, g: &Graph) -> Result<(), EngineError> {
        for vertex in [self.cop_start, self.drunk_start] {
            if vertex >= g.n() {
                return Err(EngineError::StartOutOfRange { vertex, n: g.n() });
            }
        }
        Ok(())
    }
}

/// Result of one trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    /// Moves until capture, or None if the cap cut the trial short.
    pub capture_time: Option<u64>,
    /// Moves actually played (equals capture_time unless truncated).
    pub moves: u64,
    /// (cop, drunk) after every move, starting with the initial pair. The
    /// final pair coincides exactly when capture happened; no earlier pair
    /// does.
    pub trajectory: Option<Vec<(usize, usize)>>,
    /// Stage breakdown, for the staged policy.
    pub telemetry: Option<StageTelemetry>,
    /// RNG stream index when run as part of a batch.
    pub stream: Option<u64>,
}

/// Play a single trial with the given per-trial RNG.
pub fn play_game<R: Rng>(
    g: &Graph,
    factory: &PolicyFactory,
    config: &GameConfig,
    rng: &mut R,
) -> Result<TrialOutcome, EngineError> {
    config.validate(g)?;
    let mut policy = factory.instance(g, config.cop_start, config.drunk_start);
    let mut x = config.cop_start;
    let mut y = config.drunk_start;
    let mut y_prev = y;
    let mut trajectory = config.record_trajectory.then(|| vec![(x, y)]);

    let mut capture_time = None;
    let mut moves = 0;
    if x != y {
        for t in 1..=config.move_cap {
            let to = policy.decide(g, x, y, y_prev, rng);
            let legal = (to == x && config.cop_may_idle) || g.has_edge(x, to);
            if !legal {
                return Err(EngineError::PolicyFault { from: x, to });
            }
            x = to;
            moves = t;
            if x == y {
                capture_time = Some(t);
            } else {
                y_prev = y;
                y = *g.neighbors(y).choose(rng).expect("connected, n >= 2");
                if x == y {
                    capture_time = Some(t);
                }
            }
            if let Some(tr) = trajectory.as_mut() {
                tr.push((x, y));
            }
            if capture_time.is_some() {
                break;
            }
        }
    } else {
        capture_time = Some(0);
    }

    Ok(TrialOutcome {
        capture_time,
        moves,
        trajectory,
        telemetry: policy.telemetry(),
        stream: None,
    })
}
