//! Cop strategies.
//!
//! A policy sees the cop's turn: her vertex `x`, the drunk's vertex `y`, the
//! drunk's previous vertex, and a per-trial RNG. It returns the vertex to
//! step to (possibly `y` itself, which captures mid-move).

use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::analysis::walks::{hitting_time_matrix, min_hitting_neighbor};
use crate::engine::EngineError;
use crate::graph::{GeodesicTie, Graph};

/// Tie rule among equally good greedy steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest vertex id.
    Lex,
    /// Uniform among the tied steps.
    Random,
    /// Prefer steps closer to the drunk's previous vertex, then smallest id.
    History,
}

/// A cop strategy by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolicySpec {
    /// Bounce between the start vertex and its smallest neighbor.
    Oscillate,
    /// Uniform random neighbor.
    RandomCop,
    /// Step to a neighbor closest to the drunk.
    Greedy(TieBreak),
    /// Step to the neighbor the drunk's walk would reach soonest.
    HittingTimeGreedy,
    /// Staged pursuit: march to the drunk's start, then to his observed
    /// position, then re-aim every four moves, then chase greedily.
    FourStage,
}

impl PolicySpec {
    /// Every accepted policy string, in display order.
    pub const NAMES: [&'static str; 7] = [
        "oscillate",
        "random",
        "greedy:lex",
        "greedy:random",
        "greedy:history",
        "hitting",
        "smart",
    ];

    pub fn parse(s: &str) -> Result<PolicySpec, EngineError> {
        match s {
            "oscillate" => Ok(PolicySpec::Oscillate),
            "random" => Ok(PolicySpec::RandomCop),
            "greedy:lex" => Ok(PolicySpec::Greedy(TieBreak::Lex)),
            "greedy:random" => Ok(PolicySpec::Greedy(TieBreak::Random)),
            "greedy:history" => Ok(PolicySpec::Greedy(TieBreak::History)),
            "hitting" => Ok(PolicySpec::HittingTimeGreedy),
            "smart" => Ok(PolicySpec::FourStage),
            other => Err(EngineError::UnknownPolicy(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PolicySpec::Oscillate => "oscillate",
            PolicySpec::RandomCop => "random",
            PolicySpec::Greedy(TieBreak::Lex) => "greedy:lex",
            PolicySpec::Greedy(TieBreak::Random) => "greedy:random",
            PolicySpec::Greedy(TieBreak::History) => "greedy:history",
            PolicySpec::HittingTimeGreedy => "hitting",
            PolicySpec::FourStage => "smart",
        }
    }

    /// The matching exact-solver rule, for policies whose step depends only
    /// on the current positions.
    pub fn as_memoryless(&self) -> Option<crate::analysis::MemorylessPolicy> {
        use crate::analysis::MemorylessPolicy as M;
        match self {
            PolicySpec::Oscillate => Some(M::Oscillate),
            PolicySpec::RandomCop => Some(M::RandomCop),
            PolicySpec::Greedy(TieBreak::Lex) => Some(M::GreedyLex),
            PolicySpec::Greedy(TieBreak::Random) => Some(M::GreedyRandom),
            PolicySpec::HittingTimeGreedy => Some(M::HittingTimeGreedy),
            PolicySpec::Greedy(TieBreak::History) | PolicySpec::FourStage => None,
        }
    }
}

/// Per-run policy state shared across trials: the hitting-time table is
/// solved once and handed to every trial.
#[derive(Debug, Clone)]
pub struct PolicyFactory {
    spec: PolicySpec,
    hitting: Option<Arc<Vec<Vec<f64>>>>,
}

impl PolicyFactory {
    pub fn new(spec: PolicySpec, g: &Graph) -> PolicyFactory {
        let hitting = matches!(spec, PolicySpec::HittingTimeGreedy)
            .then(|| Arc::new(hitting_time_matrix(g)));
        PolicyFactory { spec, hitting }
    }

    pub fn spec(&self) -> PolicySpec {
        self.spec
    }

    /// Fresh per-trial state.
    pub fn instance(&self, g: &Graph, cop_start: usize, drunk_start: usize) -> CopPolicy {
        match self.spec {
            PolicySpec::Oscillate => CopPolicy::Oscillate {
                home: cop_start,
                partner: g.neighbors(cop_start).first().copied().unwrap_or(cop_start),
            },
            PolicySpec::RandomCop => CopPolicy::RandomCop,
            PolicySpec::Greedy(tie) => CopPolicy::Greedy { tie },
            PolicySpec::HittingTimeGreedy => CopPolicy::HittingTimeGreedy {
                hit: self.hitting.as_ref().expect("precomputed").clone(),
            },
            PolicySpec::FourStage => CopPolicy::FourStage(FourStageState::new(drunk_start)),
        }
    }
}

/// What the staged policy did during one trial.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct StageTelemetry {
    /// Cop moves spent in each stage.
    pub stage_moves: [u64; 4],
    /// Cop-drunk distance when stage 1 completed (None if skipped by an
    /// early exit or capture).
    pub d1: Option<usize>,
    /// Distance when stage 2 completed.
    pub d2: Option<usize>,
    /// Stage from which the policy bailed straight to the endgame, when that
    /// happened anywhere other than a scheduled stage-3 block boundary.
    pub early_exit_from: Option<u8>,
}

/// Mutable state of the staged policy.
#[derive(Debug, Clone)]
pub struct FourStageState {
    stage: u8,
    /// Locked destination during stages 1 to 3.
    target: usize,
    /// Position inside the current four-move block (stage 3).
    block_step: u8,
    pub telemetry: StageTelemetry,
}

impl FourStageState {
    fn new(drunk_start: usize) -> FourStageState {
        FourStageState {
            stage: 1,
            target: drunk_start,
            block_step: 0,
            telemetry: StageTelemetry::default(),
        }
    }

    pub fn stage(&self) -> u8 {
        self.stage
    }
}

/// One staged-policy decision. Deterministic: every stage steps along
/// lexicographic geodesics, so the RNG is threaded through untouched.
fn four_stage_decide<R: Rng>(
    g: &Graph,
    x: usize,
    y: usize,
    s: &mut FourStageState,
    rng: &mut R,
) -> usize {
    let d = g.dist(x, y);
    // A single distance test drives both exits to the endgame: the scheduled
    // one at a stage-3 block boundary and the emergency one from anywhere
    // else. Only the latter is flagged in telemetry.
    if s.stage < 4 && d <= 3 {
        if !(s.stage == 3 && s.block_step == 4) {
            s.telemetry.early_exit_from = Some(s.stage);
        }
        s.stage = 4;
    }
    if s.stage == 1 && x == s.target {
        // Reached the drunk's start; lock onto wherever he is now.
        s.telemetry.d1 = Some(d);
        s.stage = 2;
        s.target = y;
    }
    if s.stage == 2 && x == s.target {
        s.telemetry.d2 = Some(d);
        s.stage = 3;
        s.block_step = 0;
    }
    if s.stage == 3 {
        if s.block_step == 4 {
            s.block_step = 0;
        }
        if s.block_step == 0 {
            // Block boundary with d >= 4: re-aim at the drunk's position.
            s.target = y;
        }
        s.block_step += 1;
    }
    s.telemetry.stage_moves[(s.stage - 1) as usize] += 1;
    let target = if s.stage == 4 { y } else { s.target };
    // Arrival handling above guarantees x != target here: stages retarget on
    // arrival and the endgame target is the drunk, never the cop.
    g.geodesic_step(x, target, GeodesicTie::Lex, rng)
}

/// Per-trial policy state.
#[derive(Debug, Clone)]
pub enum CopPolicy {
    Oscillate { home: usize, partner: usize },
    RandomCop,
    Greedy { tie: TieBreak },
    HittingTimeGreedy { hit: Arc<Vec<Vec<f64>>> },
    FourStage(FourStageState),
}

impl CopPolicy {
    /// The cop's move from `x` against the drunk at `y` (previous drunk
    /// vertex `y_prev`). Requires `x != y`.
    pub fn decide<R: Rng>(
        &mut self,
        g: &Graph,
        x: usize,
        y: usize,
        y_prev: usize,
        rng: &mut R,
    ) -> usize {
        debug_assert_ne!(x, y, "the game should have ended");
        match self {
            CopPolicy::Oscillate { home, partner } => {
                if x == *home {
                    *partner
                } else {
                    *home
                }
            }
            CopPolicy::RandomCop => *g.neighbors(x).choose(rng).expect("connected, n >= 2"),
            CopPolicy::Greedy { tie: TieBreak::Lex } => {
                g.geodesic_step(x, y, GeodesicTie::Lex, rng)
            }
            CopPolicy::Greedy {
                tie: TieBreak::Random,
            } => g.geodesic_step(x, y, GeodesicTie::Random, rng),
            CopPolicy::Greedy {
                tie: TieBreak::History,
            } => {
                let dist_y = g.dist_from(y);
                let dist_prev = g.dist_from(y_prev);
                *g.neighbors(x)
                    .iter()
                    .min_by_key(|&&w| (dist_y[w], dist_prev[w], w))
                    .expect("connected, n >= 2")
            }
            CopPolicy::HittingTimeGreedy { hit } => min_hitting_neighbor(g, hit, x, y),
            CopPolicy::FourStage(state) => four_stage_decide(g, x, y, state, rng),
        }
    }

    /// Stage telemetry, for the staged policy only.
    pub fn telemetry(&self) -> Option<StageTelemetry> {
        match self {
            CopPolicy::FourStage(state) => Some(state.telemetry),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::sim::trial_rng;
    use crate::generators::{complete_bipartite, path};

    fn decide_once(g: &Graph, spec: PolicySpec, x: usize, y: usize, y_prev: usize) -> usize {
        let mut p = PolicyFactory::new(spec, g).instance(g, x, y);
        p.decide(g, x, y, y_prev, &mut trial_rng(0, 0))
    }

    #[test]
    fn policy_names_round_trip() {
        for name in PolicySpec::NAMES {
            assert_eq!(PolicySpec::parse(name).unwrap().name(), name);
        }
        assert!(matches!(
            PolicySpec::parse("clever"),
            Err(EngineError::UnknownPolicy(_))
        ));
    }

    #[test]
    fn oscillation_bounces_between_home_and_smallest_neighbor() {
        // On P5 from vertex 2 the partner is 1: steps go 1, 2, 1, 2, ...
        let g = path(5).unwrap();
        let f = PolicyFactory::new(PolicySpec::Oscillate, &g);
        let mut p = f.instance(&g, 2, 0);
        let mut rng = trial_rng(0, 0);
        assert_eq!(p.decide(&g, 2, 4, 4, &mut rng), 1);
        assert_eq!(p.decide(&g, 1, 4, 4, &mut rng), 2);
        assert_eq!(p.decide(&g, 2, 4, 4, &mut rng), 1);
    }

    #[test]
    fn greedy_history_prefers_the_drunk_trail() {
        // Neighbors 1 and 2 of the cop both touch the drunk at 3, but only 2
        // touches his previous vertex 4.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(decide_once(&g, PolicySpec::Greedy(TieBreak::Lex), 0, 3, 4), 1);
        assert_eq!(
            decide_once(&g, PolicySpec::Greedy(TieBreak::History), 0, 3, 4),
            2
        );
        // With no history signal the lex rule reappears.
        assert_eq!(
            decide_once(&g, PolicySpec::Greedy(TieBreak::History), 0, 3, 3),
            1
        );
    }

    #[test]
    fn hitting_policy_steps_onto_an_adjacent_drunk() {
        let g = complete_bipartite(1, 3).unwrap();
        assert_eq!(decide_once(&g, PolicySpec::HittingTimeGreedy, 0, 2, 2), 2);
    }

    #[test]
    fn hitting_policy_prefers_the_funnel_hub() {
        // On a star the drunk must pass through the center: from a leaf, the
        // cop moves there (its hitting time is 1, another leaf's is 2).
        let g = complete_bipartite(1, 3).unwrap();
        assert_eq!(decide_once(&g, PolicySpec::HittingTimeGreedy, 1, 2, 2), 0);
    }

    #[test]
    fn staged_policy_walks_the_script() {
        // Drunk marches right along P50 at the cop's pace, so distances stay
        // at 10 and every stage completes on schedule.
        let g = path(50).unwrap();
        let mut s = FourStageState::new(10);
        let mut rng = trial_rng(0, 0);
        let mut x = 0usize;
        for turn in 1..=24 {
            let y = 10 + turn - 1; // drunk has taken turn-1 steps
            let to = four_stage_decide(&g, x, y, &mut s, &mut rng);
            assert_eq!(to, x + 1, "turn {turn}");
            x = to;
        }
        // Turns 1..=10 chase the start (stage 1); turn 11 sees x == 10,
        // records the handoff and re-aims at the drunk's position 20.
        assert_eq!(s.telemetry.stage_moves[0], 10);
        assert_eq!(s.telemetry.d1, Some(10));
        // Turn 21 sees x == 20, drunk at 30: stage 3 begins.
        assert_eq!(s.telemetry.stage_moves[1], 10);
        assert_eq!(s.telemetry.d2, Some(10));
        assert_eq!(s.stage(), 3);
        // Turns 21..=24 are one full block aimed at 30.
        assert_eq!(s.telemetry.stage_moves[2], 4);
        assert_eq!(s.target, 30);
        assert_eq!(s.block_step, 4);

        // Turn 25 is a block boundary with d = 34 - 24 = 10: re-aim, step.
        let to = four_stage_decide(&g, x, 34, &mut s, &mut rng);
        assert_eq!(to, 25);
        assert_eq!(s.target, 34);
        assert_eq!(s.telemetry.stage_moves[2], 5);
        assert_eq!(s.telemetry.early_exit_from, None);
    }

    #[test]
    fn staged_policy_exits_early_when_the_drunk_blunders_close() {
        // Drunk hovers around 10; the cop closes in and bails out of stage 1
        // the first turn the distance drops to 3 or less.
        let g = path(30).unwrap();
        let mut s = FourStageState::new(10);
        let mut rng = trial_rng(0, 0);
        let mut x = 0usize;
        let mut turn = 0;
        loop {
            turn += 1;
            let y = if turn % 2 == 1 { 10 } else { 11 };
            let to = four_stage_decide(&g, x, y, &mut s, &mut rng);
            if s.stage() == 4 {
                // x = 8, y = 10 at turn 9: first time d <= 3.
                assert_eq!(turn, 9);
                assert_eq!(x, 8);
                assert_eq!(s.telemetry.early_exit_from, Some(1));
                assert_eq!(s.telemetry.d1, None);
                assert_eq!(s.telemetry.stage_moves[0], 8);
                assert_eq!(s.telemetry.stage_moves[3], 1);
                assert_eq!(to, 9);
                break;
            }
            x = to;
            assert!(turn < 20, "exit never fired");
        }
    }

    #[test]
    fn scheduled_boundary_exit_is_not_flagged_early() {
        // Stage 3 on P40, block finishing just as the drunk sits 3 away.
        let g = path(40).unwrap();
        let mut s = FourStageState {
            stage: 3,
            target: 24,
            block_step: 4,
            telemetry: StageTelemetry {
                stage_moves: [5, 5, 4, 0],
                d1: Some(6),
                d2: Some(7),
                early_exit_from: None,
            },
        };
        let mut rng = trial_rng(0, 0);
        let to = four_stage_decide(&g, 20, 23, &mut s, &mut rng);
        assert_eq!(s.stage(), 4);
        assert_eq!(s.telemetry.early_exit_from, None);
        assert_eq!(to, 21);
        // Same geometry but mid-block: flagged.
        let mut s2 = FourStageState {
            block_step: 2,
            ..s.clone()
        };
        s2.stage = 3;
        s2.telemetry.early_exit_from = None;
        let to = four_stage_decide(&g, 20, 23, &mut s2, &mut rng);
        assert_eq!(s2.telemetry.early_exit_from, Some(3));
        assert_eq!(to, 21);
    }

    #[test]
    fn memoryless_mapping_covers_exactly_the_stateless_policies() {
        assert!(PolicySpec::parse("greedy:history")
            .unwrap()
            .as_memoryless()
            .is_none());
        assert!(PolicySpec::parse("smart").unwrap().as_memoryless().is_none());
        for name in ["oscillate", "random", "greedy:lex", "greedy:random", "hitting"] {
            assert!(PolicySpec::parse(name).unwrap().as_memoryless().is_some());
        }
    }
}
