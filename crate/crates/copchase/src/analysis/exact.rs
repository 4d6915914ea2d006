//! Exact expected capture times.
//!
//! The joint state is (cop vertex, drunk vertex) at the cop's turn. A move is
//! one cop step followed by one drunk step, with capture absorbing mid-move.
//! For a memoryless cop kernel pi(c' | c, d),
//!
//! ```text
//! E(c,d) = sum_{c'} pi(c'|c,d) * ( 1                      if c' = d
//!                                  1 + avg_{d'~d} E'(c',d') otherwise )
//! with E'(c',d') = 0 if d' = c', else E(c',d').
//! ```
//!
//! Systems are solved by in-place Gauss-Seidel sweeps ordered drunk-vertex
//! then cop-vertex, starting from zero; iterates increase monotonically to
//! the solution. Optimal play replaces the kernel with a minimum over the
//! cop's legal moves (value iteration, same sweep order).

use crate::analysis::walks::{hitting_time_matrix, min_hitting_neighbor};
use crate::analysis::AnalysisError;
use crate::graph::Graph;

/// Default stopping tolerance on the max sweep update.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Sweep cap; hitting it raises [`AnalysisError::NonConvergence`].
pub const MAX_SWEEPS: u64 = 1_000_000;

/// Joint-state guard: tables are dense n^2 grids.
pub const SOLVER_VERTEX_LIMIT: usize = 2000;

/// Memoryless cop rules the exact solver accepts.
///
/// `Oscillate` is solved per home vertex: row c of the table assumes the cop
/// bounces between c and c's smallest neighbor, matching an engine trial
/// started at cop_start = c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemorylessPolicy {
    GreedyLex,
    GreedyRandom,
    RandomCop,
    Oscillate,
    HittingTimeGreedy,
}

impl MemorylessPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            MemorylessPolicy::GreedyLex => "greedy:lex",
            MemorylessPolicy::GreedyRandom => "greedy:random",
            MemorylessPolicy::RandomCop => "random",
            MemorylessPolicy::Oscillate => "oscillate",
            MemorylessPolicy::HittingTimeGreedy => "hitting",
        }
    }
}

/// Dense map from joint starts to expected remaining capture time.
#[derive(Debug, Clone)]
pub struct ValueTable {
    n: usize,
    values: Vec<f64>,
    /// Gauss-Seidel sweeps (or value-iteration rounds) performed.
    pub sweeps: u64,
    /// Max update magnitude of the final sweep.
    pub residual: f64,
}

impl ValueTable {
    fn zeros(n: usize) -> Self {
        ValueTable {
            n,
            values: vec![0.0; n * n],
            sweeps: 0,
            residual: 0.0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Expected capture time from cop at `cop`, drunk at `drunk`, cop to move.
    pub fn value(&self, cop: usize, drunk: usize) -> f64 {
        self.values[cop * self.n + drunk]
    }

    fn set(&mut self, cop: usize, drunk: usize, v: f64) {
        self.values[cop * self.n + drunk] = v;
    }

    /// Maximum entry and its joint start.
    pub fn max_entry(&self) -> (f64, (usize, usize)) {
        let mut best = (0.0f64, (0, 0));
        for c in 0..self.n {
            for d in 0..self.n {
                let v = self.value(c, d);
                if v > best.0 {
                    best = (v, (c, d));
                }
            }
        }
        best
    }

    /// Rows in `(cop, drunk, value)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |c| (0..self.n).map(move |d| (c, d, self.value(c, d))))
    }
}

/// Cost of the cop stepping to `c_next` against the drunk at `d`, given the
/// current table. Capture on the cop's half costs the move; otherwise the
/// drunk replies, absorbing at 0 if he steps onto the cop.
#[inline]
fn move_cost(g: &Graph, table: &ValueTable, c_next: usize, d: usize) -> f64 {
    if c_next == d {
        return 1.0;
    }
    let mut acc = 0.0;
    for &d_next in g.neighbors(d) {
        if d_next != c_next {
            acc += table.value(c_next, d_next);
        }
    }
    1.0 + acc / g.degree(d) as f64
}

/// Expected capture time table for a memoryless cop.
pub fn exact_expected_capture(
    g: &Graph,
    policy: MemorylessPolicy,
    tolerance: f64,
    cop_may_idle: bool,
) -> Result<ValueTable, AnalysisError> {
    let n = g.n();
    if n > SOLVER_VERTEX_LIMIT {
        return Err(AnalysisError::TooLarge {
            n,
            limit: SOLVER_VERTEX_LIMIT,
        });
    }
    // No current kernel ever prefers idling: a distance-reducing neighbor
    // always exists, so `cop_may_idle` changes nothing for these rules. The
    // flag is accepted for signature parity with `optimal_capture_values`.
    let _ = cop_may_idle;
    if let MemorylessPolicy::Oscillate = policy {
        return oscillate_table(g, tolerance);
    }

    let hit = matches!(policy, MemorylessPolicy::HittingTimeGreedy)
        .then(|| hitting_time_matrix(g));
    let mut table = ValueTable::zeros(n);
    for sweep in 1..=MAX_SWEEPS {
        let mut residual = 0.0f64;
        for d in 0..n {
            let dist = g.dist_from(d);
            for c in 0..n {
                if c == d {
                    continue;
                }
                let value = match policy {
                    MemorylessPolicy::GreedyLex => {
                        let best = g.neighbors(c).iter().map(|&w| dist[w]).min().unwrap();
                        let c_next = *g
                            .neighbors(c)
                            .iter()
                            .find(|&&w| dist[w] == best)
                            .expect("min exists");
                        move_cost(g, &table, c_next, d)
                    }
                    MemorylessPolicy::GreedyRandom => {
                        let best = g.neighbors(c).iter().map(|&w| dist[w]).min().unwrap();
                        let ties: Vec<usize> = g
                            .neighbors(c)
                            .iter()
                            .copied()
                            .filter(|&w| dist[w] == best)
                            .collect();
                        ties.iter()
                            .map(|&w| move_cost(g, &table, w, d))
                            .sum::<f64>()
                            / ties.len() as f64
                    }
                    MemorylessPolicy::RandomCop => {
                        g.neighbors(c)
                            .iter()
                            .map(|&w| move_cost(g, &table, w, d))
                            .sum::<f64>()
                            / g.degree(c) as f64
                    }
                    MemorylessPolicy::HittingTimeGreedy => {
                        let hit = hit.as_ref().expect("precomputed");
                        let c_next = min_hitting_neighbor(g, hit, c, d);
                        move_cost(g, &table, c_next, d)
                    }
                    MemorylessPolicy::Oscillate => unreachable!("handled above"),
                };
                residual = residual.max((value - table.value(c, d)).abs());
                table.set(c, d, value);
            }
        }
        table.sweeps = sweep;
        table.residual = residual;
        if residual < tolerance {
            return Ok(table);
        }
    }
    Err(AnalysisError::NonConvergence {
        residual: table.residual,
        sweeps: table.sweeps,
    })
}

/// Oscillation solved per home: the cop alternates home <-> lex-smallest
/// neighbor of home, a two-phase chain over drunk positions.
fn oscillate_table(g: &Graph, tolerance: f64) -> Result<ValueTable, AnalysisError> {
    let n = g.n();
    let mut table = ValueTable::zeros(n);
    let mut worst = (0u64, 0.0f64);
    for home in 0..n {
        let Some(&partner) = g.neighbors(home).first() else {
            continue; // K_1: the lone entry stays 0
        };
        // phase 0: cop at home (moving to partner); phase 1: at partner.
        let mut e = [vec![0.0f64; n], vec![0.0f64; n]];
        let mut done = false;
        for sweep in 1..=MAX_SWEEPS {
            let mut residual = 0.0f64;
            for phase in 0..2 {
                let (at, to) = if phase == 0 {
                    (home, partner)
                } else {
                    (partner, home)
                };
                for d in 0..n {
                    if d == at {
                        continue; // already captured before this turn
                    }
                    let value = if to == d {
                        1.0
                    } else {
                        let mut acc = 0.0;
                        for &d_next in g.neighbors(d) {
                            if d_next != to {
                                acc += e[1 - phase][d_next];
                            }
                        }
                        1.0 + acc / g.degree(d) as f64
                    };
                    residual = residual.max((value - e[phase][d]).abs());
                    e[phase][d] = value;
                }
            }
            if residual < tolerance {
                worst = (worst.0.max(sweep), worst.1.max(residual));
                done = true;
                break;
            }
            if sweep == MAX_SWEEPS {
                return Err(AnalysisError::NonConvergence {
                    residual,
                    sweeps: sweep,
                });
            }
        }
        debug_assert!(done);
        for (d, &val) in e[0].iter().enumerate() {
            if d != home {
                table.set(home, d, val);
            }
        }
    }
    table.sweeps = worst.0;
    table.residual = worst.1;
    Ok(table)
}

/// Value iteration for the optimal cop, from V = 0, monotone nondecreasing.
/// With `cop_may_idle` the cop may also stay put (the parity fix on bipartite
/// graphs).
pub fn optimal_capture_values(
    g: &Graph,
    tolerance: f64,
    cop_may_idle: bool,
) -> Result<ValueTable, AnalysisError> {
    let n = g.n();
    if n > SOLVER_VERTEX_LIMIT {
        return Err(AnalysisError::TooLarge {
            n,
            limit: SOLVER_VERTEX_LIMIT,
        });
    }
    let mut table = ValueTable::zeros(n);
    for sweep in 1..=MAX_SWEEPS {
        let mut residual = 0.0f64;
        for d in 0..n {
            for c in 0..n {
                if c == d {
                    continue;
                }
                let mut best = g
                    .neighbors(c)
                    .iter()
                    .map(|&w| move_cost(g, &table, w, d))
                    .fold(f64::INFINITY, f64::min);
                if cop_may_idle {
                    best = best.min(move_cost(g, &table, c, d));
                }
                residual = residual.max((best - table.value(c, d)).abs());
                table.set(c, d, best);
            }
        }
        table.sweeps = sweep;
        table.residual = residual;
        if residual < tolerance {
            return Ok(table);
        }
    }
    Err(AnalysisError::NonConvergence {
        residual: table.residual,
        sweeps: table.sweeps,
    })
}
