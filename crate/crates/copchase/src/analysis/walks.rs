//! Exact random-walk computations: t-step occupation distributions and
//! expected hitting times for the uniform walk on a connected graph.

use nalgebra::{DMatrix, DVector};

use crate::graph::Graph;

/// Exact occupation probabilities of the uniform random walk after `t` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceDistribution {
    pub source: usize,
    pub t: usize,
    /// `probs[v]` is P(walk started at `source` sits at `v` after `t` steps).
    pub probs: Vec<f64>,
}

/// Pushes a distribution one walk step forward.
fn step(g: &Graph, probs: &[f64]) -> Vec<f64> {
    let mut next = vec![0.0; g.n()];
    for (v, &p) in probs.iter().enumerate() {
        if p > 0.0 {
            let share = p / g.degree(v) as f64;
            for &w in g.neighbors(v) {
                next[w] += share;
            }
        }
    }
    next
}

/// Distributions for every horizon `0..=t_max` at once; row `t` is the t-step
/// distribution. Cheaper than repeated [`tstep_distribution`] calls when a
/// scan needs all horizons.
pub fn walk_distributions(g: &Graph, source: usize, t_max: usize) -> Vec<Vec<f64>> {
    let mut probs = vec![0.0; g.n()];
    probs[source] = 1.0;
    let mut rows = vec![probs];
    if g.n() == 1 {
        // The one-vertex walk has nowhere to go; keep the point mass.
        rows.resize(t_max + 1, rows[0].clone());
        return rows;
    }
    for _ in 0..t_max {
        rows.push(step(g, rows.last().expect("nonempty")));
    }
    rows
}

/// Exact t-step distribution by push-forward.
pub fn tstep_distribution(g: &Graph, source: usize, t: usize) -> DistanceDistribution {
    let probs = walk_distributions(g, source, t).pop().expect("t_max row");
    DistanceDistribution { source, t, probs }
}

/// P(walk from `x0` ends within distance 2 of `x0` after exactly 3 steps).
pub fn three_step_prob(g: &Graph, x0: usize) -> f64 {
    mass_within(g, x0, 3, 2)
}

/// P(walk from `x0` ends within distance 3 of `x0` after exactly 4 steps).
pub fn four_step_prob(g: &Graph, x0: usize) -> f64 {
    mass_within(g, x0, 4, 3)
}

fn mass_within(g: &Graph, x0: usize, t: usize, radius: usize) -> f64 {
    let probs = tstep_distribution(g, x0, t).probs;
    let dist = g.dist_from(x0);
    probs
        .iter()
        .zip(dist.iter())
        .filter(|(_, &d)| d <= radius)
        .map(|(p, _)| p)
        .sum()
}

/// Expected hitting times of `target` from every vertex: `h[target] = 0` and
/// `h(v) = 1 + mean of h over the neighbors of v`.
///
/// Solved directly (dense LU); sweep iteration would need on the order of
/// n^2 rounds on path-like graphs, where hitting times grow quadratically.
pub fn hitting_times(g: &Graph, target: usize) -> Vec<f64> {
    let n = g.n();
    if n == 1 {
        return vec![0.0];
    }
    // Unknowns are the vertices other than target, in id order.
    let index = |v: usize| if v < target { v } else { v - 1 };
    let mut a = DMatrix::<f64>::identity(n - 1, n - 1);
    let b = DVector::<f64>::from_element(n - 1, 1.0);
    for v in 0..n {
        if v == target {
            continue;
        }
        let share = 1.0 / g.degree(v) as f64;
        for &w in g.neighbors(v) {
            if w != target {
                a[(index(v), index(w))] -= share;
            }
        }
    }
    let sol = a
        .lu()
        .solve(&b)
        .expect("hitting-time system of a connected graph is nonsingular");
    let mut h = vec![0.0; n];
    for v in 0..n {
        if v != target {
            h[v] = sol[index(v)];
        }
    }
    h
}

/// `h[target][source]` for all targets; one solve per target.
pub fn hitting_time_matrix(g: &Graph) -> Vec<Vec<f64>> {
    (0..g.n()).map(|t| hitting_times(g, t)).collect()
}

/// First (smallest-id) neighbor of `x` minimizing the walk's hitting time
/// from `y`, so ties resolve lexicographically. Shared by the simulation
/// policy and the exact solver, which must make identical choices.
pub fn min_hitting_neighbor(g: &Graph, hit: &[Vec<f64>], x: usize, y: usize) -> usize {
    let nb = g.neighbors(x);
    let mut best = nb[0];
    for &w in &nb[1..] {
        if hit[w][y] < hit[best][y] {
            best = w;
        }
    }
    best
}
