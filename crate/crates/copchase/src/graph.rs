//! Undirected simple connected graphs with the distance machinery the rest of
//! the crate leans on: BFS fields, an optional all-pairs cache, girth,
//! regularity and geodesic stepping.
//!
//! Vertices are contiguous `usize` ids in `0..n`. A `Graph` is immutable after
//! construction; `max_degree` and `diameter` are computed once and cached.

use std::borrow::Cow;
use std::collections::VecDeque;

use rand::{Rng, RngExt};
use thiserror::Error;

/// Graphs up to this order keep a full all-pairs distance table by default.
pub const APSP_CACHE_LIMIT: usize = 2000;

/// Construction-time validation failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) out of range for n = {n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is not connected (vertex {missing} unreachable from 0)")]
    Disconnected { missing: usize },
}

/// BFS distances from a single source. All entries are finite because every
/// `Graph` is connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    source: usize,
    dist: Vec<usize>,
}

impl DistanceField {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn dist(&self, v: usize) -> usize {
        self.dist[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dist
    }

    pub fn max(&self) -> usize {
        *self.dist.iter().max().expect("graph is nonempty")
    }
}

/// Tie rule for [`Graph::geodesic_step`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeodesicTie {
    /// Smallest vertex id among the distance-reducing neighbors.
    Lex,
    /// Uniform among the distance-reducing neighbors.
    Random,
}

/// Immutable simple connected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    max_degree: usize,
    diameter: usize,
    apsp: Option<Vec<Vec<usize>>>,
}

impl Graph {
    /// Builds and validates a graph, caching the all-pairs table when
    /// `n <= APSP_CACHE_LIMIT`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges_with_cache(n, edges, n <= APSP_CACHE_LIMIT)
    }

    /// As [`Graph::from_edges`] with an explicit cache toggle. Disabling the
    /// cache makes `dist`/`dist_from` run a fresh BFS per call; enabling it on
    /// very large graphs costs `n^2` words of memory.
    pub fn from_edges_with_cache(
        n: usize,
        edges: &[(usize, usize)],
        cache_all_pairs: bool,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(w[0]),
                    v: u.max(w[0]),
                });
            }
        }

        let mut g = Graph {
            adj,
            edge_count: edges.len(),
            max_degree: 0,
            diameter: 0,
            apsp: None,
        };
        g.max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);

        // One BFS sweep per source settles connectivity and the diameter, and
        // fills the cache when requested.
        let from_zero = g.bfs(0);
        if let Some(missing) = (0..n).find(|&v| from_zero.dist(v) == usize::MAX) {
            return Err(GraphError::Disconnected { missing });
        }
        let mut diameter = from_zero.max();
        let mut rows = Vec::new();
        if cache_all_pairs {
            rows.push(from_zero.dist.clone());
        }
        for src in 1..n {
            let field = g.bfs(src);
            diameter = diameter.max(field.max());
            if cache_all_pairs {
                rows.push(field.dist);
            }
        }
        g.diameter = diameter;
        g.apsp = cache_all_pairs.then_some(rows);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|nbrs| nbrs.len() == d).then_some(d)
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Single-source BFS. Unreached entries stay `usize::MAX`, which only
    /// happens during construction; finished graphs are connected.
    pub fn bfs(&self, source: usize) -> DistanceField {
        let mut dist = vec![usize::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        DistanceField { source, dist }
    }

    /// Distance between two vertices; cache hit or a fresh BFS.
    pub fn dist(&self, u: usize, v: usize) -> usize {
        match &self.apsp {
            Some(rows) => rows[u][v],
            None => self.bfs(u).dist(v),
        }
    }

    /// Full distance row from `source`, borrowed from the cache when present.
    pub fn dist_from(&self, source: usize) -> Cow<'_, [usize]> {
        match &self.apsp {
            Some(rows) => Cow::Borrowed(rows[source].as_slice()),
            None => Cow::Owned(self.bfs(source).dist),
        }
    }

    /// Length of a shortest cycle, or `None` for trees (and `K_1`).
    ///
    /// One BFS per root; a non-tree edge seen at depth d closes a cycle of
    /// length `dist[u] + dist[w] + 1`, and the minimum over all roots is the
    /// girth.
    pub fn girth(&self) -> Option<usize> {
        if self.edge_count < self.n() {
            // A connected graph with fewer than n edges is a tree.
            return None;
        }
        let mut best = usize::MAX;
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if dist[u] * 2 >= best {
                    continue;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Distance-reducing neighbors of `from` with respect to `target`,
    /// ascending. Empty only when `from == target`.
    pub fn geodesic_candidates(&self, from: usize, target: usize) -> Vec<usize> {
        let dist = self.dist_from(target);
        let d = dist[from];
        self.adj[from]
            .iter()
            .copied()
            .filter(|&w| dist[w] + 1 == d)
            .collect()
    }

    /// One step from `from` along a shortest path to `target`.
    ///
    /// Panics if `from == target`: there is no step to take and callers are
    /// expected to have handled arrival already.
    pub fn geodesic_step<R: Rng>(
        &self,
        from: usize,
        target: usize,
        tie: GeodesicTie,
        rng: &mut R,
    ) -> usize {
        assert_ne!(from, target, "geodesic_step called at its target");
        let dist = self.dist_from(target);
        let d = dist[from];
        let reduces = |w: &&usize| dist[**w] + 1 == d;
        match tie {
            GeodesicTie::Lex => {
                // Neighbors are sorted, so the first reducer is the lex choice.
                *self.adj[from]
                    .iter()
                    .find(reduces)
                    .expect("connected graph: some neighbor lies on a geodesic")
            }
            GeodesicTie::Random => {
                let k = self.adj[from].iter().filter(reduces).count();
                let pick = rng.random_range(0..k);
                *self.adj[from]
                    .iter()
                    .filter(reduces)
                    .nth(pick)
                    .expect("pick < count")
            }
        }
    }
}
