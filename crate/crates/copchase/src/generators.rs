//! Graph family generators.
//!
//! Every family documents its vertex labeling so tests and start-vertex
//! defaults can address specific vertices:
//!
//! * `path(n)`: endpoints 0 and n-1.
//! * `cycle(n)`: vertex i adjacent to (i+1) mod n.
//! * `complete_bipartite(a, b)`: side one is `0..a`, side two `a..a+b`.
//! * `lollipop(n, c)`: clique on `0..k` with `k = max(2, round(c * n^(1/3)))`,
//!   a path attached at vertex k-1, far path endpoint n-1.
//! * `ladder_basement(n)`: see [`ladder_basement`].
//! * `projective_incidence(q)`: points `0..N`, lines `N..2N`, `N = q^2+q+1`.
//! * `funnel(n)`: see [`funnel`].
//! * random families seeded explicitly; same seed, same graph.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Hard ceiling for [`all_connected_graphs`]: 2^28 edge subsets at n = 8.
pub const MAX_ENUMERATION_N: usize = 8;

/// Rejection attempts before `random_connected` falls back to a tree overlay.
pub const REJECTION_CAP: u32 = 100;

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("{family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
    #[error("projective_incidence: q = {0} is not prime")]
    NotPrime(usize),
    #[error("exhaustive enumeration supports n <= {MAX_ENUMERATION_N}, got {0}")]
    EnumerationTooLarge(usize),
    #[error("bad family spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GeneratorError {
    GeneratorError::InvalidParams {
        family,
        reason: reason.into(),
    }
}

/// Path 0 - 1 - ... - n-1.
pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n < 2 {
        return Err(invalid("path", format!("n must be >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cycle 0 - 1 - ... - n-1 - 0.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(invalid("cycle", format!("n must be >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Complete bipartite K_{a,b}; side one is `0..a`, side two `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GeneratorError> {
    if a < 1 || b < 1 {
        return Err(invalid(
            "complete_bipartite",
            format!("both sides must be >= 1, got a = {a}, b = {b}"),
        ));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(a + b, &edges)?)
}

/// Clique size used by [`lollipop`]: `max(2, round(c * n^(1/3)))`.
pub fn lollipop_clique_size(n: usize, c: f64) -> usize {
    ((c * (n as f64).cbrt()).round() as usize).max(2)
}

/// Clique on `0..k` for `k = max(2, round(c * n^(1/3)))`, with a path of the
/// remaining `n - k` vertices attached at clique vertex k-1; the far path
/// endpoint is n-1.
pub fn lollipop(n: usize, c: f64) -> Result<Graph, GeneratorError> {
    if !c.is_finite() || c <= 0.0 {
        return Err(invalid("lollipop", format!("c must be positive, got {c}")));
    }
    let k = lollipop_clique_size(n, c);
    if n < k + 1 {
        return Err(invalid(
            "lollipop",
            format!("n = {n} leaves no path vertices beyond the clique of {k}"),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    for i in k - 1..n - 1 {
        edges.push((i, i + 1));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Two rail paths of length n/4 over a complete-bipartite basement.
///
/// Labeling (`m = n/4`):
/// * rail A occupies the even ids `0, 2, ..., 2m-2` top to bottom, rail B the
///   odd ids `1, 3, ..., 2m-1`; level j is the pair `(2j, 2j+1)`, joined by a
///   rung, and consecutive levels of each rail are joined,
/// * basement side A is `2m..3m`, side B is `3m..4m`, completely joined,
/// * rail-A bottom (id 2m-2) is joined to every side-A vertex, rail-B bottom
///   (id 2m-1) to every side-B vertex.
///
/// Every basement vertex then has exactly one rail neighbor among its n/4 + 1,
/// so the drunk's escape time from the basement is geometric with mean
/// n/4 + 1. The rail tops (ids 0 and 1) are the cop-start corner; the
/// interleaved ids make the rung partner the lex-first choice whenever
/// crossing ties with descending.
pub fn ladder_basement(n: usize) -> Result<Graph, GeneratorError> {
    if n < 12 || !n.is_multiple_of(4) {
        return Err(invalid(
            "ladder_basement",
            format!("n must be a multiple of 4 with n >= 12, got {n}"),
        ));
    }
    let m = n / 4;
    let mut edges = Vec::new();
    for j in 0..m {
        edges.push((2 * j, 2 * j + 1)); // rung
        if j + 1 < m {
            edges.push((2 * j, 2 * j + 2)); // rail A
            edges.push((2 * j + 1, 2 * j + 3)); // rail B
        }
    }
    let (a_bottom, b_bottom) = (2 * m - 2, 2 * m - 1);
    for a in 2 * m..3 * m {
        edges.push((a_bottom, a));
        for b in 3 * m..4 * m {
            edges.push((a, b));
        }
    }
    for b in 3 * m..4 * m {
        edges.push((b_bottom, b));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Point-line incidence graph of the projective plane of prime order q.
///
/// Points are the 1-dimensional subspaces of (Z_q)^3, represented by their
/// vector with first nonzero coordinate 1 and numbered in lexicographic
/// order; lines use the same representatives as coefficient triples, offset
/// by N = q^2 + q + 1. Point p lies on line l iff their dot product is 0 mod
/// q. The result has 2N vertices and is (q+1)-regular with diameter 3 and
/// girth 6.
pub fn projective_incidence(q: usize) -> Result<Graph, GeneratorError> {
    if !is_prime(q) {
        return Err(GeneratorError::NotPrime(q));
    }
    let mut reps = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    reps.push([a, b, c]);
                }
            }
        }
    }
    let n_side = q * q + q + 1;
    debug_assert_eq!(reps.len(), n_side);
    let mut edges = Vec::new();
    for (p, pv) in reps.iter().enumerate() {
        for (l, lv) in reps.iter().enumerate() {
            let dot: usize = pv.iter().zip(lv).map(|(x, y)| x * y).sum();
            if dot.is_multiple_of(q) {
                edges.push((p, n_side + l));
            }
        }
    }
    Ok(Graph::from_edges(2 * n_side, &edges)?)
}

/// Stall-prone funnel: vertex 0 hangs off a hub that fans into a complete
/// bipartite core.
///
/// Labeling (`h = (n-2)/2`): vertex 0 is the pendant start, vertex 1 the hub,
/// layer two is `2..2+h`, layer three `2+h..n`. Edges: 0-1, 1 to all of layer
/// two, and layer two completely joined to layer three. A walk from 0 is back
/// at 0 after two steps with probability 2/n, and within distance 2 after
/// three steps with probability exactly 2/n + (1 - 2/n)(2/n).
pub fn funnel(n: usize) -> Result<Graph, GeneratorError> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(invalid(
            "funnel",
            format!("n must be even with n >= 6, got {n}"),
        ));
    }
    let h = (n - 2) / 2;
    let mut edges = vec![(0, 1)];
    for a in 2..2 + h {
        edges.push((1, a));
        for b in 2 + h..n {
            edges.push((a, b));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// How `random_connected` obtained connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivityPath {
    /// A plain Erdos-Renyi draw came out connected after this many attempts.
    Rejection { attempts: u32 },
    /// All [`REJECTION_CAP`] draws were disconnected; a uniform-attachment
    /// tree was overlaid on one final draw.
    TreeOverlay,
}

/// Erdos-Renyi G(n, p) conditioned on connectivity by rejection, with a
/// spanning-tree overlay fallback after [`REJECTION_CAP`] failures.
pub fn random_connected(
    n: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    random_connected_with_outcome(n, edge_prob, seed).map(|(g, _)| g)
}

/// As [`random_connected`], also reporting which path produced the graph.
pub fn random_connected_with_outcome(
    n: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<(Graph, ConnectivityPath), GeneratorError> {
    if n < 2 {
        return Err(invalid(
            "random_connected",
            format!("n must be >= 2, got {n}"),
        ));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(invalid(
            "random_connected",
            format!("edge_prob must lie in [0, 1], got {edge_prob}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(edge_prob) {
                    edges.push((u, v));
                }
            }
        }
        edges
    };
    for attempt in 1..=REJECTION_CAP {
        let edges = draw(&mut rng);
        match Graph::from_edges(n, &edges) {
            Ok(g) => return Ok((g, ConnectivityPath::Rejection { attempts: attempt })),
            Err(GraphError::Disconnected { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    // Overlay: one more draw united with a uniform-attachment tree.
    let mut present = std::collections::HashSet::new();
    present.extend(draw(&mut rng));
    for v in 1..n {
        let u = rng.random_range(0..v);
        present.insert((u, v));
    }
    let mut edges = Vec::with_capacity(present.len());
    for u in 0..n {
        for v in u + 1..n {
            if present.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Ok((Graph::from_edges(n, &edges)?, ConnectivityPath::TreeOverlay))
}

/// Uniform random attachment tree: vertex v >= 1 joins a uniform earlier
/// vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(invalid("random_tree", "n must be >= 1".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of labeled connected graphs
// ---------------------------------------------------------------------------

/// Vertex pairs in the fixed bit order used by the enumeration: pair k is the
/// k-th `(i, j)` with `i < j`, i-major.
pub(crate) fn enumeration_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Connectivity of the graph encoded by `mask` over `pairs`, via bitset
/// flood fill.
pub(crate) fn mask_is_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u16; MAX_ENUMERATION_N];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut seen: u16 = 1;
    loop {
        let mut next = seen;
        for (v, &row) in adj.iter().enumerate().take(n) {
            if seen >> v & 1 == 1 {
                next |= row;
            }
        }
        if next == seen {
            return seen.count_ones() as usize == n;
        }
        seen = next;
    }
}

pub(crate) fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("connected masks build valid graphs")
}

/// Streams every labeled simple connected graph on n vertices exactly once,
/// in increasing edge-subset-mask order. Practical ceiling n <= 8 (2^28
/// subsets).
pub fn all_connected_graphs(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, GeneratorError> {
    if n == 0 {
        return Err(invalid("all_connected_graphs", "n must be >= 1".to_string()));
    }
    if n > MAX_ENUMERATION_N {
        return Err(GeneratorError::EnumerationTooLarge(n));
    }
    let pairs = enumeration_pairs(n);
    let masks = 1u64 << pairs.len();
    Ok((0..masks).filter_map(move |mask| {
        if mask_is_connected(n, &pairs, mask) {
            Some(graph_from_mask(n, &pairs, mask))
        } else {
            None
        }
    }))
}

// ---------------------------------------------------------------------------
// Family specs
// ---------------------------------------------------------------------------

/// A parsed graph-family instance. The inline string form `family:arg,...`
/// (positional in signature order, or `key=value`) is accepted anywhere the
/// CLI accepts a graph path. Aliases: `ladder`, `projective`, and `heawood`
/// (= `projective_incidence:2`).
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Lollipop { n: usize, c: f64 },
    LadderBasement { n: usize },
    ProjectiveIncidence { q: usize },
    Funnel { n: usize },
    RandomConnected { n: usize, edge_prob: f64, seed: u64 },
    RandomTree { n: usize, seed: u64 },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Lollipop { .. } => "lollipop",
            FamilySpec::LadderBasement { .. } => "ladder_basement",
            FamilySpec::ProjectiveIncidence { .. } => "projective_incidence",
            FamilySpec::Funnel { .. } => "funnel",
            FamilySpec::RandomConnected { .. } => "random_connected",
            FamilySpec::RandomTree { .. } => "random_tree",
        }
    }

    pub fn build(&self) -> Result<Graph, GeneratorError> {
        match *self {
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
            FamilySpec::Lollipop { n, c } => lollipop(n, c),
            FamilySpec::LadderBasement { n } => ladder_basement(n),
            FamilySpec::ProjectiveIncidence { q } => projective_incidence(q),
            FamilySpec::Funnel { n } => funnel(n),
            FamilySpec::RandomConnected { n, edge_prob, seed } => {
                random_connected(n, edge_prob, seed)
            }
            FamilySpec::RandomTree { n, seed } => random_tree(n, seed),
        }
    }

    /// Documented default start pair (cop, drunk) for benches and examples.
    ///
    /// Paths and random families start the players at the labeled extremes;
    /// cycles start antipodal; complete bipartite starts same-side (the
    /// parity trap); lollipop puts the cop on the far path end and the drunk
    /// in the clique; the ladder puts the cop on a rail top and the drunk
    /// deep in the basement.
    pub fn default_starts(&self, g: &Graph) -> (usize, usize) {
        let n = g.n();
        match *self {
            FamilySpec::Cycle { .. } => (0, n / 2),
            FamilySpec::CompleteBipartite { a, .. } if a >= 2 => (0, 1),
            FamilySpec::Lollipop { .. } => (n - 1, 0),
            _ => (0, n - 1),
        }
    }

    /// Parses the inline form, e.g. `path:100`, `lollipop:64,1.0`,
    /// `complete_bipartite:a=10,b=10`, `random_connected:12,0.3,7`.
    pub fn parse(spec: &str) -> Result<Self, GeneratorError> {
        let bad = |reason: &str| GeneratorError::BadSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (name, rest) = match spec.split_once(':') {
            Some((name, rest)) => (name.trim(), rest.trim()),
            None => (spec.trim(), ""),
        };
        let args: Vec<&str> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',').map(str::trim).collect()
        };

        // Positional-or-named scan against the family's parameter names.
        let lookup = |params: &[&str], fallbacks: &[Option<f64>]| -> Result<Vec<f64>, GeneratorError> {
            let mut values: Vec<Option<f64>> = vec![None; params.len()];
            for (pos, arg) in args.iter().enumerate() {
                let (slot, text) = match arg.split_once('=') {
                    Some((key, text)) => {
                        let slot = params
                            .iter()
                            .position(|p| *p == key.trim())
                            .ok_or_else(|| bad(&format!("unknown parameter {:?}", key.trim())))?;
                        (slot, text.trim())
                    }
                    None => {
                        if pos >= params.len() {
                            return Err(bad("too many parameters"));
                        }
                        (pos, *arg)
                    }
                };
                if values[slot].is_some() {
                    return Err(bad(&format!("parameter {:?} given twice", params[slot])));
                }
                values[slot] = Some(
                    text.parse::<f64>()
                        .map_err(|_| bad(&format!("cannot parse {text:?} as a number")))?,
                );
            }
            values
                .into_iter()
                .zip(fallbacks)
                .enumerate()
                .map(|(i, (v, fb))| {
                    v.or(*fb)
                        .ok_or_else(|| bad(&format!("missing parameter {:?}", params[i])))
                })
                .collect()
        };
        let as_usize = |v: f64, what: &str| -> Result<usize, GeneratorError> {
            if v.fract() == 0.0 && (0.0..=u32::MAX as f64).contains(&v) {
                Ok(v as usize)
            } else {
                Err(bad(&format!("{what} must be a nonnegative integer, got {v}")))
            }
        };

        match name {
            "path" => {
                let v = lookup(&["n"], &[None])?;
                Ok(FamilySpec::Path { n: as_usize(v[0], "n")? })
            }
            "cycle" => {
                let v = lookup(&["n"], &[None])?;
                Ok(FamilySpec::Cycle { n: as_usize(v[0], "n")? })
            }
            "complete_bipartite" => {
                let v = lookup(&["a", "b"], &[None, None])?;
                Ok(FamilySpec::CompleteBipartite {
                    a: as_usize(v[0], "a")?,
                    b: as_usize(v[1], "b")?,
                })
            }
            "lollipop" => {
                let v = lookup(&["n", "c"], &[None, Some(1.0)])?;
                Ok(FamilySpec::Lollipop { n: as_usize(v[0], "n")?, c: v[1] })
            }
            "ladder_basement" | "ladder" => {
                let v = lookup(&["n"], &[None])?;
                Ok(FamilySpec::LadderBasement { n: as_usize(v[0], "n")? })
            }
            "projective_incidence" | "projective" => {
                let v = lookup(&["q"], &[None])?;
                Ok(FamilySpec::ProjectiveIncidence { q: as_usize(v[0], "q")? })
            }
            "heawood" => {
                if !args.is_empty() {
                    return Err(bad("heawood takes no parameters"));
                }
                Ok(FamilySpec::ProjectiveIncidence { q: 2 })
            }
            "funnel" => {
                let v = lookup(&["n"], &[None])?;
                Ok(FamilySpec::Funnel { n: as_usize(v[0], "n")? })
            }
            "random_connected" => {
                let v = lookup(&["n", "edge_prob", "seed"], &[None, None, Some(0.0)])?;
                Ok(FamilySpec::RandomConnected {
                    n: as_usize(v[0], "n")?,
                    edge_prob: v[1],
                    seed: as_usize(v[2], "seed")? as u64,
                })
            }
            "random_tree" => {
                let v = lookup(&["n", "seed"], &[None, Some(0.0)])?;
                Ok(FamilySpec::RandomTree {
                    n: as_usize(v[0], "n")?,
                    seed: as_usize(v[1], "seed")? as u64,
                })
            }
            other => Err(bad(&format!("unknown family {other:?}"))),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::Lollipop { n, c } => write!(f, "lollipop:{n},{c}"),
            FamilySpec::LadderBasement { n } => write!(f, "ladder_basement:{n}"),
            FamilySpec::ProjectiveIncidence { q } => write!(f, "projective_incidence:{q}"),
            FamilySpec::Funnel { n } => write!(f, "funnel:{n}"),
            FamilySpec::RandomConnected { n, edge_prob, seed } => {
                write!(f, "random_connected:{n},{edge_prob},{seed}")
            }
            FamilySpec::RandomTree { n, seed } => write!(f, "random_tree:{n},{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- fixed families ----

    #[test]
    fn path_cycle_bipartite_shapes() {
        let p = path(10).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.diameter()), (10, 9, 9));
        let c = cycle(8).unwrap();
        assert_eq!((c.n(), c.edge_count(), c.diameter()), (8, 8, 4));
        assert_eq!(c.regularity(), Some(2));
        let b = complete_bipartite(3, 3).unwrap();
        assert_eq!((b.n(), b.edge_count(), b.diameter()), (6, 9, 2));
        assert!(path(1).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn small_lollipop_degenerates_to_a_path() {
        // round(10^(1/3)) = 2, so the clique is a single edge: P_10 overall.
        let g = lollipop(10, 1.0).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.diameter(), 9);
    }

    #[test]
    fn lollipop_64_has_clique_4_and_diameter_61() {
        let g = lollipop(64, 1.0).unwrap();
        assert_eq!(lollipop_clique_size(64, 1.0), 4);
        // Clique edges C(4,2) = 6 plus 60 path edges.
        assert_eq!(g.edge_count(), 6 + 60);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.degree(3), 3 + 1); // attachment vertex carries the path
        assert_eq!(g.diameter(), 61); // far end to a non-attachment clique vertex
        assert_eq!(g.dist(63, 0), 61);
        assert_eq!(g.dist(63, 3), 60);
    }

    #[test]
    fn lollipop_1000_splits_10_and_990() {
        let g = lollipop(1000, 1.0).unwrap();
        assert_eq!(lollipop_clique_size(1000, 1.0), 10);
        assert_eq!(g.edge_count(), 45 + 990);
        assert_eq!(g.diameter(), 991);
        assert!(lollipop(2, 1.0).is_err()); // no room for a path vertex
    }

    // ---- ladder with basement ----

    #[test]
    fn ladder_16_labeling_and_degrees() {
        let g = ladder_basement(16).unwrap();
        let m = 4;
        assert_eq!(g.n(), 16);
        // Rail tops.
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.neighbors(1), &[0, 3]);
        // Interior rail vertices have degree 3, bottoms m + 2.
        for v in 0..2 * m - 2 {
            assert!(g.degree(v) <= 3, "rail vertex {v}");
        }
        assert_eq!(g.degree(2 * m - 2), m + 2);
        assert_eq!(g.degree(2 * m - 1), m + 2);
        // Basement degrees m + 1: the bipartite partner side plus one bottom.
        for v in 2 * m..4 * m {
            assert_eq!(g.degree(v), m + 1, "basement vertex {v}");
        }
        assert!(ladder_basement(10).is_err());
        assert!(ladder_basement(18).is_err());
    }

    #[test]
    fn ladder_basement_attaches_only_through_rail_bottoms() {
        let g = ladder_basement(24).unwrap();
        let m = 6;
        for (u, v) in g.edges() {
            let rail_u = u < 2 * m;
            let rail_v = v < 2 * m;
            if rail_u != rail_v {
                let rail_end = if rail_u { u } else { v };
                assert!(
                    rail_end == 2 * m - 2 || rail_end == 2 * m - 1,
                    "crossing edge ({u}, {v}) avoids the rail bottoms"
                );
            }
        }
        // Side A touches only the A bottom, side B only the B bottom.
        for a in 2 * m..3 * m {
            assert!(g.has_edge(2 * m - 2, a) && !g.has_edge(2 * m - 1, a));
        }
        for b in 3 * m..4 * m {
            assert!(g.has_edge(2 * m - 1, b) && !g.has_edge(2 * m - 2, b));
        }
    }

    #[test]
    fn ladder_basement_escape_takes_about_a_quarter_of_n() {
        // Drunk starting deep in the basement of the n = 40 ladder leaves
        // (reaches a rail vertex) after about n/4 moves. The walk is
        // geometric with mean m + 1 here; assert the empirical mean lands
        // within 25% of n/4.
        let n = 40;
        let g = ladder_basement(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let trials = 20_000;
        let mut total = 0u64;
        for _ in 0..trials {
            let mut at = n - 1;
            let mut steps = 0u64;
            while at >= n / 2 {
                at = g.neighbors(at)[rng.random_range(0..g.degree(at))];
                steps += 1;
            }
            total += steps;
        }
        let mean = total as f64 / trials as f64;
        let target = n as f64 / 4.0;
        assert!(
            (mean - target).abs() <= 0.25 * target,
            "escape mean {mean} strays from {target}"
        );
    }

    // ---- projective plane incidence ----

    #[test]
    fn heawood_graph_metrics() {
        let g = projective_incidence(2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (14, 21));
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.diameter(), 3);
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn order_three_plane_metrics() {
        let g = projective_incidence(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (26, 52));
        assert_eq!(g.regularity(), Some(4));
        assert_eq!(g.diameter(), 3);
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn two_points_span_exactly_one_line() {
        let g = projective_incidence(3).unwrap();
        let n_side = 13;
        for p in 0..n_side {
            for r in p + 1..n_side {
                let common = g
                    .neighbors(p)
                    .iter()
                    .filter(|l| g.neighbors(r).contains(l))
                    .count();
                assert_eq!(common, 1, "points {p} and {r}");
            }
        }
    }

    #[test]
    fn composite_orders_are_rejected() {
        for q in [0, 1, 4, 6, 9] {
            assert_eq!(projective_incidence(q).unwrap_err(), GeneratorError::NotPrime(q));
        }
        assert!(projective_incidence(5).is_ok());
    }

    // ---- funnel ----

    #[test]
    fn funnel_degrees_match_the_layer_structure() {
        let g = funnel(10).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 5); // vertex 0 plus the four layer-two vertices
        for a in 2..6 {
            assert_eq!(g.degree(a), 5); // hub plus four layer-three vertices
        }
        for b in 6..10 {
            assert_eq!(g.degree(b), 4);
        }
        assert!(funnel(5).is_err());
        assert!(funnel(4).is_err());
    }

    // ---- random families ----

    #[test]
    fn random_connected_is_deterministic_per_seed() {
        let a = random_connected(12, 0.3, 7).unwrap();
        let b = random_connected(12, 0.3, 7).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = random_connected(12, 0.3, 8).unwrap();
        assert!(
            a.edges().collect::<Vec<_>>() != c.edges().collect::<Vec<_>>(),
            "different seeds should give different draws"
        );
    }

    #[test]
    fn random_connected_overlay_kicks_in_at_zero_probability() {
        let (g, outcome) = random_connected_with_outcome(10, 0.0, 3).unwrap();
        assert_eq!(outcome, ConnectivityPath::TreeOverlay);
        assert_eq!(g.edge_count(), 9); // pure attachment tree
        let (_, outcome) = random_connected_with_outcome(10, 1.0, 3).unwrap();
        assert_eq!(outcome, ConnectivityPath::Rejection { attempts: 1 });
    }

    #[test]
    fn random_tree_is_a_tree() {
        for seed in 0..20 {
            let g = random_tree(9, seed).unwrap();
            assert_eq!(g.edge_count(), 8);
            assert_eq!(g.girth(), None);
        }
    }

    #[test]
    fn random_parameters_are_validated() {
        assert!(random_connected(1, 0.5, 0).is_err());
        assert!(random_connected(5, 1.5, 0).is_err());
        assert!(random_connected(5, f64::NAN, 0).is_err());
    }

    // ---- enumeration ----

    /// Independent connectivity filter (union-find) used to cross-check the
    /// streaming enumerator.
    fn union_find_count(n: usize) -> u64 {
        let pairs = enumeration_pairs(n);
        let mut count = 0;
        for mask in 0..1u64 << pairs.len() {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                if parent[x] != x {
                    let root = find(parent, parent[x]);
                    parent[x] = root;
                }
                parent[x]
            }
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
            let root = find(&mut parent, 0);
            if (0..n).all(|v| find(&mut parent, v) == root) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn connected_graph_counts_match_known_values_and_second_filter() {
        let expected = [(1, 1u64), (2, 1), (3, 4), (4, 38), (5, 728)];
        for (n, want) in expected {
            let streamed = all_connected_graphs(n).unwrap().count() as u64;
            assert_eq!(streamed, want, "n = {n}");
            assert_eq!(union_find_count(n), want, "union-find disagrees at n = {n}");
        }
    }

    #[test]
    fn enumerated_graphs_are_distinct_and_valid() {
        let all: Vec<_> = all_connected_graphs(4).unwrap().collect();
        let mut edge_sets: Vec<Vec<(usize, usize)>> =
            all.iter().map(|g| g.edges().collect()).collect();
        edge_sets.sort();
        edge_sets.dedup();
        assert_eq!(edge_sets.len(), 38);
        assert!(all_connected_graphs(9).is_err());
    }

    // ---- family specs ----

    #[test]
    fn spec_strings_parse_and_round_trip() {
        let cases = [
            ("path:100", FamilySpec::Path { n: 100 }),
            ("cycle:n=6", FamilySpec::Cycle { n: 6 }),
            (
                "complete_bipartite:10,10",
                FamilySpec::CompleteBipartite { a: 10, b: 10 },
            ),
            ("lollipop:64", FamilySpec::Lollipop { n: 64, c: 1.0 }),
            ("lollipop:64,c=2.5", FamilySpec::Lollipop { n: 64, c: 2.5 }),
            ("ladder:40", FamilySpec::LadderBasement { n: 40 }),
            ("projective:q=3", FamilySpec::ProjectiveIncidence { q: 3 }),
            ("heawood", FamilySpec::ProjectiveIncidence { q: 2 }),
            (
                "random_connected:12,0.3,7",
                FamilySpec::RandomConnected { n: 12, edge_prob: 0.3, seed: 7 },
            ),
            ("random_tree:9", FamilySpec::RandomTree { n: 9, seed: 0 }),
        ];
        for (text, want) in cases {
            let spec = FamilySpec::parse(text).unwrap();
            assert_eq!(spec, want, "{text}");
            // Canonical display reparses to the same spec.
            assert_eq!(FamilySpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn bad_specs_are_rejected() {
        for text in [
            "pathological:3",
            "path",
            "path:",
            "path:1,2",
            "path:x",
            "path:3.5",
            "lollipop:n=64,n=65",
            "complete_bipartite:3",
            "heawood:2",
        ] {
            assert!(
                matches!(FamilySpec::parse(text), Err(GeneratorError::BadSpec { .. })),
                "{text} should fail to parse"
            );
        }
    }

    #[test]
    fn specs_build_and_report_default_starts() {
        let spec = FamilySpec::parse("complete_bipartite:10,10").unwrap();
        let g = spec.build().unwrap();
        assert_eq!(spec.default_starts(&g), (0, 1));
        let spec = FamilySpec::parse("lollipop:64").unwrap();
        let g = spec.build().unwrap();
        assert_eq!(spec.default_starts(&g), (63, 0));
        let spec = FamilySpec::parse("ladder:16").unwrap();
        let g = spec.build().unwrap();
        assert_eq!(spec.default_starts(&g), (0, 15));
    }
}
