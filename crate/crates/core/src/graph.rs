//! Simple undirected graphs, the join operation and the core-satellite
//! generators.
//!
//! Every generator lays nodes out in block order: the core clique first
//! (labels `0..c`), then each satellite clique on consecutive labels, with
//! satellite classes in ascending clique size. Under this ordering the
//! adjacency matrix has the familiar core/satellite block form, so spectral
//! structure can be indexed directly.

use std::collections::VecDeque;

use crate::error::{invalid, Error, Result};

/// Upper bound on the node count accepted by the parameter types. Keeps every
/// closed-form count (up to fourth powers of `n`) inside 128-bit arithmetic.
pub const MAX_NODES: usize = 1 << 24;

/// Immutable simple undirected graph on nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored once with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` isolated nodes.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an arbitrary list of node pairs. Pairs may come in
    /// either orientation; self-loops, out-of-range labels and duplicates are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    // Callers guarantee: normalized (u < v), in range, sorted, unique.
    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut adj: Vec<Vec<usize>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        // edges are sorted by (u, v), so pushing v into adj[u] keeps it sorted;
        // adj[v] receives u in increasing order too because u is the major key
        for &(u, v) in &edges {
            adj[v].push(u);
        }
        for &(u, v) in &edges {
            adj[u].push(v);
        }
        for list in &mut adj {
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
        }
        Graph { n, edges, adj }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_node(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: u, n: self.n })
        }
    }
}

/// Parameters of a core-satellite graph: a core clique of `core_size` nodes
/// joined with `satellite_count` disjoint cliques of `satellite_size` nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoreSatelliteParams {
    core: usize,
    size: usize,
    count: usize,
}

impl CoreSatelliteParams {
    /// A single satellite (`satellite_count == 1`) is accepted; the result is
    /// the complete graph on `core_size + satellite_size` nodes, which is not a
    /// proper core-satellite graph. See [`CoreSatelliteParams::is_degenerate`].
    pub fn new(core_size: usize, satellite_size: usize, satellite_count: usize) -> Result<Self> {
        if core_size == 0 {
            return Err(invalid("core size must be at least 1"));
        }
        if satellite_size == 0 {
            return Err(invalid("satellite size must be at least 1"));
        }
        if satellite_count == 0 {
            return Err(invalid("satellite count must be at least 1"));
        }
        let n = satellite_size
            .checked_mul(satellite_count)
            .and_then(|x| x.checked_add(core_size))
            .filter(|&n| n <= MAX_NODES)
            .ok_or_else(|| invalid(format!("graph would exceed {MAX_NODES} nodes")))?;
        debug_assert!(n >= 2);
        Ok(CoreSatelliteParams {
            core: core_size,
            size: satellite_size,
            count: satellite_count,
        })
    }

    pub fn core_size(&self) -> usize {
        self.core
    }

    pub fn satellite_size(&self) -> usize {
        self.size
    }

    pub fn satellite_count(&self) -> usize {
        self.count
    }

    pub fn node_count(&self) -> usize {
        self.core + self.size * self.count
    }

    /// `η·C(c+s, 2) − (η−1)·C(c, 2)`: each satellite forms a clique with the
    /// core, and the core edges are shared by all of them.
    pub fn edge_count(&self) -> u128 {
        let (c, s, eta) = (self.core as u128, self.size as u128, self.count as u128);
        eta * binomial(c + s, 2) - (eta - 1) * binomial(c, 2)
    }

    /// True when there is only one satellite.
    pub fn is_degenerate(&self) -> bool {
        self.count < 2
    }
}

/// One class of equally sized satellite cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SatelliteClass {
    pub size: usize,
    pub count: usize,
}

/// Parameters of a generalized core-satellite graph. Always stored in
/// canonical form: classes sorted by ascending size with distinct sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedParams {
    core: usize,
    classes: Vec<SatelliteClass>,
}

impl GeneralizedParams {
    /// Accepts `(size, count)` pairs in any order. Pairs with the same size
    /// are merged by summing their counts, which yields the same graph.
    pub fn new<I>(core_size: usize, classes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if core_size == 0 {
            return Err(invalid("core size must be at least 1"));
        }
        let mut raw: Vec<SatelliteClass> = Vec::new();
        for (size, count) in classes {
            if size == 0 {
                return Err(invalid("satellite size must be at least 1"));
            }
            if count == 0 {
                return Err(invalid("satellite count must be at least 1"));
            }
            raw.push(SatelliteClass { size, count });
        }
        if raw.is_empty() {
            return Err(invalid("at least one satellite class is required"));
        }
        raw.sort_unstable();
        let mut merged: Vec<SatelliteClass> = Vec::with_capacity(raw.len());
        for class in raw {
            match merged.last_mut() {
                Some(last) if last.size == class.size => {
                    last.count = last
                        .count
                        .checked_add(class.count)
                        .ok_or_else(|| invalid("satellite count overflow"))?;
                }
                _ => merged.push(class),
            }
        }
        let mut n = core_size;
        for class in &merged {
            n = class
                .size
                .checked_mul(class.count)
                .and_then(|x| x.checked_add(n))
                .filter(|&n| n <= MAX_NODES)
                .ok_or_else(|| invalid(format!("graph would exceed {MAX_NODES} nodes")))?;
        }
        Ok(GeneralizedParams {
            core: core_size,
            classes: merged,
        })
    }

    pub fn core_size(&self) -> usize {
        self.core
    }

    /// Canonical classes, ascending by size.
    pub fn classes(&self) -> &[SatelliteClass] {
        &self.classes
    }

    /// Number of distinct satellite sizes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Total number of satellite cliques across all classes.
    pub fn satellite_count(&self) -> usize {
        self.classes.iter().map(|c| c.count).sum()
    }

    /// Total number of satellite nodes.
    pub fn satellite_nodes(&self) -> usize {
        self.classes.iter().map(|c| c.size * c.count).sum()
    }

    pub fn node_count(&self) -> usize {
        self.core + self.satellite_nodes()
    }

    pub fn edge_count(&self) -> u128 {
        let c = self.core as u128;
        binomial(c, 2)
            + self
                .classes
                .iter()
                .map(|cl| {
                    let (s, eta) = (cl.size as u128, cl.count as u128);
                    eta * (binomial(s, 2) + c * s)
                })
                .sum::<u128>()
    }

    pub fn max_satellite_size(&self) -> usize {
        self.classes.last().map_or(0, |c| c.size)
    }

    /// True when there is only one satellite clique in total.
    pub fn is_degenerate(&self) -> bool {
        self.satellite_count() < 2
    }

    /// The single-class equivalent, when there is exactly one class.
    pub fn as_core_satellite(&self) -> Option<CoreSatelliteParams> {
        match self.classes.as_slice() {
            [only] => Some(CoreSatelliteParams {
                core: self.core,
                size: only.size,
                count: only.count,
            }),
            _ => None,
        }
    }
}

impl From<CoreSatelliteParams> for GeneralizedParams {
    fn from(p: CoreSatelliteParams) -> Self {
        GeneralizedParams {
            core: p.core,
            classes: vec![SatelliteClass {
                size: p.size,
                count: p.count,
            }],
        }
    }
}

pub(crate) fn binomial(n: u128, k: u32) -> u128 {
    match k {
        2 => {
            if n < 2 {
                0
            } else {
                n * (n - 1) / 2
            }
        }
        3 => {
            if n < 3 {
                0
            } else {
                n * (n - 1) * (n - 2) / 6
            }
        }
        _ => {
            let k = k as u128;
            if k > n {
                return 0;
            }
            (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
        }
    }
}

/// The complete graph `K_p`.
pub fn complete_graph(p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(invalid("complete graph needs at least one node"));
    }
    let mut edges = Vec::with_capacity(p * (p - 1) / 2);
    push_clique(&mut edges, 0, p);
    Ok(Graph::from_sorted(p, edges))
}

fn push_clique(edges: &mut Vec<(usize, usize)>, start: usize, size: usize) {
    for u in start..start + size {
        for v in u + 1..start + size {
            edges.push((u, v));
        }
    }
}

/// Join of two graphs: disjoint union plus every edge between the two node
/// sets. Labels of `g2` are shifted by `g1.node_count()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n, g2.n);
    let mut edges = Vec::with_capacity(g1.edges.len() + g2.edges.len() + n1 * n2);
    // lexicographic order: all pairs starting at u < n1 first
    for u in 0..n1 {
        edges.extend(g1.adj[u].iter().filter(|&&v| v > u).map(|&v| (u, v)));
        edges.extend((n1..n1 + n2).map(|v| (u, v)));
    }
    edges.extend(g2.edges.iter().map(|&(u, v)| (u + n1, v + n1)));
    Graph::from_sorted(n1 + n2, edges)
}

/// Disjoint union of graphs, laid out in the given order.
pub fn disjoint_union<'a, I>(graphs: I) -> Graph
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut n = 0;
    let mut edges = Vec::new();
    for g in graphs {
        edges.extend(g.edges.iter().map(|&(u, v)| (u + n, v + n)));
        n += g.n;
    }
    Graph::from_sorted(n, edges)
}

/// `Θ(c, s, η)`: core clique joined with `η` disjoint satellite cliques.
pub fn core_satellite(params: &CoreSatelliteParams) -> Graph {
    generalized_core_satellite(&GeneralizedParams::from(*params))
}

/// `Θ(c, s, η)` for several satellite sizes.
pub fn generalized_core_satellite(params: &GeneralizedParams) -> Graph {
    let c = params.core;
    let n = params.node_count();
    let m = params.edge_count() as usize;
    let mut edges = Vec::with_capacity(m);
    // core rows: core-core then core-satellite, already lexicographic
    for u in 0..c {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    let mut start = c;
    for class in &params.classes {
        for _ in 0..class.count {
            push_clique(&mut edges, start, class.size);
            start += class.size;
        }
    }
    debug_assert_eq!(edges.len(), m);
    Graph::from_sorted(n, edges)
}

/// Windmill `W(η, s) = K₁ ∇ (η K_s)`.
pub fn windmill(satellite_count: usize, satellite_size: usize) -> Result<Graph> {
    Ok(core_satellite(&CoreSatelliteParams::new(
        1,
        satellite_size,
        satellite_count,
    )?))
}

/// Friendship graph: `η` triangles sharing one hub.
pub fn friendship(satellite_count: usize) -> Result<Graph> {
    windmill(satellite_count, 2)
}

/// Complete split graph `K_a ∇ K̄_b`.
pub fn complete_split(a: usize, b: usize) -> Result<Graph> {
    Ok(core_satellite(&CoreSatelliteParams::new(a, 1, b)?))
}

/// Agave graph `K₂ ∇ K̄_b`.
pub fn agave(b: usize) -> Result<Graph> {
    complete_split(2, b)
}

/// Star with one hub and `b` leaves.
pub fn star(b: usize) -> Result<Graph> {
    complete_split(1, b)
}

/// Simple path on `n` nodes, `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_sorted(n, edges)
}

fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or_default();
        for &v in &g.adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Breadth-first reachability from node 0. The null graph counts as
/// connected.
pub fn is_connected(g: &Graph) -> bool {
    g.n == 0 || bfs_distances(g, 0).iter().all(Option::is_some)
}

/// Longest shortest-path distance, by BFS from every node. `None` for
/// disconnected graphs.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for u in 0..g.n {
        for d in bfs_distances(g, u) {
            best = best.max(d?);
        }
    }
    Some(best)
}
