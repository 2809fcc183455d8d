//! Undirected multigraph representation and GF(2) cycle-space linear algebra.
//!
//! Edges carry stable dense identifiers `0..m`. Parallel edges and self-loops
//! are allowed (a self-loop contributes twice to the degree of its endpoint);
//! cycles are therefore always represented as sets of edge ids, never as
//! vertex sequences.

use std::collections::VecDeque;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
/// Edge weights are exact positive integers; weight sums stay well inside
/// `u64` at supported scales (m <= 10^6, weights <= 2^32).
pub type Weight = u64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} endpoint {vertex} out of range (n = {n})")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("edge {edge} has nonpositive weight")]
    NonpositiveWeight { edge: usize },
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("root edge {0} is a self-loop")]
    RootIsSelfLoop(EdgeId),
}

/// Immutable undirected multigraph.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(EdgeId, VertexId)>>,
}

impl Graph {
    /// Builds a graph from an edge list; edge ids are assigned in input order.
    pub fn build(n: usize, edge_list: &[(VertexId, VertexId, Weight)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v, w)) in edge_list.iter().enumerate() {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { edge: id, vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { edge: id, vertex: v, n });
            }
            if w == 0 {
                return Err(GraphError::NonpositiveWeight { edge: id });
            }
            adj[u].push((id, v));
            adj[v].push((id, u));
            edges.push(Edge { u, v, weight: w });
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.edges[e].u, self.edges[e].v)
    }

    pub fn weight(&self, e: EdgeId) -> Weight {
        self.edges[e].weight
    }

    pub fn is_self_loop(&self, e: EdgeId) -> bool {
        self.edges[e].u == self.edges[e].v
    }

    /// Incident `(edge id, other endpoint)` pairs; a self-loop appears twice.
    pub fn adjacency(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Given one endpoint of `e`, returns the other endpoint.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let Edge { u, v: w, .. } = self.edges[e];
        if v == u {
            w
        } else {
            debug_assert_eq!(v, w);
            u
        }
    }

    /// Connected-component label per vertex, labels dense from 0.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &(_, w) in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }
}

/// A graph with a designated root edge.
#[derive(Debug, Clone)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root_edge: EdgeId,
}

impl RootedGraph {
    pub fn new(graph: Graph, root_edge: EdgeId) -> Result<Self, GraphError> {
        if root_edge >= graph.edge_count() {
            return Err(GraphError::EdgeOutOfRange(root_edge));
        }
        if graph.is_self_loop(root_edge) {
            return Err(GraphError::RootIsSelfLoop(root_edge));
        }
        Ok(RootedGraph { graph, root_edge })
    }

    /// Root endpoints `(t1, t2)`.
    pub fn root_endpoints(&self) -> (VertexId, VertexId) {
        self.graph.endpoints(self.root_edge)
    }
}

/// A cycle: the edge set of a connected 2-regular subgraph, with cached weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    edges: Vec<EdgeId>,
    weight: Weight,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("empty edge set is not a cycle")]
    Empty,
    #[error("vertex {0} does not have degree 2 in the edge set")]
    NotTwoRegular(VertexId),
    #[error("edge set is not connected")]
    Disconnected,
}

impl Cycle {
    /// Validates that `edges` induces a connected 2-regular subgraph of `g`.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self, CycleError> {
        let mut ids: Vec<EdgeId> = edges.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.is_empty() {
            return Err(CycleError::Empty);
        }
        for &e in &ids {
            if e >= g.edge_count() {
                return Err(CycleError::EdgeOutOfRange(e));
            }
        }
        // Degree check: every touched vertex must have degree exactly 2
        // (self-loops count twice).
        let mut deg = std::collections::HashMap::new();
        for &e in &ids {
            let (u, v) = g.endpoints(e);
            *deg.entry(u).or_insert(0usize) += 1;
            *deg.entry(v).or_insert(0usize) += 1;
        }
        for (&v, &d) in &deg {
            if d != 2 {
                return Err(CycleError::NotTwoRegular(v));
            }
        }
        // Connectivity over the member edges.
        let in_cycle: std::collections::HashSet<EdgeId> = ids.iter().copied().collect();
        let start = g.endpoints(ids[0]).0;
        let mut seen = std::collections::HashSet::new();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(e, w) in g.adjacency(v) {
                if in_cycle.contains(&e) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if deg.keys().any(|v| !seen.contains(v)) {
            return Err(CycleError::Disconnected);
        }
        let weight = ids.iter().map(|&e| g.weight(e)).sum();
        Ok(Cycle { edges: ids, weight })
    }

    /// Constructs without validation; `edges` must be sorted, deduplicated,
    /// and form a connected 2-regular subgraph with the given total weight.
    pub(crate) fn from_parts_unchecked(edges: Vec<EdgeId>, weight: Weight) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Cycle { edges, weight }
    }

    /// Member edge ids, sorted ascending.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// An ordered list of cycles with an optional per-cycle "new edge" witness:
/// an edge not present in any earlier cycle. When every witness is present
/// the basis is weakly fundamental.
#[derive(Debug, Clone)]
pub struct CycleBasis {
    pub cycles: Vec<Cycle>,
    pub witness_edges: Vec<Option<EdgeId>>,
}

impl CycleBasis {
    pub fn total_weight(&self) -> Weight {
        self.cycles.iter().map(|c| c.weight()).sum()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Dense GF(2) vector over edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; (len + 63) / 64] }
    }

    pub fn from_ids(len: usize, ids: &[EdgeId]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ids {
            v.set(i);
        }
        v
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }


    pub fn lowest_set(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Incremental GF(2) eliminator over a fixed universe of edge ids.
#[derive(Debug)]
pub(crate) struct Gf2Basis {
    universe: usize,
    /// pivot position -> reduced row
    rows: Vec<(usize, BitVec)>,
}

impl Gf2Basis {
    pub fn new(universe: usize) -> Self {
        Gf2Basis { universe, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts the vector if independent of the current span; returns whether
    /// the rank increased.
    pub fn insert(&mut self, ids: &[EdgeId]) -> bool {
        let mut v = BitVec::from_ids(self.universe, ids);
        for (pivot, row) in &self.rows {
            if v.words[pivot / 64] >> (pivot % 64) & 1 == 1 {
                let _ = row;
                v.xor_assign(row);
            }
        }
        match v.lowest_set() {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Rank over GF(2) of a list of edge-id sets, via Gaussian elimination on
/// machine-word bitsets.
pub fn gf2_rank<I, S>(edge_sets: I, universe: usize) -> usize
where
    I: IntoIterator<Item = S>,
    S: AsRef<[EdgeId]>,
{
    let mut basis = Gf2Basis::new(universe.max(1));
    for set in edge_sets {
        basis.insert(set.as_ref());
    }
    basis.rank()
}

/// Dimension of the cycle space: m - n + (number of connected components).
pub fn cycle_space_dimension(g: &Graph) -> usize {
    let (comps, _) = g.components();
    g.edge_count() + comps - g.vertex_count()
}

/// One reason a candidate rooted cycle basis fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisViolation {
    InvalidCycle { index: usize, reason: String },
    MissingRootEdge { index: usize },
    WrongCount { expected: usize, got: usize },
    RankDeficient { rank: usize, count: usize },
    BadWitness { index: usize, witness: EdgeId },
}

impl std::fmt::Display for BasisViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisViolation::InvalidCycle { index, reason } => {
                write!(f, "cycle {index} is not a valid cycle: {reason}")
            }
            BasisViolation::MissingRootEdge { index } => {
                write!(f, "cycle {index} does not contain the root edge")
            }
            BasisViolation::WrongCount { expected, got } => {
                write!(f, "basis has {got} cycles but the cycle space dimension is {expected}")
            }
            BasisViolation::RankDeficient { rank, count } => {
                write!(f, "cycles have GF(2) rank {rank} < count {count}")
            }
            BasisViolation::BadWitness { index, witness } => {
                write!(f, "witness edge {witness} of cycle {index} occurs in an earlier cycle")
            }
        }
    }
}

/// All failures found while validating a rooted cycle basis.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<BasisViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `basis` is a rooted cycle basis of `rg`: each element is a
/// valid cycle containing the root edge, the count matches the cycle-space
/// dimension of the 2-core component containing the root, and the cycles are
/// GF(2)-independent. Collects every failure instead of stopping early.
pub fn validate_rooted_basis(rg: &RootedGraph, basis: &CycleBasis) -> ValidationReport {
    let g = &rg.graph;
    let mut report = ValidationReport::default();
    for (i, c) in basis.cycles.iter().enumerate() {
        match Cycle::new(g, c.edge_ids().iter().copied()) {
            Ok(rebuilt) => {
                if rebuilt.weight() != c.weight() {
                    report.violations.push(BasisViolation::InvalidCycle {
                        index: i,
                        reason: format!(
                            "cached weight {} != recomputed {}",
                            c.weight(),
                            rebuilt.weight()
                        ),
                    });
                }
            }
            Err(e) => {
                report.violations.push(BasisViolation::InvalidCycle { index: i, reason: e.to_string() });
            }
        }
        if !c.contains(rg.root_edge) {
            report.violations.push(BasisViolation::MissingRootEdge { index: i });
        }
    }
    // Expected count: cycle space dimension of the 2-core component holding
    // the root edge.
    let core = crate::connectivity::two_core(g);
    let expected = match core.core_edge[rg.root_edge] {
        Some(root_in_core) => {
            let (_, comp) = core.graph.components();
            let root_comp = comp[core.graph.endpoints(root_in_core).0];
            let nc = comp.iter().filter(|&&c| c == root_comp).count();
            let mc = (0..core.graph.edge_count())
                .filter(|&e| comp[core.graph.endpoints(e).0] == root_comp)
                .count();
            mc + 1 - nc
        }
        None => 0,
    };
    if basis.cycles.len() != expected {
        report
            .violations
            .push(BasisViolation::WrongCount { expected, got: basis.cycles.len() });
    }
    let rank = gf2_rank(basis.cycles.iter().map(|c| c.edge_ids()), g.edge_count());
    if rank != basis.cycles.len() {
        report
            .violations
            .push(BasisViolation::RankDeficient { rank, count: basis.cycles.len() });
    }
    // Witnesses, when present, must certify weak fundamentality.
    let mut seen = vec![false; g.edge_count()];
    for (i, c) in basis.cycles.iter().enumerate() {
        if let Some(Some(w)) = basis.witness_edges.get(i) {
            if *w >= g.edge_count() || seen[*w] || !c.contains(*w) {
                report.violations.push(BasisViolation::BadWitness { index: i, witness: *w });
            }
        }
        for &e in c.edge_ids() {
            if e < seen.len() {
                seen[e] = true;
            }
        }
    }
    report
}
