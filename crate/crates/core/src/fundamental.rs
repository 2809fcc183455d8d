//! Fundamental rooted cycle bases: checking a spanning tree, exact search
//! for one via the two-induced-trees partition characterization, planar
//! duality through rotation systems, rooted Hamiltonian cycle search, and a
//! degree-3 gadget that forces an edge into Hamiltonian cycles.
//!
//! Deciding whether a fundamental rooted basis exists is NP-complete, so the
//! searches here are exact branch-and-prune procedures with explicit node
//! budgets; exceeding a budget is reported distinctly from a definite "no".

use thiserror::Error;

use crate::graph::{EdgeId, Graph, RootedGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FundamentalError {
    #[error("the edge set is not a spanning tree ({0})")]
    NotASpanningTree(String),
    #[error("the spanning tree does not contain the root edge")]
    RootNotInTree,
    #[error("search node budget exhausted before an exact answer was found")]
    SearchLimitExceeded,
    #[error("vertex {0} has degree {1}, not 3")]
    WrongDegree(VertexId, usize),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
}

/// Node budgets for the exact exponential searches.
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: 5_000_000 }
    }
}

// ---------------------------------------------------------------------------
// Checking a given tree
// ---------------------------------------------------------------------------

/// Is the given spanning tree's fundamental basis rooted? Removing the root
/// edge splits the tree into two vertex sides; a non-tree edge's
/// fundamental cycle contains the root edge exactly when its endpoints lie
/// on opposite sides. Returns the first same-side non-tree edge as a
/// witness, or None when every fundamental cycle is rooted.
pub fn is_fundamental_rooted(
    rg: &RootedGraph,
    tree: &[EdgeId],
) -> Result<Option<EdgeId>, FundamentalError> {
    let g = &rg.graph;
    let n = g.vertex_count();
    if tree.len() + 1 != n {
        return Err(FundamentalError::NotASpanningTree(format!(
            "{} edges for {} vertices",
            tree.len(),
            n
        )));
    }
    let mut in_tree = vec![false; g.edge_count()];
    let mut dsu = Dsu::new(n);
    for &e in tree {
        if e >= g.edge_count() {
            return Err(FundamentalError::NotASpanningTree(format!("edge {e} out of range")));
        }
        if in_tree[e] {
            return Err(FundamentalError::NotASpanningTree(format!("edge {e} repeated")));
        }
        in_tree[e] = true;
        let (u, v) = g.endpoints(e);
        if !dsu.union(u, v) {
            return Err(FundamentalError::NotASpanningTree(format!("edge {e} closes a cycle")));
        }
    }
    if !in_tree[rg.root_edge] {
        return Err(FundamentalError::RootNotInTree);
    }
    // Two-color by BFS over tree edges other than the root edge.
    let (t1, _) = rg.root_endpoints();
    let mut side = vec![false; n];
    let mut seen = vec![false; n];
    let mut stack = vec![t1];
    seen[t1] = true;
    side[t1] = true;
    while let Some(v) = stack.pop() {
        for &(e, w) in g.adjacency(v) {
            if in_tree[e] && e != rg.root_edge && !seen[w] {
                seen[w] = true;
                side[w] = true;
                stack.push(w);
            }
        }
    }
    for f in 0..g.edge_count() {
        if in_tree[f] {
            continue;
        }
        let (u, v) = g.endpoints(f);
        if side[u] == side[v] {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Partition search
// ---------------------------------------------------------------------------

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// false if x and y were already connected.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}

/// Exact search for a spanning tree whose fundamental basis is rooted.
///
/// By the partition characterization, such a tree exists exactly when the
/// vertices split into S1 ∋ t1 and S2 ∋ t2 with both induced subgraphs
/// connected and acyclic; the tree is then the two induced trees plus the
/// root edge. The search branches on vertex colors in descending-degree
/// order, pruning whenever a color assignment closes a monochromatic cycle.
///
/// `Ok(None)` is a definite "no fundamental rooted basis";
/// `Err(SearchLimitExceeded)` means the budget ran out first.
pub fn find_fundamental_rooted_tree(
    rg: &RootedGraph,
    limits: SearchLimits,
) -> Result<Option<Vec<EdgeId>>, FundamentalError> {
    let g = &rg.graph;
    let n = g.vertex_count();
    if n == 0 || g.components().0 != 1 {
        return Ok(None); // no spanning tree at all
    }
    let (t1, t2) = rg.root_endpoints();
    // Branch order: fixed endpoints first, then by descending degree.
    let mut order: Vec<VertexId> = (0..n).filter(|&v| v != t1 && v != t2).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut full_order = vec![t1, t2];
    full_order.extend(order);

    struct Search<'a> {
        g: &'a Graph,
        order: Vec<VertexId>,
        color: Vec<u8>, // 0 unassigned, 1, 2
        nodes: u64,
        max_nodes: u64,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> Result<bool, FundamentalError> {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(FundamentalError::SearchLimitExceeded);
            }
            if depth == self.order.len() {
                return Ok(self.sides_connected());
            }
            let v = self.order[depth];
            for c in [1u8, 2u8] {
                self.color[v] = c;
                if self.extend_ok(v) && self.run(depth + 1)? {
                    return Ok(true);
                }
            }
            self.color[v] = 0;
            Ok(false)
        }

        /// Incremental acyclicity: adding v with its color must not connect
        /// two already-linked same-color vertices. A full union-find over
        /// the monochromatic subgraph of assigned vertices is rebuilt; at
        /// desk scale this O(n·α) per node is fine.
        fn extend_ok(&self, _v: VertexId) -> bool {
            let mut dsu = Dsu::new(self.g.vertex_count());
            for e in 0..self.g.edge_count() {
                let (a, b) = self.g.endpoints(e);
                if self.color[a] != 0 && self.color[a] == self.color[b] {
                    if a == b || !dsu.union(a, b) {
                        return false;
                    }
                }
            }
            true
        }

        fn sides_connected(&self) -> bool {
            for c in [1u8, 2u8] {
                let members: Vec<VertexId> =
                    (0..self.g.vertex_count()).filter(|&v| self.color[v] == c).collect();
                if members.is_empty() {
                    return false;
                }
                let mut seen = vec![false; self.g.vertex_count()];
                let mut stack = vec![members[0]];
                seen[members[0]] = true;
                let mut count = 1;
                while let Some(v) = stack.pop() {
                    for &(_, w) in self.g.adjacency(v) {
                        if self.color[w] == c && !seen[w] {
                            seen[w] = true;
                            count += 1;
                            stack.push(w);
                        }
                    }
                }
                if count != members.len() {
                    return false;
                }
            }
            true
        }
    }

    let mut color = vec![0u8; n];
    color[t1] = 1;
    color[t2] = 2;
    let mut search = Search {
        g,
        order: full_order[2..].to_vec(),
        color,
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    // Root endpoints are pre-colored; make sure they alone are consistent
    // (parallel root edges are fine, a self-loop root cannot exist).
    let found = if search.extend_ok(t1) { search.run(0)? } else { false };
    if !found {
        return Ok(None);
    }
    // Assemble the tree: all monochromatic edges plus the root edge.
    let color = search.color;
    let mut tree: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            a != b && color[a] == color[b]
        })
        .collect();
    tree.push(rg.root_edge);
    debug_assert_eq!(is_fundamental_rooted(rg, &tree), Ok(None));
    Ok(Some(tree))
}

// ---------------------------------------------------------------------------
// Rooted Hamiltonian cycles
// ---------------------------------------------------------------------------

/// Does some Hamiltonian cycle use the root edge? Exact backtracking from
/// one root endpoint to the other over all non-root edges, pruning branches
/// whose unvisited region is disconnected or has a trapped vertex.
pub fn has_rooted_hamiltonian(
    rg: &RootedGraph,
    limits: SearchLimits,
) -> Result<bool, FundamentalError> {
    let g = &rg.graph;
    let n = g.vertex_count();
    if n < 3 {
        // A Hamiltonian cycle needs 3+ vertices, except the digon case:
        // two vertices joined by the root edge and a parallel edge.
        if n == 2 {
            let (t1, t2) = rg.root_endpoints();
            let has_parallel = (0..g.edge_count()).any(|e| {
                e != rg.root_edge && {
                    let (a, b) = g.endpoints(e);
                    (a, b) == (t1, t2) || (a, b) == (t2, t1)
                }
            });
            return Ok(has_parallel);
        }
        return Ok(false);
    }
    let (t1, t2) = rg.root_endpoints();

    struct Search<'a> {
        g: &'a Graph,
        root: EdgeId,
        t2: VertexId,
        visited: Vec<bool>,
        remaining: usize,
        nodes: u64,
        max_nodes: u64,
    }

    impl Search<'_> {
        fn prune(&self, cur: VertexId) -> bool {
            // Unvisited region plus {cur, t2} must be connected, and every
            // unvisited vertex needs >= 2 usable connections.
            let n = self.g.vertex_count();
            let usable = |v: VertexId| !self.visited[v] || v == cur || v == self.t2;
            let mut seen = vec![false; n];
            let mut stack = vec![cur];
            seen[cur] = true;
            while let Some(v) = stack.pop() {
                for &(e, w) in self.g.adjacency(v) {
                    if e == self.root || (self.visited[v] && v != cur && v != self.t2) {
                        continue;
                    }
                    if usable(w) && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            for v in 0..n {
                if !self.visited[v] {
                    if !seen[v] {
                        return true;
                    }
                    let conn = self
                        .g
                        .adjacency(v)
                        .iter()
                        .filter(|&&(e, w)| e != self.root && w != v && usable(w))
                        .count();
                    if conn < 2 {
                        return true;
                    }
                }
            }
            false
        }

        fn run(&mut self, cur: VertexId) -> Result<bool, FundamentalError> {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(FundamentalError::SearchLimitExceeded);
            }
            if self.remaining == 0 {
                // All vertices on the path; close via any cur–t2 edge.
                return Ok(self.g.adjacency(cur).iter().any(|&(e, w)| {
                    e != self.root && w == self.t2 && w != cur
                }));
            }
            if self.prune(cur) {
                return Ok(false);
            }
            for i in 0..self.g.degree(cur) {
                let (e, w) = self.g.adjacency(cur)[i];
                if e == self.root || w == cur || self.visited[w] || w == self.t2 {
                    continue;
                }
                self.visited[w] = true;
                self.remaining -= 1;
                let found = self.run(w)?;
                self.visited[w] = false;
                self.remaining += 1;
                if found {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }

    let mut visited = vec![false; n];
    visited[t1] = true;
    visited[t2] = true;
    let mut search = Search {
        g,
        root: rg.root_edge,
        t2,
        visited,
        remaining: n - 2,
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    search.run(t1)
}

// ---------------------------------------------------------------------------
// Forced-edge gadget
// ---------------------------------------------------------------------------

/// Replaces a degree-3 vertex by a four-vertex complete subgraph so that the
/// modified graph has a Hamiltonian cycle through the designated edge
/// exactly when the original graph has any Hamiltonian cycle.
///
/// The three former neighbors attach to three distinct gadget vertices
/// g1..g3; g4 is internal and the designated edge is g3–g4. Every attachment
/// pair is joined by a Hamiltonian path of the gadget through g3–g4, and a
/// Hamiltonian cycle of the modified graph must cross the gadget as one such
/// path, which restores a Hamiltonian cycle of the original.
pub fn forced_edge_gadget(g: &Graph, v: VertexId) -> Result<(Graph, EdgeId), FundamentalError> {
    let deg = g.degree(v);
    if deg != 3 || g.adjacency(v).iter().any(|&(_, w)| w == v) {
        return Err(FundamentalError::WrongDegree(v, deg));
    }
    let n = g.vertex_count();
    // v becomes g1; g2, g3, g4 are fresh.
    let (g1, g2, g3, g4) = (v, n, n + 1, n + 2);
    let mut edges: Vec<(VertexId, VertexId, u64)> = Vec::new();
    let mut neighbor_slot = 0;
    let gadget_attach = [g1, g2, g3];
    for e in 0..g.edge_count() {
        let (a, b) = g.endpoints(e);
        let w = g.weight(e);
        if a != v && b != v {
            edges.push((a, b, w));
        } else {
            let other = if a == v { b } else { a };
            edges.push((gadget_attach[neighbor_slot], other, w));
            neighbor_slot += 1;
        }
    }
    debug_assert_eq!(neighbor_slot, 3);
    for (x, y) in [(g1, g2), (g1, g3), (g1, g4), (g2, g3), (g2, g4), (g3, g4)] {
        edges.push((x, y, 1));
    }
    let forced = edges.len() - 1; // (g3, g4) pushed last
    let out = Graph::build(n + 3, &edges).expect("gadget expansion is a valid graph");
    Ok((out, forced))
}

// ---------------------------------------------------------------------------
// Plane embeddings and duals
// ---------------------------------------------------------------------------

/// A combinatorial embedding: the clockwise cyclic order of edge-ends
/// around every vertex. A self-loop lists its edge id twice at its vertex.
#[derive(Debug, Clone)]
pub struct PlaneEmbedding {
    pub graph: Graph,
    /// Per vertex, the cyclic order of incident edge ids.
    pub rotations: Vec<Vec<EdgeId>>,
    /// Face id of each dart; dart 2e is the edge traversed u→v, 2e+1 is v→u.
    face_of_dart: Vec<usize>,
    face_count: usize,
    /// Darts of each face in traversal order.
    faces: Vec<Vec<usize>>,
}

impl PlaneEmbedding {
    /// Validates the rotation system (each list is exactly the incident
    /// edge-end multiset) and traces the faces, enforcing Euler's formula
    /// for connected plane multigraphs.
    pub fn new(graph: Graph, rotations: Vec<Vec<EdgeId>>) -> Result<Self, FundamentalError> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        if rotations.len() != n {
            return Err(FundamentalError::InvalidEmbedding(
                "one rotation list per vertex required".into(),
            ));
        }
        if n == 0 || graph.components().0 != 1 {
            return Err(FundamentalError::InvalidEmbedding("graph must be connected".into()));
        }
        // Assign each rotation slot a dart. Dart 2e points u→v (it is the
        // end of e at u); dart 2e+1 is the end at v. For a self-loop the
        // first listed occurrence is dart 2e, the second 2e+1.
        let mut slot_dart: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut used = vec![0u8; m];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.len() != graph.degree(v) {
                return Err(FundamentalError::InvalidEmbedding(format!(
                    "vertex {v} rotation lists {} ends, degree is {}",
                    rot.len(),
                    graph.degree(v)
                )));
            }
            let mut darts = Vec::with_capacity(rot.len());
            for &e in rot {
                if e >= m {
                    return Err(FundamentalError::InvalidEmbedding(format!(
                        "edge {e} out of range"
                    )));
                }
                let (a, b) = graph.endpoints(e);
                let dart = if a == b {
                    if a != v {
                        return Err(FundamentalError::InvalidEmbedding(format!(
                            "self-loop {e} listed at the wrong vertex"
                        )));
                    }
                    2 * e + usize::from(used[e] > 0)
                } else if v == a {
                    2 * e
                } else if v == b {
                    2 * e + 1
                } else {
                    return Err(FundamentalError::InvalidEmbedding(format!(
                        "edge {e} listed at non-endpoint {v}"
                    )));
                };
                used[e] += 1;
                darts.push(dart);
            }
            slot_dart.push(darts);
        }
        if used.iter().any(|&c| c != 2) {
            return Err(FundamentalError::InvalidEmbedding(
                "every edge must appear exactly twice across rotations".into(),
            ));
        }
        // Position of each dart within its vertex rotation.
        let mut pos_of_dart = vec![(0usize, 0usize); 2 * m]; // (vertex, index)
        for (v, darts) in slot_dart.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                pos_of_dart[d] = (v, i);
            }
        }
        // Face tracing: from dart d (x→y), the next dart of the same face is
        // the rotation successor, at y, of d's reversal.
        let next_in_face = |d: usize| -> usize {
            let rev = d ^ 1;
            let (y, i) = pos_of_dart[rev];
            slot_dart[y][(i + 1) % slot_dart[y].len()]
        };
        let mut face_of_dart = vec![usize::MAX; 2 * m];
        let mut faces = Vec::new();
        for d0 in 0..2 * m {
            if face_of_dart[d0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = d0;
            loop {
                face_of_dart[d] = id;
                cycle.push(d);
                d = next_in_face(d);
                if d == d0 {
                    break;
                }
            }
            faces.push(cycle);
        }
        let f = faces.len();
        if n + f != m + 2 {
            return Err(FundamentalError::InvalidEmbedding(format!(
                "Euler check failed: n={n} m={m} f={f}"
            )));
        }
        Ok(PlaneEmbedding { graph, rotations, face_of_dart, face_count: f, faces })
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    /// Face on each side of an edge (equal for bridges' two sides only when
    /// the edge borders one face twice).
    pub fn edge_faces(&self, e: EdgeId) -> (usize, usize) {
        (self.face_of_dart[2 * e], self.face_of_dart[2 * e + 1])
    }
}

/// The dual plane multigraph: one vertex per face, one edge per primal edge
/// joining the faces on its two sides (self-loops and parallels arise
/// naturally). Edge ids are shared with the primal (the bijection is the
/// identity), weights are carried over, and the dual's own rotation system
/// is derived from the face traversal order, so duals can be dualized again.
pub fn dual_graph(pe: &PlaneEmbedding) -> Result<PlaneEmbedding, FundamentalError> {
    let m = pe.graph.edge_count();
    let mut edges = Vec::with_capacity(m);
    for e in 0..m {
        let (f1, f2) = pe.edge_faces(e);
        edges.push((f1, f2, pe.graph.weight(e)));
    }
    let dual = Graph::build(pe.face_count, &edges).expect("faces index a valid graph");
    let rotations: Vec<Vec<EdgeId>> =
        pe.faces.iter().map(|cycle| cycle.iter().map(|&d| d / 2).collect()).collect();
    PlaneEmbedding::new(dual, rotations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rooted(n: usize, edges: &[(usize, usize, u64)], root: EdgeId) -> RootedGraph {
        RootedGraph::new(Graph::build(n, edges).unwrap(), root).unwrap()
    }

    fn k4() -> Vec<(usize, usize, u64)> {
        vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]
    }

    #[test]
    fn triangle_tree_check() {
        let rg = rooted(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)], 0);
        assert_eq!(is_fundamental_rooted(&rg, &[0, 1]), Ok(None));
        assert_eq!(
            is_fundamental_rooted(&rg, &[1, 2]),
            Err(FundamentalError::RootNotInTree)
        );
        assert!(matches!(
            is_fundamental_rooted(&rg, &[0, 1, 2]),
            Err(FundamentalError::NotASpanningTree(_))
        ));
    }

    #[test]
    fn k4_tree_checks() {
        let rg = rooted(4, &k4(), 0);
        // {01, 02, 13}: every non-tree cycle crosses the 0/1 split.
        assert_eq!(is_fundamental_rooted(&rg, &[0, 1, 4]), Ok(None));
        // {01, 02, 03}: edge 23 has cycle 2-0-3 avoiding the root.
        assert_eq!(is_fundamental_rooted(&rg, &[0, 1, 2]), Ok(Some(5)));
    }

    #[test]
    fn partition_search_on_k4() {
        let rg = rooted(4, &k4(), 0);
        let tree = find_fundamental_rooted_tree(&rg, SearchLimits::default())
            .unwrap()
            .expect("K4 has a fundamental rooted basis");
        assert_eq!(is_fundamental_rooted(&rg, &tree), Ok(None));
    }

    #[test]
    fn partition_search_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let mut done = 0;
        while done < 120 {
            let n = rng.gen_range(3..7);
            let g = crate::testkit::random_graph(&mut rng, n, 0.5, 1..=4);
            if g.edge_count() < 2 || crate::connectivity::is_biconnected(&g).is_err() {
                continue;
            }
            let root = rng.gen_range(0..g.edge_count());
            let Ok(rg) = RootedGraph::new(g, root) else { continue };
            done += 1;
            let fast = find_fundamental_rooted_tree(&rg, SearchLimits::default()).unwrap();
            let brute = crate::testkit::brute_fundamental_search(&rg).unwrap();
            assert_eq!(fast.is_some(), brute.is_some(), "{:?}", rg.graph.edges());
            if let Some(tree) = fast {
                assert_eq!(is_fundamental_rooted(&rg, &tree), Ok(None));
            }
        }
    }

    #[test]
    fn hamiltonian_basics() {
        let c5 = rooted(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)], 2);
        assert_eq!(has_rooted_hamiltonian(&c5, SearchLimits::default()), Ok(true));
        let star = rooted(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)], 0);
        assert_eq!(has_rooted_hamiltonian(&star, SearchLimits::default()), Ok(false));
        let k4 = rooted(4, &k4(), 5);
        assert_eq!(has_rooted_hamiltonian(&k4, SearchLimits::default()), Ok(true));
        let digon = rooted(2, &[(0, 1, 1), (0, 1, 1)], 0);
        assert_eq!(has_rooted_hamiltonian(&digon, SearchLimits::default()), Ok(true));
    }

    #[test]
    fn hamiltonian_matches_brute_count() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for _ in 0..200 {
            let n = rng.gen_range(3..7);
            let g = crate::testkit::random_graph(&mut rng, n, 0.5, 1..=3);
            if g.edge_count() == 0 {
                continue;
            }
            let root = rng.gen_range(0..g.edge_count());
            let Ok(rg) = RootedGraph::new(g, root) else { continue };
            let got = has_rooted_hamiltonian(&rg, SearchLimits::default()).unwrap();
            let want = crate::testkit::enumerate_rooted_cycles(&rg, &Default::default())
                .unwrap()
                .iter()
                .any(|c| c.len() == rg.graph.vertex_count());
            assert_eq!(got, want, "{:?} root {}", rg.graph.edges(), rg.root_edge);
        }
    }

    #[test]
    fn gadget_on_k4_preserves_hamiltonicity() {
        let g = Graph::build(4, &k4()).unwrap();
        for v in 0..4 {
            let (big, forced) = forced_edge_gadget(&g, v).unwrap();
            assert_eq!(big.vertex_count(), 7);
            let rg = RootedGraph::new(big, forced).unwrap();
            assert_eq!(has_rooted_hamiltonian(&rg, SearchLimits::default()), Ok(true));
        }
    }

    #[test]
    fn gadget_rejects_wrong_degree() {
        let g = Graph::build(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert!(matches!(
            forced_edge_gadget(&g, 0),
            Err(FundamentalError::WrongDegree(0, 2))
        ));
        // A self-loop inflates the degree count; reject it explicitly.
        let loopy = Graph::build(2, &[(0, 1, 1), (0, 0, 1)]).unwrap();
        assert!(matches!(
            forced_edge_gadget(&loopy, 0),
            Err(FundamentalError::WrongDegree(0, 3))
        ));
    }

    #[test]
    fn triangle_dual_is_three_parallel_edges() {
        let g = Graph::build(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let pe = PlaneEmbedding::new(g, vec![vec![0, 2], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(pe.face_count(), 2);
        let dual = dual_graph(&pe).unwrap();
        assert_eq!(dual.graph.vertex_count(), 2);
        assert_eq!(dual.graph.edge_count(), 3);
        for e in 0..3 {
            let (a, b) = dual.graph.endpoints(e);
            assert_ne!(a, b);
        }
        // dual of the dual has the triangle's shape back
        let dd = dual_graph(&dual).unwrap();
        assert_eq!(dd.graph.vertex_count(), 3);
        assert_eq!(dd.graph.edge_count(), 3);
    }

    #[test]
    fn single_edge_dual_is_self_loop() {
        let g = Graph::build(2, &[(0, 1, 1)]).unwrap();
        let pe = PlaneEmbedding::new(g, vec![vec![0], vec![0]]).unwrap();
        assert_eq!(pe.face_count(), 1);
        let dual = dual_graph(&pe).unwrap();
        assert_eq!(dual.graph.vertex_count(), 1);
        assert_eq!(dual.graph.edge_count(), 1);
        assert!(dual.graph.is_self_loop(0));
    }

    #[test]
    fn grid_dual_counts() {
        // 2x2 vertex grid... use the 3x3-vertex grid (2x2 cells): 9
        // vertices, 12 edges, 5 faces.
        let (g, rot) = crate::testkit::grid_embedding(3, 3);
        let pe = PlaneEmbedding::new(g, rot).unwrap();
        assert_eq!(pe.face_count(), 5);
        let dual = dual_graph(&pe).unwrap();
        assert_eq!(dual.graph.vertex_count(), 5);
        assert_eq!(dual.graph.edge_count(), 12);
        // Degree sum of the dual equals 2m; the outer face has degree 8.
        let mut degs: Vec<usize> = (0..5).map(|v| dual.graph.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![4, 4, 4, 4, 8]);
    }

    #[test]
    fn tree_cotree_on_grid() {
        // For any spanning tree of a plane graph, the duals of the
        // non-tree edges form a spanning tree of the dual.
        let (g, rot) = crate::testkit::grid_embedding(3, 3);
        let pe = PlaneEmbedding::new(g.clone(), rot).unwrap();
        let dual = dual_graph(&pe).unwrap();
        // any spanning tree: BFS tree
        let mut tree = Vec::new();
        let mut seen = vec![false; g.vertex_count()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for &(e, w) in g.adjacency(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(e);
                    stack.push(w);
                }
            }
        }
        let in_tree: std::collections::HashSet<_> = tree.iter().copied().collect();
        let mut dsu = super::Dsu::new(dual.graph.vertex_count());
        let mut count = 0;
        for e in 0..g.edge_count() {
            if !in_tree.contains(&e) {
                let (a, b) = dual.graph.endpoints(e);
                assert!(dsu.union(a, b), "cotree edge closed a dual cycle");
                count += 1;
            }
        }
        assert_eq!(count, dual.graph.vertex_count() - 1);
    }
}
