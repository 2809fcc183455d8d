//! Brute-force oracles, exhaustive catalogs, and random instances.
//!
//! Everything here trades speed for obviousness: cycle enumeration by path
//! search, minimum bases by matroid greedy over all rooted cycles, disjoint
//! path pairs by trying every path, spanning trees by trying every edge
//! subset. The fast algorithms are tested against these.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::fundamental::{is_fundamental_rooted, FundamentalError};
use crate::graph::{
    cycle_space_dimension, gf2_rank, Cycle, CycleBasis, EdgeId, Graph, RootedGraph, VertexId,
    Weight,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TestkitError {
    #[error("cycle enumeration exceeded the cap of {0} cycles")]
    TooManyCycles(usize),
    #[error("the rooted cycles do not span the cycle space (rank {rank} of {dim})")]
    NoRootedBasis { rank: usize, dim: usize },
}

/// Caps for exhaustive enumeration.
#[derive(Debug, Clone, Copy)]
pub struct EnumCaps {
    pub max_cycles: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps { max_cycles: 1_000_000 }
    }
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

/// Erdős–Rényi-style simple graph: each vertex pair gets an edge with
/// probability `edge_prob`, weights drawn uniformly from `weights`.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    edge_prob: f64,
    weights: RangeInclusive<u64>,
) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v, rng.gen_range(weights.clone())));
            }
        }
    }
    Graph::build(n, &edges).expect("random instance is a valid graph")
}

/// Random biconnected multigraph: a Hamiltonian cycle through a shuffled
/// vertex order plus `m - n` random chords (parallel chords may occur).
/// Requires n ≥ 3 and m ≥ n.
pub fn random_biconnected<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    weights: RangeInclusive<u64>,
) -> Graph {
    assert!(n >= 3 && m >= n);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::with_capacity(m);
    for i in 0..n {
        edges.push((order[i], order[(i + 1) % n], rng.gen_range(weights.clone())));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v, rng.gen_range(weights.clone())));
        }
    }
    Graph::build(n, &edges).expect("random instance is a valid graph")
}

// ---------------------------------------------------------------------------
// Shortest paths, the slow way
// ---------------------------------------------------------------------------

/// Hop count of a shortest u–v path, by BFS.
pub fn unweighted_distance(g: &Graph, u: VertexId, v: VertexId) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[u] = 0;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return Some(dist[x]);
        }
        for &(_, y) in g.adjacency(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Cycle enumeration
// ---------------------------------------------------------------------------

/// Every simple cycle of the multigraph as an edge set: self-loops,
/// two-edge cycles of parallel edges, and longer vertex-simple cycles.
pub fn enumerate_all_cycles(g: &Graph, caps: &EnumCaps) -> Result<Vec<Cycle>, TestkitError> {
    let mut seen: HashSet<Vec<EdgeId>> = HashSet::new();
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        if g.is_self_loop(e) {
            let cyc = Cycle::new(g, [e]).expect("a self-loop is a cycle");
            seen.insert(vec![e]);
            out.push(cyc);
        }
    }
    // Vertex-simple closed walks: grow a path from `start` through vertices
    // > start (or back to start) without repeating edges; each closure is a
    // cycle, deduplicated by its sorted edge set.
    struct Dfs<'a> {
        g: &'a Graph,
        start: VertexId,
        on_path: Vec<bool>,
        edge_used: Vec<bool>,
        path_edges: Vec<EdgeId>,
        seen: &'a mut HashSet<Vec<EdgeId>>,
        out: &'a mut Vec<Cycle>,
        cap: usize,
    }

    impl Dfs<'_> {
        fn run(&mut self, v: VertexId) -> Result<(), TestkitError> {
            for i in 0..self.g.degree(v) {
                let (e, w) = self.g.adjacency(v)[i];
                if self.edge_used[e] || w < self.start || self.g.is_self_loop(e) {
                    continue;
                }
                if w == self.start {
                    if self.path_edges.is_empty() {
                        continue; // lone edge back to start, not a cycle
                    }
                    let mut ids = self.path_edges.clone();
                    ids.push(e);
                    ids.sort_unstable();
                    if self.seen.insert(ids.clone()) {
                        if self.out.len() == self.cap {
                            return Err(TestkitError::TooManyCycles(self.cap));
                        }
                        let weight = ids.iter().map(|&x| self.g.weight(x)).sum();
                        self.out.push(Cycle::from_parts_unchecked(ids, weight));
                    }
                    continue;
                }
                if self.on_path[w] {
                    continue;
                }
                self.on_path[w] = true;
                self.edge_used[e] = true;
                self.path_edges.push(e);
                self.run(w)?;
                self.path_edges.pop();
                self.edge_used[e] = false;
                self.on_path[w] = false;
            }
            Ok(())
        }
    }

    for start in 0..g.vertex_count() {
        let mut dfs = Dfs {
            g,
            start,
            on_path: vec![false; g.vertex_count()],
            edge_used: vec![false; g.edge_count()],
            path_edges: Vec::new(),
            seen: &mut seen,
            out: &mut out,
            cap: caps.max_cycles,
        };
        dfs.on_path[start] = true;
        dfs.run(start)?;
    }
    Ok(out)
}

/// Every simple cycle through the root edge.
pub fn enumerate_rooted_cycles(
    rg: &RootedGraph,
    caps: &EnumCaps,
) -> Result<Vec<Cycle>, TestkitError> {
    let all = enumerate_all_cycles(&rg.graph, caps)?;
    Ok(all.into_iter().filter(|c| c.contains(rg.root_edge)).collect())
}

/// Definitional existence oracle: do the cycles through the root edge span
/// the whole cycle space over GF(2)?
///
/// The root edge must itself lie on at least one cycle: an acyclic graph
/// has dimension 0 and a vacuously-spanning empty cycle set, but a root
/// edge on no cycle is not considered to have a rooted basis (a path graph
/// has none, whichever edge is chosen as root).
pub fn rooted_basis_exists_oracle(rg: &RootedGraph) -> bool {
    let rooted = enumerate_rooted_cycles(rg, &EnumCaps::default())
        .expect("oracle instances stay under the enumeration cap");
    if rooted.is_empty() {
        return false;
    }
    let rank = gf2_rank(rooted.iter().map(|c| c.edge_ids()), rg.graph.edge_count());
    rank == cycle_space_dimension(&rg.graph)
}

/// Minimum-weight rooted basis by matroid greedy over all rooted cycles:
/// sort by weight, keep each cycle that increases the GF(2) rank. Linear
/// matroid optimality makes this exact. No witness edges are produced.
pub fn brute_min_rooted_basis(rg: &RootedGraph) -> Result<CycleBasis, TestkitError> {
    let mut rooted = enumerate_rooted_cycles(rg, &EnumCaps::default())?;
    rooted.sort_by_key(|c| c.weight());
    let dim = cycle_space_dimension(&rg.graph);
    let mut basis = crate::graph::Gf2Basis::new(rg.graph.edge_count().max(1));
    let mut cycles = Vec::new();
    for c in rooted {
        if basis.insert(c.edge_ids()) {
            cycles.push(c);
            if cycles.len() == dim {
                break;
            }
        }
    }
    if cycles.len() != dim {
        return Err(TestkitError::NoRootedBasis { rank: cycles.len(), dim });
    }
    let witness_edges = vec![None; cycles.len()];
    Ok(CycleBasis { cycles, witness_edges })
}

// ---------------------------------------------------------------------------
// Disjoint path pairs
// ---------------------------------------------------------------------------

/// Minimum total weight of two paths s→t1 and s→t2 that share no vertex
/// but s, by enumerating every simple s→t1 path and, for each, the best
/// s→t2 path avoiding it.
pub fn brute_disjoint_pair_weight(
    g: &Graph,
    s: VertexId,
    t1: VertexId,
    t2: VertexId,
) -> Option<Weight> {
    fn best_path(
        g: &Graph,
        cur: VertexId,
        target: VertexId,
        blocked: &mut Vec<bool>,
        acc: Weight,
        best: &mut Option<Weight>,
    ) {
        if cur == target {
            if best.map_or(true, |b| acc < b) {
                *best = Some(acc);
            }
            return;
        }
        for i in 0..g.degree(cur) {
            let (e, w) = g.adjacency(cur)[i];
            if blocked[w] || w == cur {
                continue;
            }
            blocked[w] = true;
            best_path(g, w, target, blocked, acc + g.weight(e), best);
            blocked[w] = false;
        }
    }

    fn paths_to_t1(
        g: &Graph,
        s: VertexId,
        cur: VertexId,
        t1: VertexId,
        t2: VertexId,
        blocked: &mut Vec<bool>,
        acc: Weight,
        best_total: &mut Option<Weight>,
    ) {
        if cur == t1 {
            // blocked marks s and every vertex of this path, which is
            // exactly what the second path must avoid (it starts at s, and
            // blocking s also keeps it from returning there).
            let mut best2 = None;
            best_path(g, s, t2, &mut blocked.clone(), 0, &mut best2);
            if let Some(b2) = best2 {
                let total = acc + b2;
                if best_total.map_or(true, |b| total < b) {
                    *best_total = Some(total);
                }
            }
            return;
        }
        for i in 0..g.degree(cur) {
            let (e, w) = g.adjacency(cur)[i];
            if blocked[w] || w == cur || w == t2 {
                continue;
            }
            blocked[w] = true;
            paths_to_t1(g, s, w, t1, t2, blocked, acc + g.weight(e), best_total);
            blocked[w] = false;
        }
    }

    if s == t1 || s == t2 || t1 == t2 {
        return None;
    }
    let mut blocked = vec![false; g.vertex_count()];
    blocked[s] = true;
    let mut best = None;
    paths_to_t1(g, s, s, t1, t2, &mut blocked, 0, &mut best);
    best
}

// ---------------------------------------------------------------------------
// Spanning-tree search
// ---------------------------------------------------------------------------

/// Tries every spanning tree containing the root edge and returns the first
/// whose fundamental basis is rooted. Partial edge picks are kept acyclic
/// with a union-find, so only forests are extended.
pub fn brute_fundamental_search(
    rg: &RootedGraph,
) -> Result<Option<Vec<EdgeId>>, FundamentalError> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    fn combos(
        rg: &RootedGraph,
        others: &[EdgeId],
        from: usize,
        need: usize,
        pick: &mut Vec<EdgeId>,
        parent: &[usize],
    ) -> Result<Option<Vec<EdgeId>>, FundamentalError> {
        if need == 0 {
            let mut tree = pick.clone();
            tree.push(rg.root_edge);
            return match is_fundamental_rooted(rg, &tree) {
                Ok(None) => Ok(Some(tree)),
                _ => Ok(None),
            };
        }
        if others.len() - from < need {
            return Ok(None);
        }
        for i in from..others.len() {
            let (u, v) = rg.graph.endpoints(others[i]);
            let mut p = parent.to_vec();
            let (ru, rv) = (find(&mut p, u), find(&mut p, v));
            if ru == rv {
                continue; // would close a cycle
            }
            p[ru] = rv;
            pick.push(others[i]);
            let found = combos(rg, others, i + 1, need - 1, pick, &p)?;
            pick.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    let g = &rg.graph;
    let n = g.vertex_count();
    if n < 2 || n > 1 + g.edge_count() || g.components().0 != 1 {
        return Ok(None);
    }
    let others: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| e != rg.root_edge).collect();
    let mut parent: Vec<usize> = (0..n).collect();
    let (t1, t2) = rg.root_endpoints();
    parent[t1] = t2;
    combos(rg, &others, 0, n - 2, &mut Vec::new(), &parent)
}

// ---------------------------------------------------------------------------
// Exhaustive catalogs
// ---------------------------------------------------------------------------

/// All labeled connected simple graphs on n vertices, unit weights.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize, u64)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u, v, 1))
            .collect();
        let g = Graph::build(n, &edges).unwrap();
        if g.components().0 == 1 {
            out.push(g);
        }
    }
    out
}

/// All biconnected simple graphs on exactly n vertices, one per isomorphism
/// class (canonical form: lexicographically smallest adjacency bitmask over
/// all vertex relabelings). Class counts for n = 3..7: 1, 3, 10, 56, 468.
pub fn biconnected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!((3..=7).contains(&n), "catalog supports 3 <= n <= 7");
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let pair_index = |u: usize, v: usize| -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        // index of (a, b) within the lexicographic pair list
        a * n - a * (a + 1) / 2 + (b - a - 1)
    };
    let perms = permutations(n);
    let mut out = Vec::new();
    'mask: for mask in 0u64..(1 << pairs.len()) {
        if (mask.count_ones() as usize) < n {
            continue; // biconnected needs >= n edges for n >= 3
        }
        let edges: Vec<(usize, usize, u64)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u, v, 1))
            .collect();
        let g = Graph::build(n, &edges).unwrap();
        if crate::connectivity::is_biconnected(&g).is_err() {
            continue;
        }
        // Keep only the class representative with the smallest mask.
        for perm in &perms {
            let mut relabeled = 0u64;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    relabeled |= 1 << pair_index(perm[u], perm[v]);
                }
            }
            if relabeled < mask {
                continue 'mask;
            }
        }
        out.push(g);
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut u64, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if *used >> v & 1 == 0 {
                *used |= 1 << v;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                *used &= !(1 << v);
            }
        }
    }
    let mut used = 0u64;
    rec(n, &mut cur, &mut used, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Plane instances
// ---------------------------------------------------------------------------

/// The rows×cols grid graph with the rotation system of its standard
/// drawing (neighbors listed clockwise: up, right, down, left).
pub fn grid_embedding(rows: usize, cols: usize) -> (Graph, Vec<Vec<EdgeId>>) {
    assert!(rows >= 2 && cols >= 2);
    let vid = |r: usize, c: usize| r * cols + c;
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();
    let mut horiz = vec![vec![usize::MAX; cols]; rows]; // edge right of (r, c)
    let mut vert = vec![vec![usize::MAX; cols]; rows]; // edge below (r, c)
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                horiz[r][c] = edges.len();
                edges.push((vid(r, c), vid(r, c + 1), 1));
            }
            if r + 1 < rows {
                vert[r][c] = edges.len();
                edges.push((vid(r, c), vid(r + 1, c), 1));
            }
        }
    }
    let mut rotations = vec![Vec::new(); rows * cols];
    for r in 0..rows {
        for c in 0..cols {
            let mut rot = Vec::new();
            if r > 0 {
                rot.push(vert[r - 1][c]); // up
            }
            if c + 1 < cols {
                rot.push(horiz[r][c]); // right
            }
            if r + 1 < rows {
                rot.push(vert[r][c]); // down
            }
            if c > 0 {
                rot.push(horiz[r][c - 1]); // left
            }
            rotations[vid(r, c)] = rot;
        }
    }
    (Graph::build(rows * cols, &edges).unwrap(), rotations)
}
