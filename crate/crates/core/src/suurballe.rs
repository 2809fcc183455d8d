//! Shortest pairs of vertex-disjoint paths and shortest rooted cycles via
//! the two-stage augmenting-path method: a tie-broken Dijkstra for the first
//! path, then a second shortest-path stage in a vertex-split residual graph
//! whose negative arcs are removed by potential-based reweighting.

use thiserror::Error;

use crate::graph::{Cycle, EdgeId, Graph, RootedGraph, VertexId, Weight};
use crate::tiebreak::{
    tb_apply_signed, tb_compare, tb_empty, tb_from_sorted, TieBreakContext, TieBreakHandle,
};

/// A path reported as parallel vertex and edge sequences
/// (`vertices.len() == edges.len() + 1`).
#[derive(Debug, Clone)]
pub struct PathSeq {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl PathSeq {
    pub fn weight(&self, g: &Graph) -> Weight {
        self.edges.iter().map(|&e| g.weight(e)).sum()
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }
}

/// A maximal segment of the stage-1 shortest path traversed backwards by the
/// stage-2 path. Endpoints are listed in stage-1 path order.
#[derive(Debug, Clone)]
pub struct Rung {
    pub edges: Vec<EdgeId>,
    pub endpoints: (VertexId, VertexId),
}

/// Minimum-total-weight vertex-disjoint paths s→t1 and s→t2 (disjoint except
/// at s), plus the rungs shared by the two intermediate shortest paths,
/// ordered from closest to s outward.
#[derive(Debug, Clone)]
pub struct DisjointPathPair {
    pub path1: PathSeq,
    pub path2: PathSeq,
    pub rungs: Vec<Rung>,
    pub total_weight: Weight,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuurballeError {
    #[error("no two vertex-disjoint paths connect the source to both targets")]
    NoPair,
    #[error("no rooted cycle passes through the requested edge")]
    NoCycle,
}

// ---------------------------------------------------------------------------
// Tie-broken shortest paths
// ---------------------------------------------------------------------------

const NO_INDEX: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: u32,
    weight: u64,
    /// Tie-break index of the underlying edge, or NO_INDEX for internal arcs.
    index: usize,
    /// +1 for forward arcs, -1 for residual (reversed stage-1) arcs.
    sign: i8,
    /// Original edge id carried for path reconstruction.
    edge: EdgeId,
}

struct SpResult {
    dist: Vec<Option<u64>>,
    /// (predecessor node, arc position in its list)
    pred: Vec<Option<(u32, u32)>>,
}

/// Dijkstra ordered by (distance, perturbation handle). Because handles can
/// strictly improve along zero-weight arcs, a node may be re-relaxed after
/// settling (label-correcting); termination follows from the well-founded
/// strict decrease of each node's (distance, handle) label, and distances are
/// exact because handle order only arbitrates equal distances.
fn tb_shortest_paths(
    adj: &[Vec<Arc>],
    source: usize,
    source_handle: TieBreakHandle,
    ctx: &mut TieBreakContext,
) -> SpResult {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let n = adj.len();
    let mut dist: Vec<Option<u64>> = vec![None; n];
    let mut handle = vec![tb_empty(ctx); n];
    let mut pred: Vec<Option<(u32, u32)>> = vec![None; n];
    let mut stamp = vec![0u64; n];
    let mut heap: BinaryHeap<Reverse<(u64, usize, u64)>> = BinaryHeap::new();
    dist[source] = Some(0);
    handle[source] = source_handle;
    heap.push(Reverse((0, source, 0)));
    while let Some(Reverse((d, v, s))) = heap.pop() {
        if s != stamp[v] || dist[v] != Some(d) {
            continue;
        }
        let h = handle[v];
        for (pos, arc) in adj[v].iter().enumerate() {
            let to = arc.to as usize;
            let nd = d + arc.weight;
            let better = match dist[to] {
                None => true,
                Some(od) if nd < od => true,
                Some(od) if nd > od => false,
                Some(od) => {
                    let nh = if arc.index == NO_INDEX {
                        h
                    } else {
                        tb_apply_signed(ctx, h, arc.index, arc.sign).expect("index in universe")
                    };
                    tb_compare(ctx, nd, nh, od, handle[to]) == std::cmp::Ordering::Less
                }
            };
            if better {
                dist[to] = Some(nd);
                handle[to] = if arc.index == NO_INDEX {
                    h
                } else {
                    tb_apply_signed(ctx, h, arc.index, arc.sign).expect("index in universe")
                };
                pred[to] = Some((v as u32, pos as u32));
                stamp[to] += 1;
                heap.push(Reverse((nd, to, stamp[to])));
            }
        }
    }
    SpResult { dist, pred }
}

fn walk_back(res: &SpResult, adj: &[Vec<Arc>], target: usize) -> Vec<Arc> {
    let mut arcs = Vec::new();
    let mut v = target;
    while let Some((p, pos)) = res.pred[v] {
        let arc = adj[p as usize][pos as usize];
        arcs.push(arc);
        v = p as usize;
    }
    arcs.reverse();
    arcs
}

// ---------------------------------------------------------------------------
// Stage 1: plain-graph tie-broken Dijkstra
// ---------------------------------------------------------------------------

fn graph_adjacency_arcs(
    g: &Graph,
    avoid_vertex: Option<VertexId>,
    banned_edge: Option<EdgeId>,
    tie_index: &[usize],
) -> Vec<Vec<Arc>> {
    let mut adj: Vec<Vec<Arc>> = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edge_count() {
        if Some(e) == banned_edge || g.is_self_loop(e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        if Some(u) == avoid_vertex || Some(v) == avoid_vertex {
            continue;
        }
        let w = g.weight(e);
        adj[u].push(Arc { to: v as u32, weight: w, index: tie_index[e], sign: 1, edge: e });
        adj[v].push(Arc { to: u as u32, weight: w, index: tie_index[e], sign: 1, edge: e });
    }
    adj
}

/// Tie-broken single-source shortest path in the plain graph; used directly
/// for the degenerate cases and as Suurballe stage 1.
fn plain_shortest_path(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    avoid_vertex: Option<VertexId>,
    banned_edge: Option<EdgeId>,
    tie_index: &[usize],
    ctx: &mut TieBreakContext,
) -> Option<(PathSeq, Vec<Option<u64>>)> {
    let adj = graph_adjacency_arcs(g, avoid_vertex, banned_edge, tie_index);
    let res = tb_shortest_paths(&adj, s, tb_empty(ctx), ctx);
    res.dist[t]?;
    let arcs = walk_back(&res, &adj, t);
    let mut vertices = vec![s];
    let mut edges = Vec::new();
    for a in &arcs {
        edges.push(a.edge);
        vertices.push(a.to as usize);
    }
    Some((PathSeq { vertices, edges }, res.dist))
}

// ---------------------------------------------------------------------------
// Stage 2: split residual graph
// ---------------------------------------------------------------------------

/// The transformed directed graph of the second stage: every vertex v is
/// split into v_in (2v) and v_out (2v+1); the zero-weight internal arc runs
/// in→out off the first path and out→in on it; off-path edges become forward
/// arcs out→in with their weight, on-path edges become a single reversed arc
/// head_in→tail_out with negated weight. Arc weights are stored here with
/// their true signed values; the search runs on the reweighted form
/// ℓ + d(s,u) − d(s,v) which is everywhere nonnegative.
pub struct SplitGraph {
    /// (from, to, true signed weight, originating edge id if any)
    pub arcs: Vec<(usize, usize, i64, Option<EdgeId>)>,
}

struct SplitBuild {
    adj: Vec<Vec<Arc>>,
    raw: SplitGraph,
}

#[allow(clippy::too_many_arguments)]
fn build_split(
    g: &Graph,
    s: VertexId,
    t2: VertexId,
    banned_edge: Option<EdgeId>,
    p1: &PathSeq,
    h: &[Option<u64>],
    tie_index: &[usize],
) -> SplitBuild {
    let n = g.vertex_count();
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    let mut on_p1 = vec![false; n];
    for &v in &p1.vertices {
        on_p1[v] = true;
    }
    // Direction each first-path edge is traversed (tail, head).
    let mut p1_dir: Vec<Option<(VertexId, VertexId)>> = vec![None; g.edge_count()];
    for (i, &e) in p1.edges.iter().enumerate() {
        p1_dir[e] = Some((p1.vertices[i], p1.vertices[i + 1]));
    }
    let mut adj: Vec<Vec<Arc>> = vec![Vec::new(); 2 * n];
    let mut raw = Vec::new();
    // No arc may enter the source pair (paths never revisit s) and none may
    // leave the target t2 (it is a pure sink, entered via t2_in only).
    let banned_head = [node_in(s), node_out(s)];
    let push = |from: usize, to: usize, true_w: i64, red: u64, index: usize, sign: i8,
                    edge: EdgeId,
                    adj: &mut Vec<Vec<Arc>>,
                    raw: &mut Vec<(usize, usize, i64, Option<EdgeId>)>| {
        if banned_head.contains(&to) {
            return;
        }
        adj[from].push(Arc { to: to as u32, weight: red, index, sign, edge });
        raw.push((from, to, true_w, if index == NO_INDEX { None } else { Some(edge) }));
    };
    for v in 0..n {
        if v == t2 || h[v].is_none() {
            continue;
        }
        if on_p1[v] {
            push(node_out(v), node_in(v), 0, 0, NO_INDEX, 1, 0, &mut adj, &mut raw);
        } else {
            push(node_in(v), node_out(v), 0, 0, NO_INDEX, 1, 0, &mut adj, &mut raw);
        }
    }
    for e in 0..g.edge_count() {
        if Some(e) == banned_edge || g.is_self_loop(e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let w = g.weight(e);
        if let Some((a, b)) = p1_dir[e] {
            // Reversed residual arc; reduced weight is exactly zero because
            // b is a's stage-1 successor: -w + h(b) - h(a) = 0.
            debug_assert_eq!(h[a].unwrap() + w, h[b].unwrap());
            push(node_in(b), node_out(a), -(w as i64), 0, tie_index[e], -1, e, &mut adj, &mut raw);
            continue;
        }
        for (x, y) in [(u, v), (v, u)] {
            if y == t2 {
                // Sink arcs; with the sink potential fixed at zero the
                // reduced weight is w + h(x), trivially nonnegative.
                if let Some(hx) = h[x] {
                    push(node_out(x), node_in(t2), w as i64, w + hx, tie_index[e], 1, e, &mut adj, &mut raw);
                }
                continue;
            }
            if x == t2 {
                continue;
            }
            if let (Some(hx), Some(hy)) = (h[x], h[y]) {
                let red = w as i64 + hx as i64 - hy as i64;
                assert!(red >= 0, "reweighted arc must be nonnegative");
                push(node_out(x), node_in(y), w as i64, red as u64, tie_index[e], 1, e, &mut adj, &mut raw);
            }
        }
    }
    SplitBuild { adj, raw: SplitGraph { arcs: raw } }
}

/// Core two-stage routine over an optionally edge-banned graph with an
/// explicit tie-break index per edge.
fn pair_with_ban(
    g: &Graph,
    s: VertexId,
    t1: VertexId,
    t2: VertexId,
    banned_edge: Option<EdgeId>,
    tie_index: &[usize],
    ctx: &mut TieBreakContext,
) -> Result<DisjointPathPair, SuurballeError> {
    assert!(s != t1 && s != t2 && t1 != t2, "source and targets must be distinct");
    let (p1, h) = plain_shortest_path(g, s, t1, Some(t2), banned_edge, tie_index, ctx)
        .ok_or(SuurballeError::NoPair)?;
    let split = build_split(g, s, t2, banned_edge, &p1, &h, tie_index);
    let mut p1_ids: Vec<usize> = p1.edges.iter().map(|&e| tie_index[e]).collect();
    p1_ids.sort_unstable();
    let start_handle = tb_from_sorted(ctx, &p1_ids).expect("path edges are distinct");
    let res = tb_shortest_paths(&split.adj, 2 * s + 1, start_handle, ctx);
    let t2_in = 2 * t2;
    if res.dist[t2_in].is_none() {
        return Err(SuurballeError::NoPair);
    }
    let p2_arcs = walk_back(&res, &split.adj, t2_in);

    // Symmetric difference of the two stages, by edge id.
    let mut in_union = vec![false; g.edge_count()];
    for &e in &p1.edges {
        in_union[e] = true;
    }
    let mut cancelled = vec![false; g.edge_count()];
    for a in &p2_arcs {
        if a.index == NO_INDEX {
            continue;
        }
        debug_assert_ne!(
            in_union[a.edge],
            a.sign > 0,
            "stage-2 path must not reuse an edge in the same direction"
        );
        in_union[a.edge] ^= true;
        if a.sign < 0 {
            cancelled[a.edge] = true;
        }
    }

    // The union is two vertex-disjoint paths meeting only at s; split it.
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    let mut total_weight: Weight = 0;
    for e in 0..g.edge_count() {
        if in_union[e] {
            let (u, v) = g.endpoints(e);
            incident[u].push(e);
            incident[v].push(e);
            total_weight += g.weight(e);
        }
    }
    assert_eq!(incident[s].len(), 2, "source must have exactly two pair edges");
    let mut taken = vec![false; g.edge_count()];
    let walk_from = |first: EdgeId, taken: &mut Vec<bool>| -> PathSeq {
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        let mut cur = s;
        let mut next_edge = Some(first);
        while let Some(e) = next_edge {
            taken[e] = true;
            edges.push(e);
            cur = g.other_endpoint(e, cur);
            vertices.push(cur);
            if cur == t1 || cur == t2 {
                break;
            }
            next_edge = incident[cur].iter().copied().find(|&f| !taken[f]);
            assert!(next_edge.is_some(), "pair walk stalled before reaching a target");
        }
        PathSeq { vertices, edges }
    };
    let first_edges = (incident[s][0], incident[s][1]);
    let wa = walk_from(first_edges.0, &mut taken);
    let wb = walk_from(first_edges.1, &mut taken);
    assert!(taken.iter().zip(&in_union).all(|(t, u)| t == u), "pair union had leftover edges");
    let (path1, path2) = if wa.last() == t1 {
        assert_eq!(wb.last(), t2);
        (wa, wb)
    } else {
        assert_eq!(wa.last(), t2);
        assert_eq!(wb.last(), t1);
        (wb, wa)
    };

    // Rungs: maximal cancelled runs along the stage-1 path, closest first.
    let mut rungs = Vec::new();
    let mut i = 0;
    while i < p1.edges.len() {
        if cancelled[p1.edges[i]] {
            let start = i;
            while i < p1.edges.len() && cancelled[p1.edges[i]] {
                i += 1;
            }
            rungs.push(Rung {
                edges: p1.edges[start..i].to_vec(),
                endpoints: (p1.vertices[start], p1.vertices[i]),
            });
        } else {
            i += 1;
        }
    }
    Ok(DisjointPathPair { path1, path2, rungs, total_weight })
}

fn identity_tie_index(m: usize) -> Vec<usize> {
    (0..m).collect()
}

/// Shortest pair of vertex-disjoint paths from `s` to the two distinct
/// targets, minimizing total weight; ties resolved by the context.
pub fn shortest_disjoint_path_pair(
    g: &Graph,
    s: VertexId,
    t1: VertexId,
    t2: VertexId,
    ctx: &mut TieBreakContext,
) -> Result<DisjointPathPair, SuurballeError> {
    pair_with_ban(g, s, t1, t2, None, &identity_tie_index(g.edge_count()), ctx)
}

/// Diagnostic accessor used by tests: the split residual graph (with true
/// signed arc weights) for the stage-1 path of the given instance, together
/// with the stage-1 distances used as vertex potentials. An arc (a, b, w)
/// between split nodes has reduced weight `w + h(a/2) - h(b/2)`, which is
/// non-negative whenever both endpoint distances are defined.
pub fn split_graph_for(
    g: &Graph,
    s: VertexId,
    t1: VertexId,
    t2: VertexId,
    ctx: &mut TieBreakContext,
) -> Option<(SplitGraph, Vec<Option<u64>>)> {
    let tie = identity_tie_index(g.edge_count());
    let (p1, h) = plain_shortest_path(g, s, t1, Some(t2), None, &tie, ctx)?;
    let raw = build_split(g, s, t2, None, &p1, &h, &tie).raw;
    Some((raw, h))
}

/// Minimum-weight cycle containing both `f` and the root edge; ties resolved
/// by the context.
///
/// The context's index universe must cover `edge_count + 1` indices: index m
/// is reserved for the temporary subdivision half-edge. For `f` equal to the
/// root edge the result is the shortest rooted cycle overall.
pub fn shortest_rooted_cycle_through_edge(
    rg: &RootedGraph,
    f: EdgeId,
    ctx: &mut TieBreakContext,
) -> Result<Cycle, SuurballeError> {
    let g = &rg.graph;
    let e = rg.root_edge;
    let (t1, t2) = rg.root_endpoints();
    if g.is_self_loop(f) {
        return Err(SuurballeError::NoCycle);
    }
    if f == e {
        let tie = identity_tie_index(g.edge_count());
        let (path, _) = plain_shortest_path(g, t1, t2, None, Some(e), &tie, ctx)
            .ok_or(SuurballeError::NoCycle)?;
        let mut ids = path.edges;
        ids.push(e);
        return Ok(Cycle::new(g, ids).expect("root edge plus disjoint path is a cycle"));
    }
    // Subdivide f at a new vertex x; halves keep f's tie index and get the
    // fresh index m. All weights are doubled so the halves stay integral.
    let n = g.vertex_count();
    let m = g.edge_count();
    let (a, b) = g.endpoints(f);
    let mut edge_list: Vec<(VertexId, VertexId, Weight)> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let (u, v) = g.endpoints(i);
        if i == f {
            edge_list.push((a, n, g.weight(f)));
        } else {
            edge_list.push((u, v, 2 * g.weight(i)));
        }
    }
    edge_list.push((n, b, g.weight(f)));
    let sub = Graph::build(n + 1, &edge_list).expect("subdivision preserves validity");
    let mut tie = identity_tie_index(m + 1);
    tie[m] = m;
    let pair = pair_with_ban(&sub, n, t1, t2, Some(e), &tie, ctx)
        .map_err(|_| SuurballeError::NoCycle)?;
    let mut ids = vec![e, f];
    for &i in pair.path1.edges.iter().chain(&pair.path2.edges) {
        if i != f && i != m {
            ids.push(i);
        }
    }
    Ok(Cycle::new(g, ids).expect("pair plus subdivided edge closes a rooted cycle"))
}

/// Shortest rooted cycle through every edge at once (None where no rooted
/// cycle exists through that edge, e.g. self-loops or bridges).
/// Runs the per-edge computation for every edge. The per-edge path sets are
/// independent, so the context's subset objects are released after each edge
/// to keep memory proportional to a single run; any handles the caller
/// obtained earlier are invalidated.
pub fn all_edges_shortest_rooted_cycles(
    rg: &RootedGraph,
    ctx: &mut TieBreakContext,
) -> Vec<Option<Cycle>> {
    (0..rg.graph.edge_count())
        .map(|f| {
            let c = shortest_rooted_cycle_through_edge(rg, f, ctx).ok();
            ctx.clear_objects();
            c
        })
        .collect()
}

/// Per-edge shortest rooted cycle weights. Requires every edge to lie on a
/// rooted cycle (the graph is a biconnected 2-core containing the root).
pub fn all_edges_shortest_rooted_cycle_lengths(
    rg: &RootedGraph,
    ctx: &mut TieBreakContext,
) -> Vec<Weight> {
    all_edges_shortest_rooted_cycles(rg, ctx)
        .into_iter()
        .map(|c| c.expect("every edge of a biconnected 2-core lies on a rooted cycle").weight())
        .collect()
}
