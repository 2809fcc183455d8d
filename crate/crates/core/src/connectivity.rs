//! 2-core extraction, biconnectivity testing, open ear decompositions rooted
//! at a chosen first edge, and the constructive disjoint-paths procedure used
//! to close ears into rooted cycles.

use thiserror::Error;

use crate::graph::{cycle_space_dimension, EdgeId, Graph, VertexId};

/// Induced subgraph left after iterated removal of degree <= 1 vertices,
/// with id maps in both directions.
#[derive(Debug, Clone)]
pub struct TwoCore {
    pub graph: Graph,
    /// core vertex id -> original vertex id
    pub orig_vertex: Vec<VertexId>,
    /// core edge id -> original edge id
    pub orig_edge: Vec<EdgeId>,
    /// original vertex id -> core vertex id
    pub core_vertex: Vec<Option<VertexId>>,
    /// original edge id -> core edge id
    pub core_edge: Vec<Option<EdgeId>>,
}

/// Iterated degree->=2 peeling. May return an empty graph.
pub fn two_core(g: &Graph) -> TwoCore {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| deg[v] <= 1).collect();
    for &v in &stack {
        removed[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &(e, w) in g.adjacency(v) {
            if g.is_self_loop(e) || removed[w] {
                continue;
            }
            deg[w] -= 1;
            if deg[w] <= 1 {
                removed[w] = true;
                stack.push(w);
            }
        }
    }
    let mut core_vertex = vec![None; n];
    let mut orig_vertex = Vec::new();
    for v in 0..n {
        if !removed[v] {
            core_vertex[v] = Some(orig_vertex.len());
            orig_vertex.push(v);
        }
    }
    let mut core_edge = vec![None; g.edge_count()];
    let mut orig_edge = Vec::new();
    let mut edge_list = Vec::new();
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if let (Some(cu), Some(cv)) = (core_vertex[u], core_vertex[v]) {
            core_edge[e] = Some(orig_edge.len());
            orig_edge.push(e);
            edge_list.push((cu, cv, g.weight(e)));
        }
    }
    let graph = Graph::build(orig_vertex.len(), &edge_list).expect("induced subgraph is valid");
    TwoCore { graph, orig_vertex, orig_edge, core_vertex, core_edge }
}

/// Why a graph is not 2-vertex-connected, with a witness usable in messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotBiconnected {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has fewer than two vertices or no edges")]
    TooSmall,
    #[error("vertices {0} and {1} lie in different components")]
    Disconnected(VertexId, VertexId),
    #[error("vertex {0} is a cut vertex")]
    CutVertex(VertexId),
    #[error("edge {0} is a self-loop")]
    SelfLoop(EdgeId),
}

/// 2-vertex-connectivity over multigraphs: parallel edges count (a two-vertex
/// bundle of parallel edges is biconnected), self-loops disqualify.
pub fn is_biconnected(g: &Graph) -> Result<(), NotBiconnected> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(NotBiconnected::Empty);
    }
    if n == 1 || g.edge_count() == 0 {
        return Err(NotBiconnected::TooSmall);
    }
    for e in 0..g.edge_count() {
        if g.is_self_loop(e) {
            return Err(NotBiconnected::SelfLoop(e));
        }
    }
    // Iterative Tarjan low-link. Parent tracked by edge id so parallel edges
    // act as back edges.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut timer = 0;
    let mut root_children = 0;
    // stack of (vertex, adjacency cursor)
    let mut stack: Vec<(VertexId, usize)> = Vec::new();
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    stack.push((0, 0));
    while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
        if *cursor < g.degree(v) {
            let (e, w) = g.adjacency(v)[*cursor];
            *cursor += 1;
            if e == parent_edge[v] {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                parent_edge[w] = e;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(u, _)) = stack.last() {
                low[u] = low[u].min(low[v]);
                if u != 0 && low[v] >= disc[u] {
                    return Err(NotBiconnected::CutVertex(u));
                }
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| disc[v] == usize::MAX) {
        return Err(NotBiconnected::Disconnected(0, v));
    }
    if root_children > 1 {
        return Err(NotBiconnected::CutVertex(0));
    }
    Ok(())
}

/// One ear: a simple path stored as an alternating vertex/edge sequence
/// (`vertices.len() == edges.len() + 1`).
#[derive(Debug, Clone)]
pub struct Ear {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Ear {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (*self.vertices.first().unwrap(), *self.vertices.last().unwrap())
    }

    pub fn is_single_edge(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Open ear decomposition with `ears[0]` a designated single edge.
#[derive(Debug, Clone)]
pub struct EarDecomposition {
    pub ears: Vec<Ear>,
    /// First ear in which the vertex occurs. Interior vertices get the ear
    /// they are interior to; the two root endpoints get 0.
    pub ear_of_vertex: Vec<usize>,
    /// position of the vertex inside `ears[ear_of_vertex[v]].vertices`
    pub pos_in_ear: Vec<usize>,
    pub ear_of_edge: Vec<usize>,
}

impl EarDecomposition {
    pub fn root_edge(&self) -> EdgeId {
        self.ears[0].edges[0]
    }

    pub fn root_endpoints(&self) -> (VertexId, VertexId) {
        self.ears[0].endpoints()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EarError {
    #[error("graph is not 2-vertex-connected: {0}")]
    NotBiconnected(#[from] NotBiconnected),
    #[error("first edge {0} is invalid or a self-loop")]
    BadFirstEdge(EdgeId),
}

/// Open ear decomposition with `first_edge` as the first ear, via a DFS
/// chain decomposition. Requires a 2-vertex-connected input.
pub fn open_ear_decomposition(g: &Graph, first_edge: EdgeId) -> Result<EarDecomposition, EarError> {
    if first_edge >= g.edge_count() || g.is_self_loop(first_edge) {
        return Err(EarError::BadFirstEdge(first_edge));
    }
    is_biconnected(g)?;
    let n = g.vertex_count();
    let (t1, t2) = g.endpoints(first_edge);

    // DFS from t1 with the root edge as the forced first tree edge. In a
    // biconnected graph the DFS root then has exactly one child, t2, so every
    // chain from a back edge at t1 passes through the root edge.
    let mut disc = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut preorder: Vec<VertexId> = Vec::with_capacity(n);
    let mut timer = 0;
    disc[t1] = timer;
    timer += 1;
    preorder.push(t1);
    disc[t2] = timer;
    timer += 1;
    parent[t2] = t1;
    parent_edge[t2] = first_edge;
    preorder.push(t2);
    let mut stack: Vec<(VertexId, usize)> = vec![(t1, 0), (t2, 0)];
    while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
        if *cursor < g.degree(v) {
            let (e, w) = g.adjacency(v)[*cursor];
            *cursor += 1;
            if e == parent_edge[v] || disc[w] != usize::MAX {
                continue;
            }
            disc[w] = timer;
            timer += 1;
            parent[w] = v;
            parent_edge[w] = e;
            preorder.push(w);
            stack.push((w, 0));
        } else {
            stack.pop();
        }
    }
    debug_assert_eq!(timer, n, "biconnected graph must be connected");

    let mut visited = vec![false; n];
    let mut edge_used = vec![false; g.edge_count()];
    visited[t1] = true;
    edge_used[first_edge] = true;

    let mut ears: Vec<Ear> =
        vec![Ear { vertices: vec![t1, t2], edges: vec![first_edge] }];

    for &v in &preorder {
        for &(e, w) in g.adjacency(v) {
            if edge_used[e] || parent_edge[w] == e {
                continue;
            }
            // Back edge with v the ancestor endpoint.
            if disc[v] > disc[w] {
                continue;
            }
            edge_used[e] = true;
            let mut vertices = vec![v, w];
            let mut edges = vec![e];
            let mut x = w;
            while !visited[x] {
                visited[x] = true;
                let pe = parent_edge[x];
                edge_used[pe] = true;
                x = parent[x];
                vertices.push(x);
                edges.push(pe);
            }
            if ears.len() == 1 {
                // First chain is the cycle through the root edge; its climb
                // ends by crossing the root edge into t1. Drop that last step
                // so the remainder is the t1..t2 path forming ear 1.
                debug_assert_eq!(v, t1);
                debug_assert_eq!(*edges.last().unwrap(), first_edge);
                debug_assert_eq!(*vertices.last().unwrap(), t1);
                vertices.pop();
                edges.pop();
                debug_assert_eq!(*vertices.last().unwrap(), t2);
            }
            debug_assert_ne!(
                vertices.first(),
                vertices.last(),
                "closed chain implies a cut vertex"
            );
            ears.push(Ear { vertices, edges });
        }
    }
    debug_assert!(edge_used.iter().all(|&u| u), "2-edge-connected graph covers all edges");
    debug_assert_eq!(ears.len(), 1 + cycle_space_dimension(g));

    let mut ear_of_vertex = vec![usize::MAX; n];
    let mut pos_in_ear = vec![usize::MAX; n];
    let mut ear_of_edge = vec![usize::MAX; g.edge_count()];
    ear_of_vertex[t1] = 0;
    pos_in_ear[t1] = 0;
    ear_of_vertex[t2] = 0;
    pos_in_ear[t2] = 1;
    for (i, ear) in ears.iter().enumerate() {
        for &e in &ear.edges {
            ear_of_edge[e] = i;
        }
        if i > 0 {
            for (p, &v) in ear.vertices.iter().enumerate() {
                if p > 0 && p + 1 < ear.vertices.len() {
                    ear_of_vertex[v] = i;
                    pos_in_ear[v] = p;
                }
            }
        }
    }
    Ok(EarDecomposition { ears, ear_of_vertex, pos_in_ear, ear_of_edge })
}

/// A path from a query vertex to one root endpoint; possibly length zero.
#[derive(Debug, Clone)]
pub struct RootPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl RootPath {
    pub fn endpoint(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }
}

/// Two vertex-disjoint paths from `u` and `v` to the two distinct root
/// endpoints; neither uses the root edge.
#[derive(Debug, Clone)]
pub struct PathToRootPair {
    pub path_u: RootPath,
    pub path_v: RootPath,
}

/// Constructive special case of Menger's theorem: walks the ear decomposition
/// from the last ear downward, moving each query vertex to an ear endpoint
/// until both rest on the root endpoints. One-edge ears have no interior and
/// are never entered. Runs in O(n).
///
/// When an ear interior holds exactly one query vertex and both ear endpoints
/// are eligible, the endpoint with the smaller vertex id is chosen; any valid
/// choice satisfies the contract.
pub fn disjoint_paths_to_root(
    ed: &EarDecomposition,
    u: VertexId,
    v: VertexId,
) -> PathToRootPair {
    assert_ne!(u, v, "query vertices must be distinct");
    let mut pu = RootPath { vertices: vec![u], edges: Vec::new() };
    let mut pv = RootPath { vertices: vec![v], edges: Vec::new() };
    let mut cu = u;
    let mut cv = v;
    loop {
        let ku = ed.ear_of_vertex[cu];
        let kv = ed.ear_of_vertex[cv];
        if ku == 0 && kv == 0 {
            break;
        }
        if ku == kv {
            // Both interior to the same ear: split it between them.
            let ear = &ed.ears[ku];
            let (mut a, mut b) = (cu, cv);
            let (mut pa, mut pb) = (&mut pu, &mut pv);
            if ed.pos_in_ear[a] > ed.pos_in_ear[b] {
                std::mem::swap(&mut a, &mut b);
                std::mem::swap(&mut pa, &mut pb);
            }
            extend_along_ear(ear, ed.pos_in_ear[a], 0, pa);
            extend_along_ear(ear, ed.pos_in_ear[b], ear.vertices.len() - 1, pb);
            cu = pu.endpoint();
            cv = pv.endpoint();
        } else {
            // Move the vertex interior to the later ear to one of that ear's
            // endpoints, avoiding the other query vertex.
            let (c, other, path) = if ku > kv { (cu, cv, &mut pu) } else { (cv, cu, &mut pv) };
            let k = ed.ear_of_vertex[c];
            let ear = &ed.ears[k];
            let (a, b) = ear.endpoints();
            let target_pos = if a == other {
                ear.vertices.len() - 1
            } else if b == other {
                0
            } else if a <= b {
                0
            } else {
                ear.vertices.len() - 1
            };
            extend_along_ear(ear, ed.pos_in_ear[c], target_pos, path);
            if ku > kv {
                cu = pu.endpoint();
            } else {
                cv = pv.endpoint();
            }
        }
        debug_assert_ne!(cu, cv);
    }
    PathToRootPair { path_u: pu, path_v: pv }
}

fn extend_along_ear(ear: &Ear, from: usize, to: usize, path: &mut RootPath) {
    debug_assert_eq!(*path.vertices.last().unwrap(), ear.vertices[from]);
    if from < to {
        for p in from..to {
            path.edges.push(ear.edges[p]);
            path.vertices.push(ear.vertices[p + 1]);
        }
    } else {
        for p in (to..from).rev() {
            path.edges.push(ear.edges[p]);
            path.vertices.push(ear.vertices[p]);
        }
    }
}
