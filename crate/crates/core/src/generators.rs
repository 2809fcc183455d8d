//! Deterministic instance generators: the extremal families from the
//! analysis of rooted-basis total length (ladders, cliques joined by long
//! paths) and the motivating linkage-graph example.

use thiserror::Error;

use crate::graph::{Graph, RootedGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("ladder needs at least 2 rungs, got {0}")]
    LadderTooSmall(usize),
    #[error("clique size must be at least 3, got {0}")]
    CliqueTooSmall(usize),
    #[error("path length must be at least 1, got {0}")]
    PathTooShort(usize),
}

/// The ladder with `k` rungs: two parallel rails of `k` vertices each,
/// joined by `k` unit rungs. 2k vertices, 3k−2 edges, rooted at the first
/// rung. Every rooted cycle basis of this family has total length Θ(k²).
pub fn gen_ladder(k: usize) -> Result<RootedGraph, GenError> {
    if k < 2 {
        return Err(GenError::LadderTooSmall(k));
    }
    // Vertices 0..k are the top rail, k..2k the bottom rail.
    let mut edges: Vec<(VertexId, VertexId, u64)> = Vec::with_capacity(3 * k - 2);
    for i in 0..k {
        edges.push((i, k + i, 1)); // rung i; the root is rung 0
    }
    for i in 0..k - 1 {
        edges.push((i, i + 1, 1));
        edges.push((k + i, k + i + 1, 1));
    }
    let g = Graph::build(2 * k, &edges).expect("ladder is a valid graph");
    Ok(RootedGraph::new(g, 0).expect("first rung is not a self-loop"))
}

/// Two cliques of `clique_size` vertices joined by two vertex-disjoint
/// paths of `path_len` unit edges each, rooted at an edge inside the first
/// clique. Every rooted cycle through an edge of the far clique must
/// traverse both connecting paths, so its length is at least 2·path_len;
/// with Θ(clique_size²) far-clique edges the minimum rooted basis has total
/// length Θ(m·n).
pub fn gen_cliques_with_paths(
    clique_size: usize,
    path_len: usize,
) -> Result<RootedGraph, GenError> {
    if clique_size < 3 {
        return Err(GenError::CliqueTooSmall(clique_size));
    }
    if path_len < 1 {
        return Err(GenError::PathTooShort(path_len));
    }
    let c = clique_size;
    // Vertices 0..c: near clique; c..2c: far clique; then the interior
    // vertices of the two paths (path_len − 1 each).
    let mut edges: Vec<(VertexId, VertexId, u64)> = Vec::new();
    for a in 0..c {
        for b in a + 1..c {
            edges.push((a, b, 1)); // (0,1) comes first and is the root
        }
    }
    for a in 0..c {
        for b in a + 1..c {
            edges.push((c + a, c + b, 1));
        }
    }
    let mut next = 2 * c;
    for (from, to) in [(0, c), (1, c + 1)] {
        let mut prev = from;
        for _ in 0..path_len - 1 {
            edges.push((prev, next, 1));
            prev = next;
            next += 1;
        }
        edges.push((prev, to, 1));
    }
    let g = Graph::build(next, &edges).expect("clique family is a valid graph");
    Ok(RootedGraph::new(g, 0).expect("clique edge is not a self-loop"))
}

/// The linkage-graph example: a subdivision of K₃,₃ with four edges
/// subdivided once, giving 10 vertices and 13 = (3/2)·10 − 2 edges. The
/// graph is (3/2, 2)-tight (every k-vertex induced subgraph has at most
/// (3/2)k − 2 edges), non-planar, and rooted at an unsubdivided edge
/// standing in for the ground–input joint.
pub fn gen_k33_subdivision() -> RootedGraph {
    // Parts {0,1,2} and {3,4,5}; edges (0,3), (0,4), (1,4), (2,5) are
    // subdivided through fresh vertices 6..10.
    let edges: [(VertexId, VertexId, u64); 13] = [
        (0, 5, 1), // root
        (1, 3, 1),
        (1, 5, 1),
        (2, 3, 1),
        (2, 4, 1),
        (0, 6, 1),
        (6, 3, 1),
        (0, 7, 1),
        (7, 4, 1),
        (1, 8, 1),
        (8, 4, 1),
        (2, 9, 1),
        (9, 5, 1),
    ];
    let g = Graph::build(10, &edges).expect("subdivided K33 is a valid graph");
    RootedGraph::new(g, 0).expect("root edge is not a self-loop")
}
