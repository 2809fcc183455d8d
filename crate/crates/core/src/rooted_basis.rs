//! Existence testing and construction of rooted cycle bases: bases of the
//! cycle space in which every basis cycle contains a designated root edge.

use thiserror::Error;

use crate::connectivity::{
    disjoint_paths_to_root, is_biconnected, open_ear_decomposition, two_core, NotBiconnected,
    TwoCore,
};
use crate::graph::{Cycle, CycleBasis, EdgeId, Graph, RootedGraph, VertexId, Weight};

/// Why no rooted cycle basis exists for the given root edge.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NoRootedBasis {
    #[error("root edge {0} is not in the 2-core")]
    RootNotInTwoCore(EdgeId),
    #[error("2-core is not 2-vertex-connected: {0}")]
    CoreNotBiconnected(NotBiconnected),
    #[error(
        "cycle edge {cycle_edge} lies in a different 2-core component than the root; \
         no basis cycle can cover it"
    )]
    CoreDisconnectedFromRoot { cycle_edge: EdgeId },
}

/// Decides whether a rooted cycle basis exists. The criterion: the root edge
/// belongs to the 2-core and the entire 2-core is 2-vertex-connected.
///
/// Edges outside the 2-core lie on no cycle, so they constrain nothing. A
/// 2-core component disjoint from the root's has positive cycle space but no
/// cycles through the root, which is reported with a witness edge. Within a
/// single 2-core component, a cut vertex separates some cycle from the root
/// edge (any set of rooted cycles spanning it would need two vertex-disjoint
/// root-to-cycle connections).
pub fn has_rooted_cycle_basis(rg: &RootedGraph) -> Result<(), NoRootedBasis> {
    core_for_basis(rg).map(|_| ())
}

fn core_for_basis(rg: &RootedGraph) -> Result<(TwoCore, EdgeId), NoRootedBasis> {
    let core = two_core(&rg.graph);
    let Some(root_in_core) = core.core_edge[rg.root_edge] else {
        return Err(NoRootedBasis::RootNotInTwoCore(rg.root_edge));
    };
    if let Err(err) = is_biconnected(&core.graph) {
        return Err(match err {
            NotBiconnected::Disconnected(..) => {
                // Witness: any core edge outside the root's component.
                let (_, comp) = core.graph.components();
                let (ru, _) = core.graph.endpoints(root_in_core);
                let root_comp = comp[ru];
                let witness = (0..core.graph.edge_count())
                    .find(|&e| comp[core.graph.endpoints(e).0] != root_comp)
                    .expect("some edge lies outside the root component");
                NoRootedBasis::CoreDisconnectedFromRoot { cycle_edge: core.orig_edge[witness] }
            }
            other => NoRootedBasis::CoreNotBiconnected(other),
        });
    }
    Ok((core, root_in_core))
}

/// Builds a rooted cycle basis in O(mn) time, or reports why none exists.
///
/// The construction follows an open ear decomposition of the 2-core whose
/// first ear is the root edge: for ear `i >= 1` with endpoints `u, v`, two
/// vertex-disjoint paths from `u` and `v` to the root endpoints close the ear
/// into a simple cycle through the root edge. Each such cycle contains its
/// ear's edges and otherwise only earlier-ear edges, so the incidence matrix
/// over GF(2) is triangular and the cycles are independent; their count
/// matches the cycle space dimension of the 2-core. The basis is weakly
/// fundamental: reversing construction order gives each cycle a private edge.
pub fn build_rooted_cycle_basis(rg: &RootedGraph) -> Result<CycleBasis, NoRootedBasis> {
    let (core, root_in_core) = core_for_basis(rg)?;
    let g = &core.graph;
    let ed = open_ear_decomposition(g, root_in_core)
        .expect("2-core verified biconnected with a non-loop root edge");
    let mut cycles = Vec::with_capacity(ed.ears.len() - 1);
    let mut witness_edges = Vec::with_capacity(ed.ears.len() - 1);
    let (t1, t2) = g.endpoints(root_in_core);
    for ear in ed.ears.iter().skip(1) {
        let (u, v) = ear.endpoints();
        let mut edge_ids: Vec<EdgeId> = ear.edges.clone();
        if (u, v) == (t1, t2) || (u, v) == (t2, t1) {
            // Ear endpoints are exactly the root endpoints (ear 1 always,
            // later ears sometimes): the ear plus the root edge is a cycle.
        } else {
            let pair = disjoint_paths_to_root(&ed, u, v);
            edge_ids.extend_from_slice(&pair.path_u.edges);
            edge_ids.extend_from_slice(&pair.path_v.edges);
        }
        edge_ids.push(root_in_core);
        // Map back to original edge ids.
        for e in edge_ids.iter_mut() {
            *e = core.orig_edge[*e];
        }
        let weight: Weight = edge_ids.iter().map(|&e| rg.graph.weight(e)).sum();
        edge_ids.sort_unstable();
        debug_assert!(edge_ids.windows(2).all(|w| w[0] != w[1]));
        cycles.push(Cycle::from_parts_unchecked(edge_ids, weight));
        // The last edge of each ear is private to its cycle in reverse order.
        witness_edges.push(Some(core.orig_edge[*ear.edges.last().unwrap()]));
    }
    Ok(CycleBasis { cycles, witness_edges })
}

/// Convenience: vertex sequence of a cycle through the root edge, starting
/// and ending at the same vertex. Used for display output.
pub fn cycle_vertex_walk(g: &Graph, cycle: &Cycle) -> Vec<VertexId> {
    let first = cycle.edge_ids()[0];
    let (start, _) = g.endpoints(first);
    let mut walk = vec![start];
    let mut used = vec![false; cycle.edge_ids().len()];
    let mut cur = start;
    loop {
        let mut advanced = false;
        for (i, &e) in cycle.edge_ids().iter().enumerate() {
            if used[i] {
                continue;
            }
            let (a, b) = g.endpoints(e);
            let next = if a == cur {
                b
            } else if b == cur {
                a
            } else {
                continue;
            };
            used[i] = true;
            walk.push(next);
            cur = next;
            advanced = true;
            break;
        }
        if !advanced {
            break;
        }
    }
    walk
}
