//! Greedy construction of minimum-weight rooted cycle bases: order edges by
//! the weight of their shortest rooted cycle, then repeatedly adopt the
//! shortest rooted cycle through a not-yet-covered edge. With tie-breaking
//! that simulates an unambiguous weighting, the adopted cycles' new edges
//! form the ears of an open ear decomposition and the basis is optimal.

use thiserror::Error;

use crate::connectivity::two_core;
use crate::graph::{Cycle, CycleBasis, EdgeId, RootedGraph, VertexId, Weight};
use crate::rooted_basis::{has_rooted_cycle_basis, NoRootedBasis};
use crate::suurballe::all_edges_shortest_rooted_cycles;
use crate::tiebreak::{tb_compare, tb_from_sorted, TieBreakContext, TieBreakHandle, TieBreakMode};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MinBasisError {
    #[error(transparent)]
    NoRootedBasis(#[from] NoRootedBasis),
    #[error(
        "new edges of greedy cycle {cycle_index} do not form a single ear; \
         tie-breaking failed to simulate an unambiguous weighting"
    )]
    InternalEarViolation { cycle_index: usize },
    #[error("greedy covered every edge with {got} cycles but the cycle space has dimension {expected}")]
    IncompleteBasis { got: usize, expected: usize },
}

/// How equal-weight candidate cycles are ranked during greedy selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionRule {
    /// Weight, then the perturbation order. The perturbation alone already
    /// yields a consistent unambiguous weighting.
    #[default]
    ShortestOnly,
    /// Weight, then fewest edges outside the current ambit, then the
    /// perturbation order. Documented alternative: some presentations of the
    /// greedy argument break ties toward cycles with fewer new edges.
    FewNewEdgesFirst,
}

#[derive(Debug, Clone)]
pub struct MinBasisOptions {
    pub mode: TieBreakMode,
    pub selection: SelectionRule,
    /// Fresh-seed retries after an ear violation (randomized mode only).
    pub max_retries: u32,
}

impl Default for MinBasisOptions {
    fn default() -> Self {
        MinBasisOptions {
            mode: TieBreakMode::Deterministic,
            selection: SelectionRule::ShortestOnly,
            max_retries: 8,
        }
    }
}

/// Successful run: the basis plus the audit trail the proofs talk about.
#[derive(Debug, Clone)]
pub struct MinBasisRun {
    pub basis: CycleBasis,
    /// Per adopted cycle, its new edges in original edge ids; together with
    /// the root edge these are the ears of an open ear decomposition.
    pub ear_paths: Vec<Vec<EdgeId>>,
    /// Number of fresh-seed retries that were needed (randomized mode).
    pub retries: u32,
    /// Equal-salt-sum comparisons observed (randomized mode).
    pub collisions: u64,
}

/// In-progress greedy cycle sequence over the 2-core of the input.
pub struct GreedyState {
    core: RootedGraph,
    orig_edge: Vec<EdgeId>,
    cycles_per_edge: Vec<Cycle>,
    handles: Vec<TieBreakHandle>,
    selection: SelectionRule,
    covered: Vec<bool>,
    uncovered_count: usize,
    ambit_vertex: Vec<bool>,
    /// Adopted cycles in original edge ids, greedy order.
    pub chosen: Vec<Cycle>,
    pub witness_edges: Vec<Option<EdgeId>>,
    pub ear_paths: Vec<Vec<EdgeId>>,
    last_weight: Weight,
}

impl GreedyState {
    /// Validates existence, restricts to the 2-core, and precomputes every
    /// edge's shortest rooted cycle. The per-edge shortest-cycle weight is a
    /// property of the whole graph, so it never needs recomputation as the
    /// greedy sequence grows.
    pub fn new(
        rg: &RootedGraph,
        selection: SelectionRule,
        ctx: &mut TieBreakContext,
    ) -> Result<Self, MinBasisError> {
        has_rooted_cycle_basis(rg)?;
        let core_map = two_core(&rg.graph);
        let root = core_map.core_edge[rg.root_edge].expect("root verified in 2-core");
        let core = RootedGraph::new(core_map.graph, root).expect("core root is not a self-loop");
        let m = core.graph.edge_count();
        let cycles: Vec<Cycle> = all_edges_shortest_rooted_cycles(&core, ctx)
            .into_iter()
            .map(|c| c.expect("every edge of the biconnected core lies on a rooted cycle"))
            .collect();
        let handles = cycles
            .iter()
            .map(|c| tb_from_sorted(ctx, c.edge_ids()).expect("cycle ids sorted"))
            .collect();
        let mut covered = vec![false; m];
        covered[root] = true;
        let (t1, t2) = core.root_endpoints();
        let mut ambit_vertex = vec![false; core.graph.vertex_count()];
        ambit_vertex[t1] = true;
        ambit_vertex[t2] = true;
        Ok(GreedyState {
            orig_edge: core_map.orig_edge,
            cycles_per_edge: cycles,
            handles,
            selection,
            covered,
            uncovered_count: m - 1,
            ambit_vertex,
            core,
            chosen: Vec::new(),
            witness_edges: Vec::new(),
            ear_paths: Vec::new(),
            last_weight: 0,
        })
    }

    pub fn uncovered_remaining(&self) -> usize {
        self.uncovered_count
    }

    pub fn expected_cycle_count(&self) -> usize {
        self.core.graph.edge_count() - self.core.graph.vertex_count() + 1
    }

    fn new_edge_count(&self, f: EdgeId) -> usize {
        self.cycles_per_edge[f].edge_ids().iter().filter(|&&e| !self.covered[e]).count()
    }
}

/// Adopts the minimum-weight rooted cycle containing at least one uncovered
/// edge, verifies its new edges form a single ear, and updates the state.
pub fn greedy_step(
    state: &mut GreedyState,
    ctx: &TieBreakContext,
) -> Result<Cycle, MinBasisError> {
    assert!(state.uncovered_count > 0, "no uncovered edges remain");
    let m = state.core.graph.edge_count();
    // The candidate for uncovered edge f is its precomputed shortest rooted
    // cycle; minimizing over f finds the global minimum among rooted cycles
    // with a new edge (any such cycle through f weighs at least as much as
    // the f-candidate).
    let mut best: Option<EdgeId> = None;
    for f in 0..m {
        if state.covered[f] {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => {
                let (cf, cb) = (&state.cycles_per_edge[f], &state.cycles_per_edge[b]);
                let mut ord = cf.weight().cmp(&cb.weight());
                if ord == std::cmp::Ordering::Equal
                    && state.selection == SelectionRule::FewNewEdgesFirst
                {
                    ord = state.new_edge_count(f).cmp(&state.new_edge_count(b));
                }
                if ord == std::cmp::Ordering::Equal {
                    ord = tb_compare(
                        ctx,
                        cf.weight(),
                        state.handles[f],
                        cb.weight(),
                        state.handles[b],
                    );
                }
                ord == std::cmp::Ordering::Less
            }
        };
        if better {
            best = Some(f);
        }
    }
    let f = best.expect("an uncovered edge exists");
    let cycle = state.cycles_per_edge[f].clone();
    let index = state.chosen.len();

    // Greedy weights are non-decreasing: the per-edge weights are static and
    // the uncovered set only shrinks.
    debug_assert!(cycle.weight() >= state.last_weight);
    state.last_weight = cycle.weight();

    // The cycle's new edges must form one simple path whose endpoints lie in
    // the current ambit and whose interior vertices are new.
    let new_edges: Vec<EdgeId> =
        cycle.edge_ids().iter().copied().filter(|&e| !state.covered[e]).collect();
    debug_assert!(!new_edges.is_empty());
    check_single_ear(&state.core, &new_edges, &state.ambit_vertex)
        .map_err(|_| MinBasisError::InternalEarViolation { cycle_index: index })?;

    for &e in &new_edges {
        state.covered[e] = true;
        let (u, v) = state.core.graph.endpoints(e);
        state.ambit_vertex[u] = true;
        state.ambit_vertex[v] = true;
    }
    state.uncovered_count -= new_edges.len();

    let mapped = map_cycle(&state.orig_edge, &cycle);
    state.witness_edges.push(Some(state.orig_edge[new_edges[0]]));
    state.ear_paths.push(new_edges.iter().map(|&e| state.orig_edge[e]).collect());
    state.chosen.push(mapped.clone());
    Ok(mapped)
}

fn map_cycle(orig_edge: &[EdgeId], cycle: &Cycle) -> Cycle {
    let mut ids: Vec<EdgeId> = cycle.edge_ids().iter().map(|&e| orig_edge[e]).collect();
    ids.sort_unstable();
    Cycle::from_parts_unchecked(ids, cycle.weight())
}

struct NotAnEar;

fn check_single_ear(
    core: &RootedGraph,
    new_edges: &[EdgeId],
    ambit_vertex: &[bool],
) -> Result<(), NotAnEar> {
    let g = &core.graph;
    let mut degree: std::collections::HashMap<VertexId, usize> = std::collections::HashMap::new();
    for &e in new_edges {
        let (u, v) = g.endpoints(e);
        if u == v {
            return Err(NotAnEar);
        }
        *degree.entry(u).or_insert(0) += 1;
        *degree.entry(v).or_insert(0) += 1;
    }
    let mut endpoints = Vec::new();
    for (&v, &d) in &degree {
        match d {
            1 => endpoints.push(v),
            2 => {
                if ambit_vertex[v] {
                    // Interior vertices of the ear must be new.
                    return Err(NotAnEar);
                }
            }
            _ => return Err(NotAnEar),
        }
    }
    if endpoints.len() != 2 || endpoints.iter().any(|&v| !ambit_vertex[v]) {
        return Err(NotAnEar);
    }
    // Connectivity of the new-edge subgraph: walk from one endpoint.
    let mut used = vec![false; new_edges.len()];
    let mut cur = endpoints[0];
    for _ in 0..new_edges.len() {
        let next = new_edges.iter().enumerate().find(|&(i, &e)| {
            !used[i] && (g.endpoints(e).0 == cur || g.endpoints(e).1 == cur)
        });
        match next {
            Some((i, &e)) => {
                used[i] = true;
                cur = g.other_endpoint(e, cur);
            }
            None => return Err(NotAnEar),
        }
    }
    if cur != endpoints[1] {
        return Err(NotAnEar);
    }
    Ok(())
}

/// Runs the full greedy sequence once with the given context.
fn run_once(
    rg: &RootedGraph,
    selection: SelectionRule,
    ctx: &mut TieBreakContext,
) -> Result<(CycleBasis, Vec<Vec<EdgeId>>), MinBasisError> {
    let mut state = GreedyState::new(rg, selection, ctx)?;
    let expected = state.expected_cycle_count();
    while state.uncovered_remaining() > 0 {
        greedy_step(&mut state, ctx)?;
    }
    if state.chosen.len() != expected {
        return Err(MinBasisError::IncompleteBasis { got: state.chosen.len(), expected });
    }
    Ok((
        CycleBasis { cycles: state.chosen, witness_edges: state.witness_edges },
        state.ear_paths,
    ))
}

/// Minimum-weight rooted cycle basis. Randomized mode retries with a fresh
/// seed when tie-break collisions break the ear structure; deterministic
/// mode never needs retries.
pub fn min_weight_rooted_basis_with(
    rg: &RootedGraph,
    opts: &MinBasisOptions,
) -> Result<MinBasisRun, MinBasisError> {
    let index_count = rg.graph.edge_count() + 1;
    let mut attempt = 0u32;
    loop {
        let mode = match opts.mode {
            TieBreakMode::Randomized { seed } => TieBreakMode::Randomized {
                seed: seed.wrapping_add(u64::from(attempt).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            },
            other => other,
        };
        let mut ctx = TieBreakContext::new(mode, index_count);
        match run_once(rg, opts.selection, &mut ctx) {
            Ok((basis, ear_paths)) => {
                return Ok(MinBasisRun {
                    basis,
                    ear_paths,
                    retries: attempt,
                    collisions: ctx.collision_count(),
                })
            }
            Err(err @ (MinBasisError::InternalEarViolation { .. }
            | MinBasisError::IncompleteBasis { .. }))
                if matches!(opts.mode, TieBreakMode::Randomized { .. })
                    && attempt < opts.max_retries =>
            {
                let _ = err;
                attempt += 1;
            }
            Err(err) => return Err(err),
        }
    }
}

/// Convenience wrapper with deterministic tie-breaking.
pub fn min_weight_rooted_basis(rg: &RootedGraph) -> Result<CycleBasis, MinBasisError> {
    min_weight_rooted_basis_with(rg, &MinBasisOptions::default()).map(|run| run.basis)
}
