//! Text formats: the GraphFile edge-list format and the basis listing
//! emitted by `basis`/`minbasis` and read back by `verify`.
//!
//! GraphFile:
//! ```text
//! n m root_index
//! u v w        (m lines, one per edge, ids assigned in order)
//! rot:         (optional embedding section)
//! e e e ...    (n lines: cyclic edge-id order around each vertex)
//! ```
//! Blank lines and lines starting with `#` are ignored everywhere.

use rooted_cycles::graph::{Cycle, CycleBasis, EdgeId, Graph, RootedGraph};

/// Parsed graph plus the optional rotation system from a `rot:` section.
pub struct GraphFile {
    pub rooted: RootedGraph,
    pub rotations: Option<Vec<Vec<EdgeId>>>,
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, String> {
    let mut lines = meaningful_lines(text);
    let header = lines.next().ok_or("empty graph file")?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad header token {t:?}")))
        .collect::<Result<_, _>>()?;
    let [n, m, root] = head[..] else {
        return Err(format!("header must be `n m root_index`, got {header:?}"));
    };
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line = lines.next().ok_or_else(|| format!("missing edge line {i}"))?;
        let tok: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| format!("bad edge token {t:?} on line {line:?}")))
            .collect::<Result<_, _>>()?;
        let [u, v, w] = tok[..] else {
            return Err(format!("edge line must be `u v w`, got {line:?}"));
        };
        edges.push((u as usize, v as usize, w));
    }
    let graph = Graph::build(n, &edges).map_err(|e| e.to_string())?;
    if root >= m {
        return Err(format!("root_index {root} out of range for {m} edges"));
    }
    let rooted = RootedGraph::new(graph, root).map_err(|e| e.to_string())?;
    let rotations = match lines.next() {
        None => None,
        Some("rot:") => {
            let mut rot = Vec::with_capacity(n);
            for v in 0..n {
                let line =
                    lines.next().ok_or_else(|| format!("missing rotation line for vertex {v}"))?;
                let ids: Vec<EdgeId> = line
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| format!("bad rotation token {t:?}")))
                    .collect::<Result<_, _>>()?;
                rot.push(ids);
            }
            Some(rot)
        }
        Some(other) => return Err(format!("unexpected line {other:?} after edges")),
    };
    if lines.next().is_some() {
        return Err("trailing content after graph file".into());
    }
    Ok(GraphFile { rooted, rotations })
}

pub fn print_graph_file(rg: &RootedGraph, rotations: Option<&[Vec<EdgeId>]>) -> String {
    let g = &rg.graph;
    let mut out = format!("{} {} {}\n", g.vertex_count(), g.edge_count(), rg.root_edge);
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        out.push_str(&format!("{u} {v} {}\n", g.weight(e)));
    }
    if let Some(rot) = rotations {
        out.push_str("rot:\n");
        for ids in rot {
            let line: Vec<String> = ids.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// One cycle per line: sorted edge ids, `weight=<w>`, and `witness=<e>` when
/// the basis records one; then the summary line.
pub fn print_basis(rg: &RootedGraph, basis: &CycleBasis) -> String {
    let mut out = String::new();
    for (c, witness) in basis.cycles.iter().zip(&basis.witness_edges) {
        let ids: Vec<String> = c.edge_ids().iter().map(|e| e.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push_str(&format!(" weight={}", c.weight()));
        if let Some(w) = witness {
            out.push_str(&format!(" witness={w}"));
        }
        out.push('\n');
    }
    out.push_str(&summary_line(rg, basis));
    out.push('\n');
    out
}

pub fn summary_line(rg: &RootedGraph, basis: &CycleBasis) -> String {
    let rank = rooted_cycles::graph::gf2_rank(
        basis.cycles.iter().map(|c| c.edge_ids()),
        rg.graph.edge_count(),
    );
    let dim = rooted_cycles::graph::cycle_space_dimension(&rg.graph);
    format!(
        "cycles={} total_weight={} rank={rank} dim={dim}",
        basis.len(),
        basis.total_weight()
    )
}

/// Reads a basis listing back. The summary line, if present, is returned
/// verbatim for cross-checking.
pub fn parse_basis(rg: &RootedGraph, text: &str) -> Result<(CycleBasis, Option<String>), String> {
    let mut cycles = Vec::new();
    let mut witness_edges = Vec::new();
    let mut summary = None;
    for line in meaningful_lines(text) {
        if line.starts_with("cycles=") {
            summary = Some(line.to_string());
            continue;
        }
        let mut ids: Vec<EdgeId> = Vec::new();
        let mut weight: Option<u64> = None;
        let mut witness: Option<EdgeId> = None;
        for tok in line.split_whitespace() {
            if let Some(v) = tok.strip_prefix("weight=") {
                weight = Some(v.parse().map_err(|_| format!("bad weight {tok:?}"))?);
            } else if let Some(v) = tok.strip_prefix("witness=") {
                witness = Some(v.parse().map_err(|_| format!("bad witness {tok:?}"))?);
            } else {
                ids.push(tok.parse().map_err(|_| format!("bad edge id {tok:?}"))?);
            }
        }
        let cycle = Cycle::new(&rg.graph, ids).map_err(|e| e.to_string())?;
        if let Some(w) = weight {
            if w != cycle.weight() {
                return Err(format!(
                    "cycle on line {line:?} declares weight {w}, edges sum to {}",
                    cycle.weight()
                ));
            }
        }
        cycles.push(cycle);
        witness_edges.push(witness);
    }
    Ok((CycleBasis { cycles, witness_edges }, summary))
}
