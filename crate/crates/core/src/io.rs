//! File formats: JSON for every structured value, a whitespace edge-list
//! alternative for graphs, and write-only DOT export (on `MultiGraph`).
//!
//! All numbers that can be fractional are exact `p/q` strings; nothing is
//! ever printed through floating point. Serialization is deterministic, so
//! write -> read -> write is byte-identical.

use crate::cutlp::FractionalSolution;
use crate::extreme::{DirectedSolution, ExtremenessCertificate};
use crate::graph::{MultiEdge, MultiGraph};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::reductions::{PathCoverInstance, SetCoverInstance};
use num::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field '{field}': {message}")]
    Field { field: String, message: String },
    #[error("line {line}: expected 'u v cost [mult]', got '{content}'")]
    EdgeLine { line: usize, content: String },
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    CutLp(#[from] crate::cutlp::CutLpError),
    #[error(transparent)]
    Reduction(#[from] crate::reductions::ReductionError),
}

fn field_err(field: &str, message: impl ToString) -> FormatError {
    FormatError::Field {
        field: field.to_string(),
        message: message.to_string(),
    }
}

fn default_mult() -> u32 {
    1
}

fn is_default_mult(m: &u32) -> bool {
    *m == 1
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub cost: String,
    #[serde(default = "default_mult", skip_serializing_if = "is_default_mult")]
    pub mult: u32,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<EdgeJson>,
}

pub fn graph_to_json(g: &MultiGraph) -> GraphJson {
    GraphJson {
        n: g.vertex_count(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson {
                u: e.u.0,
                v: e.v.0,
                cost: format_rational(&e.cost),
                mult: e.mult,
            })
            .collect(),
    }
}

pub fn graph_from_json(j: &GraphJson) -> Result<MultiGraph, FormatError> {
    let mut edges = Vec::with_capacity(j.edges.len());
    for (i, e) in j.edges.iter().enumerate() {
        let cost = parse_rational(&e.cost)
            .map_err(|err| field_err(&format!("edges[{i}].cost"), err))?;
        edges.push(MultiEdge::new(e.u, e.v, cost, e.mult));
    }
    Ok(MultiGraph::new(j.n, edges)?)
}

pub fn graph_to_string(g: &MultiGraph) -> String {
    serde_json::to_string_pretty(&graph_to_json(g)).expect("graph serializes")
}

pub fn graph_from_str(s: &str) -> Result<MultiGraph, FormatError> {
    let j: GraphJson = serde_json::from_str(s)?;
    graph_from_json(&j)
}

/// Whitespace edge list: one `u v cost [mult]` per line; `#` starts a
/// comment. The vertex count is one past the largest endpoint.
pub fn graph_from_edge_list(s: &str) -> Result<MultiGraph, FormatError> {
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    for (lineno, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 && tokens.len() != 4 {
            return Err(FormatError::EdgeLine {
                line: lineno + 1,
                content: raw.to_string(),
            });
        }
        let parse_usize = |tok: &str, what: &str| -> Result<usize, FormatError> {
            tok.parse::<usize>()
                .map_err(|_| field_err(&format!("line {}: {what}", lineno + 1), "not an integer"))
        };
        let u = parse_usize(tokens[0], "u")?;
        let v = parse_usize(tokens[1], "v")?;
        let cost = parse_rational(tokens[2])
            .map_err(|e| field_err(&format!("line {}: cost", lineno + 1), e))?;
        let mult = if tokens.len() == 4 {
            parse_usize(tokens[3], "mult")? as u32
        } else {
            1
        };
        max_vertex = max_vertex.max(u).max(v);
        edges.push(MultiEdge::new(u, v, cost, mult));
    }
    Ok(MultiGraph::new(max_vertex + 1, edges)?)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SolutionEdgeJson {
    pub u: usize,
    pub v: usize,
    pub x: String,
}

/// A fractional solution together with its support graph as the ambient
/// edge set (costs are not part of the solution).
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SolutionJson {
    pub n: usize,
    pub edges: Vec<SolutionEdgeJson>,
}

pub fn solution_to_json(x: &FractionalSolution) -> SolutionJson {
    SolutionJson {
        n: x.graph().vertex_count(),
        edges: x
            .support()
            .map(|(idx, v)| {
                let e = x.graph().edge(idx);
                SolutionEdgeJson {
                    u: e.u.0,
                    v: e.v.0,
                    x: format_rational(v),
                }
            })
            .collect(),
    }
}

pub fn solution_from_json(j: &SolutionJson) -> Result<FractionalSolution, FormatError> {
    let mut edges = Vec::with_capacity(j.edges.len());
    let mut values = BTreeMap::new();
    for (i, e) in j.edges.iter().enumerate() {
        let x = parse_rational(&e.x)
            .map_err(|err| field_err(&format!("edges[{i}].x"), err))?;
        edges.push(MultiEdge::new(e.u, e.v, Rational::one(), 1));
        values.insert(i, x);
    }
    let graph = MultiGraph::new(j.n, edges)?;
    Ok(FractionalSolution::new(graph, values)?)
}

pub fn solution_to_string(x: &FractionalSolution) -> String {
    serde_json::to_string_pretty(&solution_to_json(x)).expect("solution serializes")
}

pub fn solution_from_str(s: &str) -> Result<FractionalSolution, FormatError> {
    let j: SolutionJson = serde_json::from_str(s)?;
    solution_from_json(&j)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ArcJson {
    pub from: usize,
    pub to: usize,
    pub y: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct DirectedSolutionJson {
    pub n: usize,
    pub arcs: Vec<ArcJson>,
}

pub fn directed_to_json(y: &DirectedSolution) -> DirectedSolutionJson {
    DirectedSolutionJson {
        n: y.vertex_count(),
        arcs: y
            .arcs()
            .map(|(from, to, w)| ArcJson {
                from,
                to,
                y: format_rational(w),
            })
            .collect(),
    }
}

pub fn directed_to_string(y: &DirectedSolution) -> String {
    serde_json::to_string_pretty(&directed_to_json(y)).expect("arcs serialize")
}

/// Certificate transcript for an extremeness check.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CertificateJson {
    pub k: u64,
    pub n: usize,
    pub support_edges: usize,
    pub rank: usize,
    pub tight_cut_count: usize,
    pub cuts_checked: usize,
    pub separation_clean: bool,
    /// Members of each set in the laminar tight family.
    pub tight_family: Vec<Vec<usize>>,
}

pub fn certificate_to_json(n: usize, c: &ExtremenessCertificate) -> CertificateJson {
    CertificateJson {
        k: c.k,
        n,
        support_edges: c.support_size,
        rank: c.rank,
        tight_cut_count: c.tight_cut_count,
        cuts_checked: c.cuts_checked,
        separation_clean: true,
        tight_family: c
            .tight_family
            .sets()
            .iter()
            .map(|s| s.members())
            .collect(),
    }
}

/// Transcript of a cutting-plane solve: the active cut rows and the basic
/// optimal solution, all rationals exact.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SolveCertificateJson {
    pub variant: String,
    pub k: u64,
    pub value: String,
    pub solution: SolutionJson,
    pub active_cuts: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PcotJson {
    pub tree: GraphJson,
    pub pairs: Vec<[usize; 2]>,
}

pub fn pcot_to_json(inst: &PathCoverInstance) -> PcotJson {
    PcotJson {
        tree: graph_to_json(inst.tree()),
        pairs: inst.pairs().iter().map(|&(u, v)| [u, v]).collect(),
    }
}

pub fn pcot_from_json(j: &PcotJson) -> Result<PathCoverInstance, FormatError> {
    let tree = graph_from_json(&j.tree)?;
    let pairs = j.pairs.iter().map(|p| (p[0], p[1])).collect();
    Ok(PathCoverInstance::new(tree, pairs)?)
}

pub fn pcot_to_string(inst: &PathCoverInstance) -> String {
    serde_json::to_string_pretty(&pcot_to_json(inst)).expect("instance serializes")
}

pub fn pcot_from_str(s: &str) -> Result<PathCoverInstance, FormatError> {
    let j: PcotJson = serde_json::from_str(s)?;
    pcot_from_json(&j)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SetCoverJson {
    pub ground: usize,
    pub triples: Vec<[usize; 3]>,
}

pub fn setcover_to_json(sc: &SetCoverInstance) -> SetCoverJson {
    SetCoverJson {
        ground: sc.ground(),
        triples: sc.triples().to_vec(),
    }
}

pub fn setcover_from_str(s: &str) -> Result<SetCoverInstance, FormatError> {
    let j: SetCoverJson = serde_json::from_str(s)?;
    Ok(SetCoverInstance::new(j.ground, j.triples)?)
}

pub fn setcover_to_string(sc: &SetCoverInstance) -> String {
    serde_json::to_string_pretty(&setcover_to_json(sc)).expect("instance serializes")
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MultisetItemJson {
    pub edge: usize,
    pub mult: u32,
}

/// Edge multiset over some graph's records, by index.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MultisetJson {
    pub items: Vec<MultisetItemJson>,
}

pub fn multiset_to_json(counts: &[u32]) -> MultisetJson {
    MultisetJson {
        items: counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(edge, &mult)| MultisetItemJson { edge, mult })
            .collect(),
    }
}

pub fn multiset_from_json(j: &MultisetJson, edge_count: usize) -> Result<Vec<u32>, FormatError> {
    let mut counts = vec![0u32; edge_count];
    for (i, item) in j.items.iter().enumerate() {
        if item.edge >= edge_count {
            return Err(field_err(
                &format!("items[{i}].edge"),
                format!("index {} out of range ({edge_count} records)", item.edge),
            ));
        }
        counts[item.edge] += item.mult;
    }
    Ok(counts)
}

pub fn multiset_to_string(counts: &[u32]) -> String {
    serde_json::to_string_pretty(&multiset_to_json(counts)).expect("multiset serializes")
}

pub fn multiset_from_str(s: &str, edge_count: usize) -> Result<Vec<u32>, FormatError> {
    let j: MultisetJson = serde_json::from_str(s)?;
    multiset_from_json(&j, edge_count)
}
