//! Shared formats: edge-list text, a DOT subset, and the JSON schemas for
//! approximations, certificates and verdicts.

use crate::embed::{CertificateNote, EmbeddingCertificate, Obstruction, Verdict};
use crate::error::{Error, Result};
use crate::ext::{ext_vertex_str, ExtGraphApprox, GrowStrategy, Provenance};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Edge-list text: first line `vertices: a b c ...`, one `a b` line per
/// edge.
pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("vertices: {}\n", g.labels().join(" "));
    for (a, b) in g.edge_labels() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let rest = header
        .strip_prefix("vertices:")
        .ok_or_else(|| Error::Parse("first line must start with `vertices:`".into()))?;
    let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if labels.is_empty() {
        return Err(Error::Parse("no vertices listed".into()));
    }
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("bad edge line `{line}`")));
        };
        edges.push((a.to_string(), b.to_string()));
    }
    let edge_refs: Vec<(&str, &str)> =
        edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::from_edges(labels, &edge_refs)
}

/// Undirected DOT without attributes; isolated vertices listed explicitly.
pub fn graph_to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  \"{}\";\n", g.label(v)));
        }
    }
    for (a, b) in g.edge_labels() {
        out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphData {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl From<&Graph> for GraphData {
    fn from(g: &Graph) -> Self {
        GraphData {
            vertices: g.labels().to_vec(),
            edges: g.edge_labels(),
        }
    }
}

impl GraphData {
    pub fn to_graph(&self) -> Result<Graph> {
        let refs: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Graph::from_edges(self.vertices.clone(), &refs)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ApproxJson {
    #[serde(rename = "type")]
    pub kind: String, // "approximation"
    pub base_graph: GraphData,
    pub provenance: ProvenanceJson,
    pub vertices: Vec<ExtVertexJson>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "strategy", rename_all = "snake_case")]
pub enum ProvenanceJson {
    Doubling { vertices: Vec<String> },
    Radius { r: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtVertexJson {
    pub base: String,
    pub rep: String,
}

pub fn approx_to_json(a: &ExtGraphApprox) -> ApproxJson {
    ApproxJson {
        kind: "approximation".into(),
        base_graph: GraphData::from(&a.base_graph),
        provenance: match &a.provenance {
            Provenance::Doubling(v) => ProvenanceJson::Doubling { vertices: v.clone() },
            Provenance::Radius(r) => ProvenanceJson::Radius { r: *r },
        },
        vertices: a
            .vertices
            .iter()
            .map(|v| ExtVertexJson {
                base: a.base_graph.label(v.base()).to_string(),
                rep: v.rep().render(&a.base_graph),
            })
            .collect(),
        edges: a.graph.edges(),
    }
}

/// Re-ingests an approximation JSON and recomputes its adjacency from
/// scratch; true when the stored edges match the coset criterion exactly.
pub fn verify_approx_json(a: &ApproxJson) -> Result<bool> {
    let base = a.base_graph.to_graph()?;
    let vertices = a
        .vertices
        .iter()
        .map(|v| {
            let canonical = ext_vertex_str(&base, &v.base, &v.rep)?;
            let given = crate::words::normalize_str(&base, &v.rep)?;
            if &given != canonical.rep() {
                return Ok(None); // stored rep was not canonical
            }
            Ok(Some(canonical))
        })
        .collect::<Result<Vec<_>>>()?;
    let Some(vertices) = vertices.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(false);
    };
    let mut want = std::collections::HashSet::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if crate::ext::ext_adjacent(&base, &vertices[i], &vertices[j]) {
                want.insert((i, j));
            }
        }
    }
    let got: std::collections::HashSet<(usize, usize)> = a
        .edges
        .iter()
        .map(|&(i, j)| (i.min(j), i.max(j)))
        .collect();
    Ok(want == got)
}

/// Rebuilds the approximation named by a provenance against a base graph.
pub fn regrow(base: &Graph, prov: &ProvenanceJson, budget: usize) -> Result<ExtGraphApprox> {
    let strategy = match prov {
        ProvenanceJson::Doubling { vertices } => GrowStrategy::Doubling(vertices.clone()),
        ProvenanceJson::Radius { r } => GrowStrategy::Radius(*r),
    };
    crate::ext::grow(base, strategy, budget)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "type")]
    pub kind: String, // "certificate"
    pub source: GraphData,
    pub target: GraphData,
    pub assignment: Vec<AssignmentEntry>,
    pub note: CertificateNote,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssignmentEntry {
    pub lambda_vertex: String,
    pub base: String,
    pub rep_word: String,
}

pub fn certificate_to_json(c: &EmbeddingCertificate) -> CertificateJson {
    CertificateJson {
        kind: "certificate".into(),
        source: GraphData::from(&c.source),
        target: GraphData::from(&c.target),
        assignment: c
            .assignment
            .iter()
            .enumerate()
            .map(|(i, v)| AssignmentEntry {
                lambda_vertex: c.source.label(i).to_string(),
                base: c.target.label(v.base()).to_string(),
                rep_word: v.rep().render(&c.target),
            })
            .collect(),
        note: c.note,
    }
}

pub fn certificate_from_json(j: &CertificateJson) -> Result<EmbeddingCertificate> {
    let source = j.source.to_graph()?;
    let target = j.target.to_graph()?;
    let mut assignment = vec![None; source.n()];
    for entry in &j.assignment {
        let lv = source.vertex(&entry.lambda_vertex)?;
        if assignment[lv].is_some() {
            return Err(Error::Parse(format!(
                "vertex `{}` assigned twice",
                entry.lambda_vertex
            )));
        }
        assignment[lv] = Some(ext_vertex_str(&target, &entry.base, &entry.rep_word)?);
    }
    let assignment = assignment
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Parse("assignment does not cover the source".into()))?;
    Ok(EmbeddingCertificate {
        source,
        target,
        assignment,
        note: j.note,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VerdictJson {
    Yes {
        certificate: CertificateJson,
    },
    No {
        obstruction: Obstruction,
    },
    Unknown {
        budget_report: crate::ext::BudgetReport,
    },
}

pub fn verdict_to_json(v: &Verdict) -> VerdictJson {
    match v {
        Verdict::Yes(c) => VerdictJson::Yes {
            certificate: certificate_to_json(c),
        },
        Verdict::No(o) => VerdictJson::No {
            obstruction: o.clone(),
        },
        Verdict::Unknown(r) => VerdictJson::Unknown {
            budget_report: r.clone(),
        },
    }
}
