//! Finite induced subgraphs of the extension graph Γ^e.
//!
//! A vertex of Γ^e is a conjugate `v^w`; it is stored canonically as the
//! base vertex plus the unique minimal representative of the coset
//! `⟨st(v)⟩·w`, so equality is syntactic. Adjacency is the coset criterion:
//! `a^x ~ b^y` iff `{a,b}` is an edge of Γ and `x·y^-1 ∈ ⟨st(a)⟩·⟨st(b)⟩`.

mod diagnostics;

pub use diagnostics::{diagnostics, BigonViolation, DiagnosticsReport, StarSeparationCheck};

use crate::error::{Error, Result};
use crate::graph::{find_induced_embedding, Graph};
use crate::words::{double_coset_member, inverse, max_head, mul, normalize_str, NormalForm};
use rayon::prelude::*;
use std::collections::HashMap;

/// A canonical conjugate vertex `base^rep` of Γ^e.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtVertex {
    base: usize,
    rep: NormalForm,
}

impl ExtVertex {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn rep(&self) -> &NormalForm {
        &self.rep
    }

    pub fn label(&self, g: &Graph) -> String {
        if self.rep.is_empty() {
            g.label(self.base).to_string()
        } else {
            format!("{}^({})", g.label(self.base), self.rep.render(g))
        }
    }
}

/// Canonicalizes `v^w`: the rep keeps no initial letter from `st(v)`.
pub fn ext_vertex(g: &Graph, v: usize, w: &NormalForm) -> Result<ExtVertex> {
    if v >= g.n() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    w.check_graph(g)?;
    let (_, rep) = max_head(g, w, &g.star(v));
    Ok(ExtVertex { base: v, rep })
}

pub fn ext_vertex_str(g: &Graph, v: &str, w: &str) -> Result<ExtVertex> {
    let base = g.vertex(v)?;
    let word = normalize_str(g, w)?;
    ext_vertex(g, base, &word)
}

/// Parses a label of the form `v` or `v^(word)` back into a vertex.
pub fn parse_ext_label(g: &Graph, label: &str) -> Result<ExtVertex> {
    if let Some((base, rest)) = label.split_once("^(") {
        let word = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("malformed vertex label `{label}`")))?;
        ext_vertex_str(g, base, word)
    } else {
        ext_vertex_str(g, label, "")
    }
}

/// The coset adjacency criterion. Irreflexive; vertices over the same base
/// are never adjacent.
pub fn ext_adjacent(g: &Graph, u: &ExtVertex, v: &ExtVertex) -> bool {
    if u == v || !g.adjacent(u.base, v.base) {
        return false;
    }
    let z = mul(g, &u.rep, &inverse(g, &v.rep));
    double_coset_member(g, &z, &g.star(u.base), &g.star(v.base))
}

/// Whether two vertices lie in a single conjugate copy of Γ, i.e. the cosets
/// `⟨st(u)⟩·rep_u` and `⟨st(v)⟩·rep_v` intersect.
pub fn same_conjugate_copy(g: &Graph, u: &ExtVertex, v: &ExtVertex) -> bool {
    let z = mul(g, &u.rep, &inverse(g, &v.rep));
    double_coset_member(g, &z, &g.star(u.base), &g.star(v.base))
}

/// Right action of A(Γ) on Γ^e: `v^w · g = v^(wg)`.
pub fn act(g: &Graph, u: &ExtVertex, w: &NormalForm) -> Result<ExtVertex> {
    w.check_graph(g)?;
    ext_vertex(g, u.base, &mul(g, &u.rep, w))
}

/// The natural retraction Γ^e → Γ.
pub fn retract(u: &ExtVertex) -> usize {
    u.base
}

/// The group element `rep^-1 · base · rep` a vertex stands for.
pub fn group_element(g: &Graph, u: &ExtVertex) -> NormalForm {
    let b = crate::words::letter_word(g, u.base, false);
    crate::words::conjugate(g, &b, &u.rep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowStrategy {
    /// Iterated star-doubling along the listed vertices (labels resolved
    /// against the approximation built so far).
    Doubling(Vec<String>),
    /// All canonical vertices with representative length at most r.
    Radius(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Doubling(Vec<String>),
    Radius(usize),
}

/// A finite induced subgraph of Γ^e with provenance.
#[derive(Clone, Debug)]
pub struct ExtGraphApprox {
    pub base_graph: Graph,
    pub vertices: Vec<ExtVertex>,
    /// Induced adjacency as a labeled graph (labels `v` / `v^(word)`).
    pub graph: Graph,
    pub provenance: Provenance,
}

impl ExtGraphApprox {
    pub fn vertex_index(&self, v: &ExtVertex) -> Option<usize> {
        self.vertices.iter().position(|u| u == v)
    }
}

fn fill_edges(g: &Graph, vertices: &[ExtVertex]) -> Graph {
    let labels: Vec<String> = vertices.iter().map(|v| v.label(g)).collect();
    let mut out = Graph::new(labels).expect("canonical vertices have unique labels");
    let n = vertices.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n).filter_map(move |j| ext_adjacent(g, &vertices[i], &vertices[j]).then_some((i, j)))
        })
        .collect();
    for (i, j) in edges {
        out.set_edge(i, j);
    }
    out
}

/// Grows a finite approximation of Γ^e. Exceeding `budget` vertices is an
/// error, never a silent truncation.
pub fn grow(gamma: &Graph, strategy: GrowStrategy, budget: usize) -> Result<ExtGraphApprox> {
    if gamma.n() == 0 {
        return Err(Error::EmptyInput("base graph".into()));
    }
    if budget < gamma.n() {
        return Err(Error::BudgetExceeded(format!(
            "budget {budget} below base graph size {}",
            gamma.n()
        )));
    }
    let vertices = match &strategy {
        GrowStrategy::Radius(r) => {
            let mut all: Vec<ExtVertex> = Vec::new();
            for v in 0..gamma.n() {
                let star = gamma.star(v);
                let identity = NormalForm::identity(gamma);
                let mut seen: HashMap<NormalForm, ()> = HashMap::from([(identity.clone(), ())]);
                let mut queue = vec![identity];
                let mut head = 0;
                while head < queue.len() {
                    let rep = queue[head].clone();
                    head += 1;
                    if rep.len() >= *r {
                        continue;
                    }
                    for vert in 0..gamma.n() {
                        for inv in [false, true] {
                            let l = crate::words::letter_word(gamma, vert, inv);
                            let next = mul(gamma, &rep, &l);
                            let (_, next) = max_head(gamma, &next, &star);
                            if next.len() <= *r && !seen.contains_key(&next) {
                                seen.insert(next.clone(), ());
                                queue.push(next);
                            }
                        }
                    }
                }
                for rep in queue {
                    all.push(ExtVertex { base: v, rep });
                    if all.len() > budget {
                        return Err(Error::BudgetExceeded(format!(
                            "radius-{r} approximation exceeds {budget} vertices"
                        )));
                    }
                }
            }
            all.sort_by(|a, b| {
                (a.base, a.rep.len(), a.rep.letters()).cmp(&(b.base, b.rep.len(), b.rep.letters()))
            });
            all
        }
        GrowStrategy::Doubling(picks) => {
            let mut vertices: Vec<ExtVertex> = (0..gamma.n())
                .map(|v| ExtVertex {
                    base: v,
                    rep: NormalForm::identity(gamma),
                })
                .collect();
            let mut index: HashMap<ExtVertex, usize> = vertices
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, v)| (v, i))
                .collect();
            for pick in picks {
                let t = parse_ext_label(gamma, pick)?;
                if !index.contains_key(&t) {
                    return Err(Error::UnknownVertex(pick.clone()));
                }
                let reflection = group_element(gamma, &t);
                let mut new_vertices = Vec::new();
                for u in &vertices {
                    let moved = act(gamma, u, &reflection)?;
                    if !index.contains_key(&moved) {
                        index.insert(moved.clone(), vertices.len() + new_vertices.len());
                        new_vertices.push(moved);
                    }
                }
                vertices.extend(new_vertices);
                if vertices.len() > budget {
                    return Err(Error::BudgetExceeded(format!(
                        "doubling sequence exceeds {budget} vertices"
                    )));
                }
            }
            vertices
        }
    };
    let graph = fill_edges(gamma, &vertices);
    Ok(ExtGraphApprox {
        base_graph: gamma.clone(),
        vertices,
        graph,
        provenance: match strategy {
            GrowStrategy::Doubling(p) => Provenance::Doubling(p),
            GrowStrategy::Radius(r) => Provenance::Radius(r),
        },
    })
}

/// Search budget for looking inside Γ^e.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_radius: usize,
    pub node_budget: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 1500,
            max_radius: 3,
            node_budget: 20_000_000,
        }
    }
}

#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct BudgetReport {
    pub strategies_tried: Vec<String>,
    pub max_vertices: usize,
    pub largest_approximation: usize,
    pub note: String,
}

/// Outcome of an induced-subgraph search inside Γ^e: absence within budget
/// proves nothing.
#[derive(Clone, Debug)]
pub enum ExtSearch {
    Found(Vec<ExtVertex>),
    NotFoundWithinBudget(BudgetReport),
}

/// Looks for an induced copy of `lambda` inside approximations of Γ^e of
/// growing radius.
pub fn find_induced_in_extension(
    lambda: &Graph,
    gamma: &Graph,
    budget: &SearchBudget,
) -> Result<ExtSearch> {
    let mut tried = Vec::new();
    let mut largest = 0;
    let mut prev_size = 0;
    for r in 1..=budget.max_radius {
        let approx = match grow(gamma, GrowStrategy::Radius(r), budget.max_vertices) {
            Ok(a) => a,
            Err(Error::BudgetExceeded(_)) => {
                tried.push(format!(
                    "radius {r}: would exceed {} vertices",
                    budget.max_vertices
                ));
                break;
            }
            Err(e) => return Err(e),
        };
        largest = largest.max(approx.vertices.len());
        match find_induced_embedding(lambda, &approx.graph, budget.node_budget) {
            Ok(Some(image)) => {
                let mapped = image
                    .into_iter()
                    .map(|i| approx.vertices[i].clone())
                    .collect();
                return Ok(ExtSearch::Found(mapped));
            }
            Ok(None) => {
                tried.push(format!(
                    "radius {r}: exhaustive search over {} vertices found nothing",
                    approx.vertices.len()
                ));
            }
            Err(Error::BudgetExceeded(_)) => {
                tried.push(format!("radius {r}: node budget exhausted"));
                break;
            }
            Err(e) => return Err(e),
        }
        if approx.vertices.len() == prev_size {
            // approximation stopped growing (complete base graph)
            break;
        }
        prev_size = approx.vertices.len();
    }
    Ok(ExtSearch::NotFoundWithinBudget(BudgetReport {
        strategies_tried: tried,
        max_vertices: budget.max_vertices,
        largest_approximation: largest,
        note: "absence within budget is not a refutation; the extension graph is infinite".into(),
    }))
}
