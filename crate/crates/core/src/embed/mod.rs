//! The decision engine: sound obstructions (No), verified certificates
//! (Yes), honest Unknown.
//!
//! `decide` never returns Yes without a certificate that passes
//! `verify_certificate`, and never returns No without a theorem-backed
//! witness. When neither side lands within budget the verdict is Unknown —
//! whether `Λ ≤ Γ^e` characterizes embeddability in general is open, so a
//! failed search proves nothing.

mod analyze;
mod canonical;
mod cycles;
mod forest;

pub use analyze::{analyze_generator_map, GeneratorAnalysis, GeneratorMapReport};
pub use canonical::{canonical_certificate, CanonicalKind};
pub use cycles::cycle_in_cycle;
pub use forest::embed_forest_in_p4e;

use crate::error::{Error, Result};
use crate::ext::{
    ext_adjacent, ext_vertex, find_induced_in_extension, BudgetReport, ExtSearch, ExtVertex,
    SearchBudget,
};
use crate::graph::{
    self, clique_number, complete_bipartite_params, find_edge_plus_point, find_hole,
    find_induced_embedding, find_induced_p4, find_induced_square, find_odd_cycle, Graph,
};
use crate::words::{normalize, Letter, NormalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ObstructionKind {
    CliqueRank,
    KambitesSquare,
    P4Theorem,
    ForestTarget,
    BipartiteTarget,
    TriangleFreeCycle,
    CompleteBipartiteClass,
    CycleArithmetic,
    ChromaticTriangleFree,
    EdgePlusPoint,
    /// Target is a disjoint union of cliques (P3-free), so its group is a
    /// free product of free-abelian groups; the source must be one too.
    DisjointCliquesTarget,
}

/// A sound reason the embedding cannot exist, with a witness checkable by
/// the graph layer.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub detail: String,
    /// Vertex labels backing the claim (in the source unless stated
    /// otherwise in `detail`).
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateNote {
    Search,
    ForestP4,
    CycleCellulation,
    StarDouble,
    Cocontraction,
    Subgraph,
    ClassRule,
}

/// An induced embedding of the source into the extension graph of the
/// target: the checkable hypothesis that yields the group embedding.
#[derive(Debug, Clone)]
pub struct EmbeddingCertificate {
    pub source: Graph,
    pub target: Graph,
    /// Image of each source vertex, aligned with the source vertex order.
    pub assignment: Vec<ExtVertex>,
    pub note: CertificateNote,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Yes(EmbeddingCertificate),
    No(Obstruction),
    Unknown(BudgetReport),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }
}

fn labels(g: &Graph, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&i| g.label(i).to_string()).collect()
}

/// Recomputes a certificate from scratch: assignment covers the source,
/// images are canonical vertices over the target, the map is injective, and
/// every pair matches adjacency through `ext_adjacent`.
pub fn verify_certificate(cert: &EmbeddingCertificate) -> Result<bool> {
    let lam = &cert.source;
    let gam = &cert.target;
    if cert.assignment.len() != lam.n() {
        return Ok(false);
    }
    for img in &cert.assignment {
        img.rep().check_graph(gam)?;
        if img.base() >= gam.n() {
            return Err(Error::InvalidCertificate(format!(
                "image vertex #{} outside target",
                img.base()
            )));
        }
        let canonical = ext_vertex(gam, img.base(), img.rep())?;
        if &canonical != img {
            return Ok(false);
        }
    }
    for i in 0..lam.n() {
        for j in i + 1..lam.n() {
            if cert.assignment[i] == cert.assignment[j] {
                return Ok(false);
            }
            let adj = ext_adjacent(gam, &cert.assignment[i], &cert.assignment[j]);
            if adj != lam.adjacent(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn verified(cert: EmbeddingCertificate) -> Result<Verdict> {
    if verify_certificate(&cert)? {
        Ok(Verdict::Yes(cert))
    } else {
        Err(Error::InvalidCertificate(format!(
            "constructed {:?} certificate failed verification",
            cert.note
        )))
    }
}

/// Certificate whose images are the identity conjugates of an induced copy.
pub fn identity_certificate(
    lambda: &Graph,
    gamma: &Graph,
    image: &[usize],
    note: CertificateNote,
) -> Result<EmbeddingCertificate> {
    let assignment = image
        .iter()
        .map(|&v| ext_vertex(gamma, v, &NormalForm::identity(gamma)))
        .collect::<Result<Vec<_>>>()?;
    Ok(EmbeddingCertificate {
        source: lambda.clone(),
        target: gamma.clone(),
        assignment,
        note,
    })
}

/// Transports a certificate over an induced subgraph of `gamma` (vertex i
/// of the inner graph sits at `inner_to_gamma[i]`) to a certificate over
/// `gamma`; extension graphs respect induced subgraphs.
pub fn transport_certificate(
    cert: &EmbeddingCertificate,
    gamma: &Graph,
    inner_to_gamma: &[usize],
) -> Result<EmbeddingCertificate> {
    let assignment = cert
        .assignment
        .iter()
        .map(|img| {
            let base = inner_to_gamma[img.base()];
            let word: Vec<Letter> = img
                .rep()
                .letters()
                .iter()
                .map(|l| Letter::new(inner_to_gamma[l.vertex], l.inverse))
                .collect();
            let rep = normalize(gamma, &word)?;
            ext_vertex(gamma, base, &rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EmbeddingCertificate {
        source: cert.source.clone(),
        target: gamma.clone(),
        assignment,
        note: cert.note,
    })
}

fn min_hole_length(g: &Graph) -> Option<usize> {
    if find_hole(g).is_none() {
        return None;
    }
    (5..=g.n()).find(|&m| !graph::induced_cycles_of_length(g, m).is_empty())
}

/// Vertices of a cycle graph in cyclic order, when `g` is one.
pub fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().unwrap();
        let next = g.neighbors(cur).find(|&w| w != prev).unwrap();
        prev = cur;
        order.push(next);
    }
    Some(order)
}

pub(crate) fn p3_witness(g: &Graph) -> Option<[usize; 3]> {
    for c in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(c).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if !g.adjacent(x, y) {
                    return Some([x, c, y]);
                }
            }
        }
    }
    None
}

/// First applicable sound obstruction. Not a decider: `None` says nothing.
pub fn obstruction_scan(lambda: &Graph, gamma: &Graph) -> Option<Obstruction> {
    let lam_clique = graph::max_clique(lambda);
    if lam_clique.len() > clique_number(gamma) {
        return Some(Obstruction {
            kind: ObstructionKind::CliqueRank,
            detail: format!(
                "source has a {}-clique; the largest clique of the target has {} vertices, and \
                 free-abelian rank cannot grow",
                lam_clique.len(),
                clique_number(gamma)
            ),
            witness: labels(lambda, &lam_clique),
        });
    }
    if graph::is_forest(gamma) && !graph::is_forest(lambda) {
        let cycle = graph::find_cycle(lambda).expect("non-forest has a cycle");
        return Some(Obstruction {
            kind: ObstructionKind::ForestTarget,
            detail: "groups on forests only contain groups on forests; the source has a cycle"
                .into(),
            witness: labels(lambda, &cycle),
        });
    }
    if let (Some(lam_order), Some(gam_order)) = (cycle_order(lambda), cycle_order(gamma)) {
        let (m, n) = (lam_order.len(), gam_order.len());
        // long cycles only; short ones are covered by the clique, square
        // and chromatic obstructions below
        if m >= 5 && n >= 5 && !cycles::cycle_arith_ok(m, n) {
            return Some(Obstruction {
                kind: ObstructionKind::CycleArithmetic,
                detail: format!(
                    "C{m} embeds in the extension graph of C{n} only when m = n + k(n-4), k >= 0"
                ),
                witness: vec![],
            });
        }
    }
    if graph::bipartition(gamma).is_some() && graph::bipartition(lambda).is_none() {
        let odd = find_odd_cycle(lambda).expect("non-bipartite has an odd cycle");
        return Some(Obstruction {
            kind: ObstructionKind::BipartiteTarget,
            detail: "bipartite targets only contain groups on bipartite graphs".into(),
            witness: labels(lambda, &odd),
        });
    }
    if graph::is_triangle_free(gamma) {
        let chi_l = graph::chromatic_number(lambda);
        let chi_g = graph::chromatic_number(gamma);
        if chi_l > chi_g {
            return Some(Obstruction {
                kind: ObstructionKind::ChromaticTriangleFree,
                detail: format!(
                    "target is triangle-free with chromatic number {chi_g}, equal to that of its \
                     extension graph; the source needs {chi_l} colors"
                ),
                witness: vec![],
            });
        }
    }
    if let Some(sq) = find_induced_square(lambda) {
        if find_induced_square(gamma).is_none() {
            return Some(Obstruction {
                kind: ObstructionKind::KambitesSquare,
                detail: "source contains an induced square but the target is square-free".into(),
                witness: labels(lambda, &sq),
            });
        }
    }
    if let Some(p4) = find_induced_p4(lambda) {
        if find_induced_p4(gamma).is_none() {
            return Some(Obstruction {
                kind: ObstructionKind::P4Theorem,
                detail: "source contains an induced P4 but the target is P4-free".into(),
                witness: labels(lambda, &p4),
            });
        }
    }
    if let Some(ep) = find_edge_plus_point(lambda) {
        if find_edge_plus_point(gamma).is_none() {
            return Some(Obstruction {
                kind: ObstructionKind::EdgePlusPoint,
                detail: "source contains an induced edge-plus-point (a Z * Z^2) but the target \
                         does not"
                    .into(),
                witness: labels(lambda, &ep),
            });
        }
    }
    if graph::is_triangle_free(gamma) {
        if let Some(l) = min_hole_length(lambda) {
            let gamma_min = min_hole_length(gamma);
            if gamma_min.is_none_or(|gm| gm > l) {
                let hole = graph::induced_cycles_of_length(lambda, l)
                    .into_iter()
                    .next()
                    .expect("hole length came from enumeration");
                return Some(Obstruction {
                    kind: ObstructionKind::TriangleFreeCycle,
                    detail: format!(
                        "source contains an induced C{l}; a triangle-free target must then \
                         contain some C_m with 5 <= m <= {l}, but it has none"
                    ),
                    witness: labels(lambda, &hole),
                });
            }
        }
    }
    if let Some((m, n)) = complete_bipartite_params(gamma) {
        if n >= 1 {
            if let Some(bad) = complete_bipartite_violation(lambda, m, n) {
                return Some(bad);
            }
        }
    }
    None
}

/// Shape test for complete bipartite targets K_{m,n} (m >= n >= 1).
fn complete_bipartite_violation(lambda: &Graph, m: usize, n: usize) -> Option<Obstruction> {
    let shape = complete_bipartite_params(lambda);
    let admissible = match shape {
        Some((p, q)) => {
            if n >= 2 {
                true // K_{p,q} for any p,q >= 0
            } else if m >= 2 {
                // K_{1,m} star target: source must be a star or discrete
                q <= 1
            } else {
                // K_{1,1}: a vertex or an edge
                p <= 1 && q <= 1
            }
        }
        None => false,
    };
    if admissible {
        return None;
    }
    let witness = if let Some(p4) = find_induced_p4(lambda) {
        labels(lambda, &p4)
    } else if let Some(t) = graph::find_triangle(lambda) {
        labels(lambda, &t)
    } else if let Some(ep) = find_edge_plus_point(lambda) {
        labels(lambda, &ep)
    } else {
        vec![]
    };
    Some(Obstruction {
        kind: ObstructionKind::CompleteBipartiteClass,
        detail: format!(
            "target is K_{{{m},{n}}}; its subgroups are exactly the groups on admissible \
             complete bipartite graphs, and the source is not of that shape"
        ),
        witness,
    })
}

/// Decision for P3-free targets (disjoint unions of cliques): the target
/// group is a free product of free-abelian groups.
fn disjoint_cliques_decide(lambda: &Graph, gamma: &Graph) -> Result<Verdict> {
    if let Some(p3) = p3_witness(lambda) {
        return Ok(Verdict::No(Obstruction {
            kind: ObstructionKind::DisjointCliquesTarget,
            detail: "target is a disjoint union of cliques, so its group is a free product of \
                     free-abelian groups; the source contains an induced P3 and is not one"
                .into(),
            witness: labels(lambda, &p3),
        }));
    }
    if gamma.is_connected() {
        // free-abelian target; an induced copy was already ruled out
        let witness = (0..lambda.n())
            .flat_map(|i| ((i + 1)..lambda.n()).map(move |j| (i, j)))
            .find(|&(i, j)| !lambda.adjacent(i, j))
            .map(|(i, j)| labels(lambda, &[i, j]))
            .unwrap_or_default();
        return Ok(Verdict::No(Obstruction {
            kind: ObstructionKind::DisjointCliquesTarget,
            detail: "target is complete, so its group is free abelian; the source group is not \
                     an abelian group of admissible rank"
                .into(),
            witness,
        }));
    }
    // place each source clique in a translated copy of a maximum clique
    let k = graph::max_clique(gamma);
    let comps = gamma.connected_components();
    let clique_comp = comps
        .iter()
        .position(|c| c.contains(&k[0]))
        .expect("clique lives in a component");
    let other = comps
        .iter()
        .enumerate()
        .find(|(i, _)| *i != clique_comp)
        .map(|(_, c)| c[0])
        .expect("target is disconnected");
    let mut assignment = vec![None; lambda.n()];
    let conj_letter = crate::words::letter_word(gamma, other, false);
    for (ci, comp) in lambda.connected_components().into_iter().enumerate() {
        let translate = crate::words::power(gamma, &conj_letter, ci as i64);
        for (slot, &v) in comp.iter().enumerate() {
            assignment[v] = Some(ext_vertex(gamma, k[slot], &translate)?);
        }
    }
    let cert = EmbeddingCertificate {
        source: lambda.clone(),
        target: gamma.clone(),
        assignment: assignment.into_iter().map(Option::unwrap).collect(),
        note: CertificateNote::ClassRule,
    };
    verified(cert)
}

/// Yes-side construction for complete bipartite targets; assumes the shape
/// test passed.
fn complete_bipartite_certificate(lambda: &Graph, gamma: &Graph, n: usize) -> Result<Verdict> {
    let (big, small) = bipartite_sides(gamma);
    let (s1, s2) = (big[0], big[1]);
    let mut assignment = vec![None; lambda.n()];
    let (lam_a, lam_b) = bipartite_sides(lambda);
    let conj1 = crate::words::letter_word(gamma, s2, false);
    for (i, &v) in lam_a.iter().enumerate() {
        let w = crate::words::power(gamma, &conj1, i as i64);
        assignment[v] = Some(ext_vertex(gamma, s1, &w)?);
    }
    if !lam_b.is_empty() {
        if n >= 2 {
            let (t1, t2) = (small[0], small[1]);
            let conj2 = crate::words::letter_word(gamma, t2, false);
            for (j, &v) in lam_b.iter().enumerate() {
                let w = crate::words::power(gamma, &conj2, j as i64);
                assignment[v] = Some(ext_vertex(gamma, t1, &w)?);
            }
        } else {
            // star target: the smaller source side is its single center
            debug_assert!(lam_b.len() <= 1);
            for &v in &lam_b {
                assignment[v] = Some(ext_vertex(gamma, small[0], &NormalForm::identity(gamma))?);
            }
        }
    }
    let cert = EmbeddingCertificate {
        source: lambda.clone(),
        target: gamma.clone(),
        assignment: assignment.into_iter().map(Option::unwrap).collect(),
        note: CertificateNote::ClassRule,
    };
    verified(cert)
}

/// Sides of a complete bipartite graph, larger first; discrete graphs have
/// everything on one side.
fn bipartite_sides(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    if g.edge_count() == 0 {
        return ((0..g.n()).collect(), vec![]);
    }
    let comps = crate::graph::complement(g).connected_components();
    debug_assert_eq!(comps.len(), 2);
    let (a, b) = (comps[0].clone(), comps[1].clone());
    if a.len() >= b.len() {
        (a, b)
    } else {
        (b, a)
    }
}

/// The decision pipeline.
pub fn decide(lambda: &Graph, gamma: &Graph, budget: &SearchBudget) -> Result<Verdict> {
    if lambda.n() == 0 || gamma.n() == 0 {
        return Err(Error::EmptyInput("decide needs nonempty graphs".into()));
    }
    // (1) induced subgraph: identity certificate
    if let Some(image) = find_induced_embedding(lambda, gamma, budget.node_budget)? {
        let cert = identity_certificate(lambda, gamma, &image, CertificateNote::Subgraph)?;
        return verified(cert);
    }
    // (2) sound obstructions
    if let Some(obs) = obstruction_scan(lambda, gamma) {
        return Ok(Verdict::No(obs));
    }
    // (3) class-specific complete decisions
    if p3_witness(gamma).is_none() {
        return disjoint_cliques_decide(lambda, gamma);
    }
    if let Some((_, n)) = complete_bipartite_params(gamma) {
        if n >= 1 {
            // the scan's shape test passed, so a certificate exists
            return complete_bipartite_certificate(lambda, gamma, n);
        }
    }
    if graph::is_forest(lambda) {
        return forest::forest_decide(lambda, gamma, budget);
    }
    if let (Some(lam_order), Some(gam_order)) = (cycle_order(lambda), cycle_order(gamma)) {
        // arithmetic obstructions already fired in the scan; whatever
        // reaches here is a genuine cellulation case
        return cycles::cycle_certificate(lambda, &lam_order, gamma, &gam_order);
    }
    // (4) certificate search in the extension graph
    match find_induced_in_extension(lambda, gamma, budget)? {
        ExtSearch::Found(assignment) => {
            let cert = EmbeddingCertificate {
                source: lambda.clone(),
                target: gamma.clone(),
                assignment,
                note: CertificateNote::Search,
            };
            verified(cert)
        }
        // (5) honest unknown
        ExtSearch::NotFoundWithinBudget(report) => Ok(Verdict::Unknown(report)),
    }
}

#[cfg(test)]
mod tests;
