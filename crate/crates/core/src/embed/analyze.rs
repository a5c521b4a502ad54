//! Necessary-condition analyzer for candidate generator maps: pure factor
//! structure, per-generator cliques, and commutation shape. Not an
//! injectivity decider.

use crate::error::Result;
use crate::graph::Graph;
use crate::words::{
    commutation_graph, commutes, conjugate, pure_factor_decomposition, NormalForm,
};

#[derive(Debug, Clone)]
pub struct GeneratorAnalysis {
    pub vertex: String,
    /// Conjugated pure factors of the image, rendered.
    pub factors: Vec<String>,
    pub exponents: Vec<i64>,
    /// The factors of one image must pairwise commute (they form a clique
    /// in the extension graph); recomputed with the commutation oracle.
    pub clique_ok: bool,
}

#[derive(Debug, Clone)]
pub struct GeneratorMapReport {
    pub per_vertex: Vec<GeneratorAnalysis>,
    /// Commutation graph of all conjugated pure factors of all images.
    pub commutation_graph: Graph,
    /// Pairs of source vertices whose adjacency disagrees with the
    /// commutation of their images.
    pub violations: Vec<(String, String)>,
    pub respects_commutation: bool,
}

/// Analyzes a vertex-indexed family of candidate images in A(Γ).
pub fn analyze_generator_map(
    lambda: &Graph,
    gamma: &Graph,
    images: &[NormalForm],
) -> Result<GeneratorMapReport> {
    let mut per_vertex = Vec::with_capacity(lambda.n());
    let mut all_factors: Vec<NormalForm> = Vec::new();
    for v in 0..lambda.n() {
        images[v].check_graph(gamma)?;
        let (factors, exponents, clique_ok) = if images[v].is_empty() {
            (vec![], vec![], true)
        } else {
            let d = pure_factor_decomposition(gamma, &images[v])?;
            let conj: Vec<NormalForm> = d
                .factors
                .iter()
                .map(|(f, _)| conjugate(gamma, f, &d.conjugator))
                .collect();
            let mut ok = true;
            for i in 0..conj.len() {
                for j in i + 1..conj.len() {
                    ok &= commutes(gamma, &conj[i], &conj[j])?;
                }
            }
            all_factors.extend(conj.iter().cloned());
            (
                conj.iter().map(|w| w.render(gamma)).collect(),
                d.factors.iter().map(|&(_, e)| e).collect(),
                ok,
            )
        };
        per_vertex.push(GeneratorAnalysis {
            vertex: lambda.label(v).to_string(),
            factors,
            exponents,
            clique_ok,
        });
    }
    let commutation = if all_factors.is_empty() {
        Graph::new(vec!["empty"]).expect("fresh label")
    } else {
        commutation_graph(gamma, &all_factors)?
    };
    let mut violations = Vec::new();
    for i in 0..lambda.n() {
        for j in i + 1..lambda.n() {
            let c = commutes(gamma, &images[i], &images[j])?;
            if c != lambda.adjacent(i, j) {
                violations.push((
                    lambda.label(i).to_string(),
                    lambda.label(j).to_string(),
                ));
            }
        }
    }
    Ok(GeneratorMapReport {
        per_vertex,
        commutation_graph: commutation,
        respects_commutation: violations.is_empty(),
        violations,
    })
}
