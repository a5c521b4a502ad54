//! Canonical certificates for the two named constructions: the star-double
//! and co-contraction.

use super::{verified, CertificateNote, EmbeddingCertificate, Verdict};
use crate::error::{Error, Result};
use crate::ext::{ext_vertex, ExtVertex};
use crate::graph::{cocontract, complement, double_along_star, induced_subgraph_ids, Graph};
use crate::words::{conjugate, letter_word, NormalForm};

#[derive(Debug, Clone)]
pub enum CanonicalKind {
    /// Certificate for the double of Γ along st(t): second copy conjugated
    /// by t.
    StarDouble(String),
    /// Certificate for the co-contraction of an anticonnected set B: the
    /// merged vertex becomes an iterated conjugate built along a spanning
    /// structure of B in the complement.
    Cocontraction(Vec<String>),
}

pub fn canonical_certificate(kind: &CanonicalKind, gamma: &Graph) -> Result<EmbeddingCertificate> {
    let verdict = match kind {
        CanonicalKind::StarDouble(t) => star_double_certificate(gamma, t)?,
        CanonicalKind::Cocontraction(b) => {
            let refs: Vec<&str> = b.iter().map(|s| s.as_str()).collect();
            cocontraction_certificate(gamma, &refs)?
        }
    };
    match verdict {
        Verdict::Yes(cert) => Ok(cert),
        _ => unreachable!("verified() returns Yes or errors"),
    }
}

fn star_double_certificate(gamma: &Graph, t: &str) -> Result<Verdict> {
    let tv = gamma.vertex(t)?;
    let lambda = double_along_star(gamma, t)?;
    let t_word = letter_word(gamma, tv, false);
    let assignment = lambda
        .labels()
        .iter()
        .map(|label| {
            if let Ok(orig) = gamma.vertex(label) {
                ext_vertex(gamma, orig, &NormalForm::identity(gamma))
            } else {
                // primed copy: strip trailing quotes to recover the original
                let base_label = label.trim_end_matches('\'');
                let orig = gamma.vertex(base_label)?;
                ext_vertex(gamma, orig, &t_word)
            }
        })
        .collect::<Result<Vec<ExtVertex>>>()?;
    verified(EmbeddingCertificate {
        source: lambda,
        target: gamma.clone(),
        assignment,
        note: CertificateNote::StarDouble,
    })
}

fn cocontraction_certificate(gamma: &Graph, b: &[&str]) -> Result<Verdict> {
    let lambda = cocontract(gamma, b)?;
    let ids: Vec<usize> = b
        .iter()
        .map(|l| gamma.vertex(l))
        .collect::<Result<Vec<_>>>()?;
    // walk B in an order where each vertex is complement-adjacent to an
    // earlier one, folding v ↦ v^(previous merged word)
    let opp = complement(gamma);
    let opp_b = induced_subgraph_ids(&opp, &ids);
    let mut order = vec![0usize];
    let mut seen = vec![false; ids.len()];
    seen[0] = true;
    while order.len() < ids.len() {
        let next = (0..ids.len())
            .find(|&j| !seen[j] && order.iter().any(|&i| opp_b.adjacent(i, j)))
            .ok_or_else(|| Error::NotAnticonnected(format!("{b:?}")))?;
        seen[next] = true;
        order.push(next);
    }
    let mut merged = letter_word(gamma, ids[order[0]], false);
    let mut last_base = ids[order[0]];
    for &j in order.iter().skip(1) {
        let v = letter_word(gamma, ids[j], false);
        merged = conjugate(gamma, &v, &merged);
        last_base = ids[j];
    }
    // merged = last_base conjugated by everything before it
    let conjugator = {
        // recover the conjugator: merged = w^-1 · last · w, and the
        // canonical vertex only needs the coset of w
        let mut w = NormalForm::identity(gamma);
        for &j in &order[..order.len() - 1] {
            let v = letter_word(gamma, ids[j], false);
            w = conjugate(gamma, &v, &w);
        }
        // after folding, the conjugator of the final step is the previous
        // merged word
        w
    };
    let assignment = lambda
        .labels()
        .iter()
        .map(|label| {
            if let Ok(orig) = gamma.vertex(label) {
                ext_vertex(gamma, orig, &NormalForm::identity(gamma))
            } else {
                ext_vertex(gamma, last_base, &conjugator)
            }
        })
        .collect::<Result<Vec<ExtVertex>>>()?;
    verified(EmbeddingCertificate {
        source: lambda,
        target: gamma.clone(),
        assignment,
        note: CertificateNote::Cocontraction,
    })
}
