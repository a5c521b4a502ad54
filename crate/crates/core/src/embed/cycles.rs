//! Cycles into cycles: the arithmetic criterion m = n + k(n-4) and the
//! linear-cellulation certificate built from iterated star reflections.

use super::{
    identity_certificate, verified, CertificateNote, EmbeddingCertificate, Obstruction,
    ObstructionKind, Verdict,
};
use crate::error::{Error, Result};
use crate::ext::{ext_adjacent, ext_vertex, ExtVertex};
use crate::graph::{standard_graph, Graph, StandardKind};
use crate::words::{letter_word, mul, NormalForm};
use std::collections::HashMap;

/// Whether A(C_m) embeds in A(C_n).
pub fn cycle_arith_ok(m: usize, n: usize) -> bool {
    match n {
        3 => m == 3,
        4 => m == 4,
        _ => m >= n && (m - n) % (n - 4) == 0,
    }
}

/// Decides A(C_m) <= A(C_n) with a certificate or an arithmetic obstruction.
pub fn cycle_in_cycle(m: usize, n: usize) -> Result<Verdict> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidParameter("cycles need length >= 3".into()));
    }
    let lambda = standard_graph(StandardKind::Cycle, &[m])?;
    let gamma = standard_graph(StandardKind::Cycle, &[n])?;
    if m == 3 && n != 3 {
        return Ok(Verdict::No(Obstruction {
            kind: ObstructionKind::CliqueRank,
            detail: format!("C3 is a triangle; C{n} has clique number 2"),
            witness: vec!["v0".into(), "v1".into(), "v2".into()],
        }));
    }
    if n == 3 && m != 3 {
        return Ok(Verdict::No(Obstruction {
            kind: ObstructionKind::DisjointCliquesTarget,
            detail: format!("C3 is complete, so its group is abelian; A(C{m}) is not"),
            witness: vec![],
        }));
    }
    if !cycle_arith_ok(m, n) {
        return Ok(Verdict::No(Obstruction {
            kind: ObstructionKind::CycleArithmetic,
            detail: format!(
                "C{m} embeds in the extension graph of C{n} only when m = n + k(n-4), k >= 0"
            ),
            witness: vec![],
        }));
    }
    let lam_order: Vec<usize> = (0..m).collect();
    let gam_order: Vec<usize> = (0..n).collect();
    cycle_certificate(&lambda, &lam_order, &gamma, &gam_order)
}

/// Certificate for C_m inside the extension graph of C_n (orders given in
/// cyclic order), assuming the arithmetic criterion holds. Builds k+1 copies
/// of the target cycle, each the reflection of the previous one through the
/// star of a gluing vertex, and walks the boundary of the resulting
/// cellulated disk.
pub(super) fn cycle_certificate(
    lambda: &Graph,
    lam_order: &[usize],
    gamma: &Graph,
    gam_order: &[usize],
) -> Result<Verdict> {
    let m = lam_order.len();
    let n = gam_order.len();
    debug_assert!(cycle_arith_ok(m, n));
    if m == n {
        let image: Vec<usize> = {
            let mut img = vec![0; m];
            for (i, &l) in lam_order.iter().enumerate() {
                img[l] = gam_order[i];
            }
            img
        };
        let cert = identity_certificate(lambda, gamma, &image, CertificateNote::Subgraph)?;
        return verified(cert);
    }
    let k = (m - n) / (n - 4);
    // gluing middles alternate between two induced paths of the cycle; for
    // n = 5 the paths share an endpoint, as they must
    let mid_for = |j: usize| -> usize {
        if j % 2 == 1 {
            0
        } else if n >= 6 {
            3
        } else {
            2
        }
    };
    let mut words: Vec<NormalForm> = vec![NormalForm::identity(gamma)];
    for j in 1..=k {
        let mid = letter_word(gamma, gam_order[mid_for(j)], false);
        let w = mul(gamma, &mid, &words[j - 1]);
        words.push(w);
    }
    let mut seen: HashMap<ExtVertex, ()> = HashMap::new();
    let mut vertices: Vec<ExtVertex> = Vec::new();
    for w in &words {
        for t in 0..n {
            let v = ext_vertex(gamma, gam_order[t], w)?;
            if seen.insert(v.clone(), ()).is_none() {
                vertices.push(v);
            }
        }
    }
    for j in 1..=k {
        let middle = ext_vertex(gamma, gam_order[mid_for(j)], &words[j - 1])?;
        vertices.retain(|v| v != &middle);
    }
    if vertices.len() != m {
        return Err(Error::InvalidCertificate(format!(
            "cellulation produced {} boundary vertices, expected {m}",
            vertices.len()
        )));
    }
    // the boundary must be 2-regular; walk it
    let adj: Vec<Vec<usize>> = vertices
        .iter()
        .map(|u| {
            (0..vertices.len())
                .filter(|&j| ext_adjacent(gamma, u, &vertices[j]))
                .collect()
        })
        .collect();
    if adj.iter().any(|a| a.len() != 2) {
        return Err(Error::InvalidCertificate(
            "cellulation boundary is not a cycle".into(),
        ));
    }
    let mut walk = vec![0usize];
    let mut prev = usize::MAX;
    while walk.len() < m {
        let cur = *walk.last().unwrap();
        let next = *adj[cur].iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        walk.push(next);
    }
    let mut assignment = vec![None; m];
    for (i, &l) in lam_order.iter().enumerate() {
        assignment[l] = Some(vertices[walk[i]].clone());
    }
    let cert = EmbeddingCertificate {
        source: lambda.clone(),
        target: gamma.clone(),
        assignment: assignment.into_iter().map(Option::unwrap).collect(),
        note: CertificateNote::CycleCellulation,
    };
    verified(cert)
}
