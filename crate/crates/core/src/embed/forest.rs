//! Forests: the constructive embedding into P4^e and the full decision
//! recursion for forest sources.

use super::{
    p3_witness, transport_certificate, verified, CertificateNote, EmbeddingCertificate, Verdict,
};
use crate::error::{Error, Result};
use crate::ext::{act, ext_adjacent, ext_vertex, ExtVertex, SearchBudget};
use crate::graph::{
    complement, find_induced_embedding, induced_subgraph_ids, is_forest, standard_graph, Graph,
    StandardKind,
};
use crate::words::{inverse, letter_word, normalize, power, Letter, NormalForm};

const SEPARATION_POWER_CAP: i64 = 60;

fn p4() -> Graph {
    standard_graph(StandardKind::Path, &[4]).expect("P4")
}

/// Count of `a^{±1}` letters in a word (vertex index 0 of the standard P4).
fn a_occurrences(w: &NormalForm) -> usize {
    w.letters().iter().filter(|l| l.vertex == 0).count()
}

/// The graph automorphism of P4 swapping a<->d and b<->c, applied to a
/// vertex of the extension graph.
fn swap_ends(g: &Graph, v: &ExtVertex) -> Result<ExtVertex> {
    let sigma = |i: usize| 3 - i;
    let word: Vec<Letter> = v
        .rep()
        .letters()
        .iter()
        .map(|l| Letter::new(sigma(l.vertex), l.inverse))
        .collect();
    let rep = normalize(g, &word)?;
    ext_vertex(g, sigma(v.base()), &rep)
}

/// Embeds one tree into the subgraph of P4^e spanned by conjugates of b and
/// c, growing leaf by leaf: the partial tree is translated so the
/// attachment vertex is the identity conjugate of b, and the new leaf
/// becomes c^(a^M) for M beyond every a-occurrence in sight.
fn embed_tree(g: &Graph, tree: &Graph, comp: &[usize]) -> Result<Vec<ExtVertex>> {
    let b = 1usize;
    let c = 2usize;
    // BFS order so each vertex after the first attaches to a placed one
    let mut order = vec![comp[0]];
    let mut parent = vec![usize::MAX; tree.n()];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in tree.neighbors(v) {
            if w != comp[0] && parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), comp.len());
    let mut image: Vec<Option<ExtVertex>> = vec![None; tree.n()];
    image[comp[0]] = Some(ext_vertex(g, b, &NormalForm::identity(g))?);
    for &v in order.iter().skip(1) {
        let u = parent[v];
        // translate everything so the attachment vertex has trivial rep
        let shift = inverse(g, image[u].as_ref().unwrap().rep());
        for img in image.iter_mut().flatten() {
            *img = act(g, img, &shift)?;
        }
        // attachment must sit at base b; apply the end-swap if it is at c
        if image[u].as_ref().unwrap().base() == c {
            for img in image.iter_mut().flatten() {
                *img = swap_ends(g, img)?;
            }
        }
        debug_assert_eq!(image[u].as_ref().unwrap(), &ext_vertex(g, b, &NormalForm::identity(g))?);
        // one beyond every a-occurrence among the other placed vertices;
        // with none in sight the plain identity conjugate of c works
        let m = image
            .iter()
            .enumerate()
            .filter(|(w, img)| *w != u && img.is_some())
            .map(|(_, img)| a_occurrences(img.as_ref().unwrap().rep()))
            .max()
            .map_or(0, |occ| occ + 1);
        let a_power = power(g, &letter_word(g, 0, false), m as i64);
        image[v] = Some(ext_vertex(g, c, &a_power)?);
    }
    Ok(comp.iter().map(|&v| image[v].clone().unwrap()).collect())
}

/// Translates the parts apart with growing powers of `translator` until no
/// cross-part pair is equal or adjacent. Verified, not assumed.
fn separate_parts(
    g: &Graph,
    parts: Vec<Vec<ExtVertex>>,
    translator: &NormalForm,
) -> Result<Vec<Vec<ExtVertex>>> {
    let mut placed: Vec<Vec<ExtVertex>> = Vec::new();
    let mut flat: Vec<ExtVertex> = Vec::new();
    for part in parts {
        if placed.is_empty() {
            flat.extend(part.iter().cloned());
            placed.push(part);
            continue;
        }
        let mut done = false;
        'power: for m in 0..=SEPARATION_POWER_CAP {
            let t = power(g, translator, m);
            let moved: Vec<ExtVertex> = part
                .iter()
                .map(|v| act(g, v, &t))
                .collect::<Result<_>>()?;
            for x in &moved {
                for y in &flat {
                    if x == y || ext_adjacent(g, x, y) {
                        continue 'power;
                    }
                }
            }
            flat.extend(moved.iter().cloned());
            placed.push(moved);
            done = true;
            break;
        }
        if !done {
            return Err(Error::InvalidCertificate(
                "no separating translate found within the power cap".into(),
            ));
        }
    }
    Ok(placed)
}

/// Constructive embedding of any finite forest into P4^e.
pub fn embed_forest_in_p4e(f: &Graph) -> Result<EmbeddingCertificate> {
    if !is_forest(f) {
        return Err(Error::NotAForest);
    }
    if f.n() == 0 {
        return Err(Error::EmptyInput("empty forest".into()));
    }
    let g = p4();
    let comps = f.connected_components();
    let parts: Vec<Vec<ExtVertex>> = comps
        .iter()
        .map(|comp| embed_tree(&g, f, comp))
        .collect::<Result<_>>()?;
    // a·d mixes the two ends of P4; its powers push components apart
    let ad = normalize(&g, &[Letter::new(0, false), Letter::new(3, false)])?;
    let placed = separate_parts(&g, parts, &ad)?;
    let mut assignment = vec![None; f.n()];
    for (part, comp) in placed.iter().zip(&comps) {
        for (img, &v) in part.iter().zip(comp) {
            assignment[v] = Some(img.clone());
        }
    }
    let cert = EmbeddingCertificate {
        source: f.clone(),
        target: g,
        assignment: assignment.into_iter().map(Option::unwrap).collect(),
        note: CertificateNote::ForestP4,
    };
    match verified(cert)? {
        Verdict::Yes(c) => Ok(c),
        _ => unreachable!("verified() returns Yes or errors"),
    }
}

/// Star K_{1,q} onto the center of an induced P3 of the target, leaves as
/// conjugates of one P3 end by powers of the other.
fn star_images(
    gamma: &Graph,
    lambda: &Graph,
    comp: &[usize],
) -> Result<Vec<ExtVertex>> {
    let [x, center, y] = p3_witness(gamma).expect("caller guarantees an induced P3");
    let deg_inside = |v: usize| comp.iter().filter(|&&w| lambda.adjacent(v, w)).count();
    let c_lam = *comp.iter().max_by_key(|&&v| deg_inside(v)).unwrap();
    let mut out = Vec::with_capacity(comp.len());
    let y_word = letter_word(gamma, y, false);
    let mut leaf_idx = 0i64;
    for &v in comp {
        if v == c_lam {
            out.push(ext_vertex(gamma, center, &NormalForm::identity(gamma))?);
        } else {
            out.push(ext_vertex(gamma, x, &power(gamma, &y_word, leaf_idx))?);
            leaf_idx += 1;
        }
    }
    Ok(out)
}

/// Full decision recursion for forest sources. Never returns Unknown.
pub(super) fn forest_decide(
    lambda: &Graph,
    gamma: &Graph,
    budget: &SearchBudget,
) -> Result<Verdict> {
    let comps = lambda.connected_components();
    let diameter = comps
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|&v| {
                    let d = lambda.bfs_distances(v);
                    comp.iter().map(|&w| d[w]).max().unwrap_or(0)
                })
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);

    if diameter >= 3 {
        // the scan would have refuted a P4-free target
        let p4_pattern = p4();
        let img = find_induced_embedding(&p4_pattern, gamma, budget.node_budget)?
            .expect("P4-free targets were refuted by the scan");
        let base = embed_forest_in_p4e(lambda)?;
        let cert = transport_certificate(&base, gamma, &img)?;
        return verified(cert);
    }

    // components are stars (possibly edges and points)
    if lambda.is_connected() {
        let images = star_images(gamma, lambda, &comps[0])?;
        let mut assignment = vec![None; lambda.n()];
        for (img, &v) in images.into_iter().zip(&comps[0]) {
            assignment[v] = Some(img);
        }
        let cert = EmbeddingCertificate {
            source: lambda.clone(),
            target: gamma.clone(),
            assignment: assignment.into_iter().map(Option::unwrap).collect(),
            note: CertificateNote::ClassRule,
        };
        return verified(cert);
    }

    // disconnected source over a join target: project (kernel argument)
    let factors = complement(gamma).connected_components();
    if factors.len() >= 2 {
        let mut first_no = None;
        for comp in &factors {
            let inner = induced_subgraph_ids(gamma, comp);
            match super::decide(lambda, &inner, budget)? {
                Verdict::Yes(cert) => {
                    let lifted = transport_certificate(&cert, gamma, comp)?;
                    return verified(lifted);
                }
                Verdict::No(obs) => {
                    if first_no.is_none() {
                        first_no = Some(obs);
                    }
                }
                Verdict::Unknown(r) => return Ok(Verdict::Unknown(r)),
            }
        }
        let mut obs = first_no.expect("join has factors");
        obs.detail = format!(
            "target splits as a join, so a center-free square-free source must embed in one \
             factor; none works ({})",
            obs.detail
        );
        return Ok(Verdict::No(obs));
    }

    // non-join target: place every component, then translate copies apart
    let mut parts: Vec<Vec<ExtVertex>> = Vec::new();
    for comp in &comps {
        if comp.len() == 1 {
            parts.push(vec![ext_vertex(gamma, 0, &NormalForm::identity(gamma))?]);
        } else if comp.len() == 2 {
            let (e0, e1) = gamma.edges().into_iter().next().ok_or_else(|| {
                Error::InvalidCertificate("edge component needs an edge in the target".into())
            })?;
            parts.push(vec![
                ext_vertex(gamma, e0, &NormalForm::identity(gamma))?,
                ext_vertex(gamma, e1, &NormalForm::identity(gamma))?,
            ]);
        } else {
            parts.push(star_images(gamma, lambda, comp)?);
        }
    }
    // any non-adjacent pair mixes under powers; try them all
    let mut last_err = None;
    for x in 0..gamma.n() {
        for y in 0..gamma.n() {
            if x == y || gamma.adjacent(x, y) {
                continue;
            }
            let t = normalize(
                gamma,
                &[Letter::new(x, false), Letter::new(y, false)],
            )?;
            match separate_parts(gamma, parts.clone(), &t) {
                Ok(placed) => {
                    let mut assignment = vec![None; lambda.n()];
                    for (part, comp) in placed.iter().zip(&comps) {
                        for (img, &v) in part.iter().zip(comp) {
                            assignment[v] = Some(img.clone());
                        }
                    }
                    let cert = EmbeddingCertificate {
                        source: lambda.clone(),
                        target: gamma.clone(),
                        assignment: assignment.into_iter().map(Option::unwrap).collect(),
                        note: CertificateNote::ClassRule,
                    };
                    return verified(cert);
                }
                Err(e) => last_err = Some(e),
            }
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::InvalidCertificate("no translator pair available for separation".into())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::verify_certificate;
    use crate::graph::{all_trees, combine, CombineMode};

    #[test]
    fn single_edge_lands_on_b_and_c() {
        let edge = standard_graph(StandardKind::Path, &[2]).unwrap();
        let cert = embed_forest_in_p4e(&edge).unwrap();
        assert!(verify_certificate(&cert).unwrap());
        assert!(cert.assignment.iter().all(|v| v.rep().is_empty()));
        let bases: Vec<usize> = cert.assignment.iter().map(|v| v.base()).collect();
        assert_eq!(bases, vec![1, 2]);
    }

    #[test]
    fn star_and_path() {
        let star = standard_graph(StandardKind::CompleteBipartite, &[1, 3]).unwrap();
        let cert = embed_forest_in_p4e(&star).unwrap();
        assert!(verify_certificate(&cert).unwrap());
        let p5 = standard_graph(StandardKind::Path, &[5]).unwrap();
        let cert = embed_forest_in_p4e(&p5).unwrap();
        assert!(verify_certificate(&cert).unwrap());
    }

    #[test]
    fn disjoint_union_separates() {
        let p3 = standard_graph(StandardKind::Path, &[3]).unwrap();
        let two = combine(CombineMode::DisjointUnion, &p3, &p3);
        let forest = combine(
            CombineMode::DisjointUnion,
            &two,
            &standard_graph(StandardKind::Path, &[2]).unwrap(),
        );
        let cert = embed_forest_in_p4e(&forest).unwrap();
        assert!(verify_certificate(&cert).unwrap());
    }

    #[test]
    fn all_trees_on_seven() {
        for t in all_trees(7) {
            let cert = embed_forest_in_p4e(&t).unwrap();
            assert!(verify_certificate(&cert).unwrap());
        }
    }

    #[test]
    fn non_forest_rejected() {
        let c4 = standard_graph(StandardKind::Cycle, &[4]).unwrap();
        assert!(matches!(embed_forest_in_p4e(&c4), Err(Error::NotAForest)));
    }
}
