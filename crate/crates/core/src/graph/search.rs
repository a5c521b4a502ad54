//! Backtracking searches: induced-subgraph embedding and isomorphism.

use super::Graph;
use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;

pub const DEFAULT_SEARCH_NODES: u64 = 50_000_000;

/// Order pattern vertices so each one (after the first of its component)
/// touches an already-placed vertex; speeds pruning considerably.
fn pattern_order(pat: &Graph) -> Vec<usize> {
    let n = pat.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let attached = pat.neighbors(v).filter(|&w| placed[w]).count();
                (attached, pat.degree(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Injective map from `pattern` onto an induced subgraph of `target`,
/// preserving both adjacency and non-adjacency, or `None` after exhaustive
/// search. `Err` when the node budget runs out.
pub fn find_induced_embedding(
    pattern: &Graph,
    target: &Graph,
    node_budget: u64,
) -> Result<Option<Vec<usize>>> {
    if pattern.n() > target.n() {
        return Ok(None);
    }
    let order = pattern_order(pattern);
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = FixedBitSet::with_capacity(target.n());
    let mut nodes = 0u64;

    fn go(
        pattern: &Graph,
        target: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut FixedBitSet,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if depth == order.len() {
            return Ok(true);
        }
        let p = order[depth];
        // candidate set: intersect neighborhoods of placed neighbors,
        // complement-neighborhoods of placed non-neighbors
        let mut cands = FixedBitSet::with_capacity(target.n());
        cands.insert_range(..);
        cands.difference_with(used);
        for q in &order[..depth] {
            let iq = image[*q];
            if pattern.adjacent(p, *q) {
                cands.intersect_with(target.row(iq));
            } else {
                let mut non = target.row(iq).clone();
                non.toggle_range(..);
                cands.intersect_with(&non);
            }
        }
        for cand in cands.ones() {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExceeded(format!(
                    "induced-subgraph search exceeded {budget} nodes"
                )));
            }
            image[p] = cand;
            used.insert(cand);
            if go(pattern, target, order, depth + 1, image, used, nodes, budget)? {
                return Ok(true);
            }
            used.remove(cand);
            image[p] = usize::MAX;
        }
        Ok(false)
    }

    if go(
        pattern, target, &order, 0, &mut image, &mut used, &mut nodes, node_budget,
    )? {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

/// Every injective induced embedding of `pattern` into `target`. Exhaustive;
/// intended for small patterns.
pub fn all_induced_embeddings(pattern: &Graph, target: &Graph) -> Vec<Vec<usize>> {
    let order = pattern_order(pattern);
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = FixedBitSet::with_capacity(target.n());
    let mut out = Vec::new();
    fn go(
        pattern: &Graph,
        target: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == order.len() {
            out.push(image.clone());
            return;
        }
        let p = order[depth];
        let mut cands = FixedBitSet::with_capacity(target.n());
        cands.insert_range(..);
        cands.difference_with(used);
        for q in &order[..depth] {
            let iq = image[*q];
            if pattern.adjacent(p, *q) {
                cands.intersect_with(target.row(iq));
            } else {
                let mut non = target.row(iq).clone();
                non.toggle_range(..);
                cands.intersect_with(&non);
            }
        }
        for cand in cands.ones() {
            image[p] = cand;
            used.insert(cand);
            go(pattern, target, order, depth + 1, image, used, out);
            used.remove(cand);
            image[p] = usize::MAX;
        }
    }
    go(pattern, target, &order, 0, &mut image, &mut used, &mut out);
    out
}

/// All induced cycles of the given length, one representative per vertex set.
pub fn induced_cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    assert!(len >= 3);
    let n = g.n();
    let mut out = Vec::new();
    // canonical DFS: cycles start at their minimal vertex, second vertex
    // smaller than the last to kill the reflection
    let mut path: Vec<usize> = Vec::with_capacity(len);
    fn extend(g: &Graph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        let start = path[0];
        if path.len() == len {
            if g.adjacent(last, start) && path[1] < *path.last().unwrap() {
                out.push(path.clone());
            }
            return;
        }
        for w in g.neighbors(last) {
            if w <= start || path.contains(&w) {
                continue;
            }
            // induced: w may touch only `last` among the path so far, and
            // `start` only when w is the closing vertex
            let interior_ok =
                (1..path.len().saturating_sub(1)).all(|idx| !g.adjacent(w, path[idx]));
            // the second vertex is adjacent to start by construction; the
            // closing vertex may be; strict interior may not
            let start_ok =
                path.len() == 1 || path.len() == len - 1 || !g.adjacent(w, start);
            if interior_ok && start_ok {
                path.push(w);
                extend(g, len, path, out);
                path.pop();
            }
        }
    }
    for s in 0..n {
        path.clear();
        path.push(s);
        extend(g, len, &mut path, &mut out);
    }
    out
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Exact isomorphism test by refinement-guided backtracking. Adequate for
/// the test-scale graphs this crate deals in (~30 vertices).
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if degree_sequence(g) != degree_sequence(h) {
        return false;
    }
    let n = g.n();
    // invariant per vertex: (degree, sorted neighbor degrees)
    let inv = |gr: &Graph| -> Vec<(usize, Vec<usize>)> {
        (0..gr.n())
            .map(|v| {
                let mut nd: Vec<usize> = gr.neighbors(v).map(|w| gr.degree(w)).collect();
                nd.sort_unstable();
                (gr.degree(v), nd)
            })
            .collect()
    };
    let gi = inv(g);
    let hi = inv(h);
    {
        let mut a = gi.clone();
        let mut b = hi.clone();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // match most-constrained (rarest invariant) first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| gi.iter().filter(|x| **x == gi[v]).count());
    fn go(
        g: &Graph,
        h: &Graph,
        gi: &[(usize, Vec<usize>)],
        hi: &[(usize, Vec<usize>)],
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for t in 0..h.n() {
            if used[t] || hi[t] != gi[v] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g.adjacent(v, u) == h.adjacent(t, map[u]));
            if !consistent {
                continue;
            }
            map[v] = t;
            used[t] = true;
            if go(g, h, gi, hi, order, depth + 1, map, used) {
                return true;
            }
            used[t] = false;
            map[v] = usize::MAX;
        }
        false
    }
    go(g, h, &gi, &hi, &order, 0, &mut map, &mut used)
}

/// Canonical key for small graphs (n <= ~8): the minimum adjacency bitstring
/// over all permutations, pruned by degree classes.
pub fn canonical_key(g: &Graph) -> Vec<u64> {
    let n = g.n();
    assert!(n <= 16, "canonical_key is for small graphs");
    let mut best: Option<Vec<u64>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    // degree-descending class order; candidates must match the class pattern
    let mut class_order: Vec<usize> = (0..n).collect();
    class_order.sort_by(|&a, &b| degs[b].cmp(&degs[a]));
    let target_degs: Vec<usize> = class_order.iter().map(|&v| degs[v]).collect();

    fn encode(g: &Graph, perm: &[usize]) -> Vec<u64> {
        let n = perm.len();
        let mut bits = vec![0u64; (n * n + 63) / 64];
        for i in 0..n {
            for j in 0..n {
                if g.adjacent(perm[i], perm[j]) {
                    let k = i * n + j;
                    bits[k / 64] |= 1 << (k % 64);
                }
            }
        }
        bits
    }

    fn go(
        g: &Graph,
        target_degs: &[usize],
        degs: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<Vec<u64>>,
    ) {
        let n = g.n();
        if perm.len() == n {
            let enc = encode(g, perm);
            if best.as_ref().is_none_or(|b| enc < *b) {
                *best = Some(enc);
            }
            return;
        }
        let want = target_degs[perm.len()];
        for v in 0..n {
            if !used[v] && degs[v] == want {
                used[v] = true;
                perm.push(v);
                go(g, target_degs, degs, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    go(g, &target_degs, &degs, &mut perm, &mut used, &mut best);
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, standard_graph, StandardKind};

    fn c(n: usize) -> Graph {
        standard_graph(StandardKind::Cycle, &[n]).unwrap()
    }
    fn p(n: usize) -> Graph {
        standard_graph(StandardKind::Path, &[n]).unwrap()
    }

    #[test]
    fn induced_embeddings() {
        assert!(find_induced_embedding(&p(4), &c(5), DEFAULT_SEARCH_NODES)
            .unwrap()
            .is_some());
        assert!(find_induced_embedding(&c(4), &c(5), DEFAULT_SEARCH_NODES)
            .unwrap()
            .is_none());
        let co_c6 = complement(&c(6));
        assert!(find_induced_embedding(&c(5), &co_c6, DEFAULT_SEARCH_NODES)
            .unwrap()
            .is_none());
        assert!(find_induced_embedding(&c(4), &co_c6, DEFAULT_SEARCH_NODES)
            .unwrap()
            .is_some());
    }

    #[test]
    fn embedding_preserves_both_relations() {
        let pat = p(4);
        let tgt = c(7);
        let img = find_induced_embedding(&pat, &tgt, DEFAULT_SEARCH_NODES)
            .unwrap()
            .unwrap();
        for i in 0..pat.n() {
            for j in i + 1..pat.n() {
                assert_eq!(pat.adjacent(i, j), tgt.adjacent(img[i], img[j]));
            }
        }
    }

    #[test]
    fn isomorphism() {
        assert!(are_isomorphic(&c(5), &complement(&c(5))));
        assert!(!are_isomorphic(&c(6), &complement(&c(6))));
        assert!(!are_isomorphic(&p(4), &c(4)));
        let k22 = standard_graph(StandardKind::CompleteBipartite, &[2, 2]).unwrap();
        assert!(are_isomorphic(&k22, &c(4)));
    }

    #[test]
    fn cycle_enumeration() {
        assert_eq!(induced_cycles_of_length(&c(5), 5).len(), 1);
        assert_eq!(induced_cycles_of_length(&c(6), 6).len(), 1);
        assert_eq!(induced_cycles_of_length(&c(6), 5).len(), 0);
        assert_eq!(induced_cycles_of_length(&c(6), 4).len(), 0);
        let k4 = standard_graph(StandardKind::Complete, &[4]).unwrap();
        assert_eq!(induced_cycles_of_length(&k4, 3).len(), 4);
    }
}
