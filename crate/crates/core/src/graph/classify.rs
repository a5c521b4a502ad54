//! Graph-class recognizers and the exact clique/chromatic solvers.
//!
//! Everything here is exact; the solvers are exponential in the worst case
//! and meant for desk-scale inputs and the sparse, tree-like extension-graph
//! approximations produced elsewhere in the crate.

use super::{complement, induced_subgraph_ids, Graph};
use fixedbitset::FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClassReport {
    pub triangle_free: bool,
    pub square_free: bool,
    pub forest: bool,
    pub bipartite: bool,
    pub complete: bool,
    pub cograph: bool,
    pub weakly_chordal: bool,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub join_factors: Vec<Graph>,
    pub complete_bipartite_params: Option<(usize, usize)>,
}

pub fn classify(g: &Graph) -> GraphClassReport {
    GraphClassReport {
        triangle_free: is_triangle_free(g),
        square_free: find_induced_square(g).is_none(),
        forest: is_forest(g),
        bipartite: bipartition(g).is_some(),
        complete: is_complete(g),
        cograph: find_induced_p4(g).is_none(),
        weakly_chordal: is_weakly_chordal(g),
        clique_number: clique_number(g),
        chromatic_number: chromatic_number(g),
        join_factors: join_factors(g),
        complete_bipartite_params: complete_bipartite_params(g),
    }
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.edge_count() == n * (n.saturating_sub(1)) / 2
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for (i, j) in g.edges() {
        let mut common = g.row(i).clone();
        common.intersect_with(g.row(j));
        if let Some(k) = common.ones().next() {
            return Some([i, j, k]);
        }
    }
    None
}

/// An induced 4-cycle, reported in cyclic order.
pub fn find_induced_square(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) {
                continue;
            }
            let mut common = g.row(u).clone();
            common.intersect_with(g.row(v));
            let cands: Vec<usize> = common.ones().collect();
            for (a, &w) in cands.iter().enumerate() {
                for &z in &cands[a + 1..] {
                    if !g.adjacent(w, z) {
                        return Some([u, w, v, z]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.connected_components().len() == g.n()
}

/// Any cycle (not necessarily induced) in `g`, as a vertex list.
pub fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, usize::MAX)];
        while let Some((v, from)) = stack.pop() {
            for w in g.neighbors(v) {
                if w == from {
                    continue;
                }
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    stack.push((w, v));
                } else {
                    // walk both ends up to the meeting point
                    let mut path_v = vec![v];
                    while *path_v.last().unwrap() != s && parent[*path_v.last().unwrap()] != usize::MAX {
                        path_v.push(parent[*path_v.last().unwrap()]);
                    }
                    let mut path_w = vec![w];
                    while *path_w.last().unwrap() != s && parent[*path_w.last().unwrap()] != usize::MAX {
                        path_w.push(parent[*path_w.last().unwrap()]);
                    }
                    let pos = path_v
                        .iter()
                        .position(|x| path_w.contains(x))
                        .expect("tree paths meet");
                    let meet = path_v[pos];
                    let mut cycle: Vec<usize> = path_v[..=pos].to_vec();
                    let wpos = path_w.iter().position(|&x| x == meet).unwrap();
                    for &x in path_w[..wpos].iter().rev() {
                        cycle.push(x);
                    }
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Two color classes when `g` is bipartite.
pub fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut color = vec![2u8; n];
    for s in 0..n {
        if color[s] != 2 {
            continue;
        }
        color[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if color[w] == 2 {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    let a = (0..n).filter(|&v| color[v] == 0).collect();
    let b = (0..n).filter(|&v| color[v] == 1).collect();
    Some((a, b))
}

/// An odd (not necessarily induced) cycle, for bipartiteness witnesses.
pub fn find_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    if bipartition(g).is_some() {
        return None;
    }
    // shortest odd cycle through BFS layers is induced enough for a witness
    let n = g.n();
    for s in 0..n {
        let dist = g.bfs_distances(s);
        for (i, j) in g.edges() {
            if dist[i] != usize::MAX && dist[i] == dist[j] {
                let walk_up = |mut v: usize| {
                    let mut path = vec![v];
                    while dist[v] > 0 {
                        v = g
                            .neighbors(v)
                            .find(|&w| dist[w] + 1 == dist[v])
                            .expect("bfs parent");
                        path.push(v);
                    }
                    path
                };
                let pi = walk_up(i);
                let pj = walk_up(j);
                let mut cycle = pi;
                cycle.extend(pj.into_iter().rev().skip(1));
                return Some(cycle);
            }
        }
    }
    None
}

/// An induced path on four vertices `(a,b,c,d)`, spanning in order.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            for a in g.neighbors(b) {
                if a == c || g.adjacent(a, c) {
                    continue;
                }
                for d in g.neighbors(c) {
                    if d == b || d == a || g.adjacent(d, b) || g.adjacent(d, a) {
                        continue;
                    }
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// An induced subgraph isomorphic to the disjoint union of an edge and a
/// point.
pub fn find_edge_plus_point(g: &Graph) -> Option<[usize; 3]> {
    for (i, j) in g.edges() {
        for p in 0..g.n() {
            if p != i && p != j && !g.adjacent(p, i) && !g.adjacent(p, j) {
                return Some([i, j, p]);
            }
        }
    }
    None
}

/// An induced cycle of length >= 5 (a "hole"), in cyclic order.
///
/// Scans middle edges (b,c) of candidate induced P4s (a,b,c,d) and looks for
/// an a-d path avoiding N[b] and N[c]; the shortest such path closes an
/// induced long cycle.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let mut banned = g.row(b).clone();
            banned.union_with(g.row(c));
            banned.insert(b);
            banned.insert(c);
            let rest: Vec<usize> = (0..n).filter(|&v| !banned.contains(v)).collect();
            if rest.is_empty() {
                continue;
            }
            // components of the graph induced on `rest`
            let mut comp = vec![usize::MAX; n];
            let mut ncomp = 0;
            for &s in &rest {
                if comp[s] != usize::MAX {
                    continue;
                }
                comp[s] = ncomp;
                let mut stack = vec![s];
                while let Some(v) = stack.pop() {
                    for w in g.neighbors(v) {
                        if comp[w] == usize::MAX && !banned.contains(w) {
                            comp[w] = ncomp;
                            stack.push(w);
                        }
                    }
                }
                ncomp += 1;
            }
            let comp_mask = |x: usize| -> FixedBitSet {
                let mut m = FixedBitSet::with_capacity(ncomp);
                for w in g.neighbors(x) {
                    if !banned.contains(w) {
                        m.insert(comp[w]);
                    }
                }
                m
            };
            let a_cands: Vec<usize> = g.neighbors(b).filter(|&a| a != c && !g.adjacent(a, c)).collect();
            let d_cands: Vec<usize> = g.neighbors(c).filter(|&d| d != b && !g.adjacent(d, b)).collect();
            if a_cands.is_empty() || d_cands.is_empty() {
                continue;
            }
            let d_masks: Vec<FixedBitSet> = d_cands.iter().map(|&d| comp_mask(d)).collect();
            for &a in &a_cands {
                let am = comp_mask(a);
                for (di, &d) in d_cands.iter().enumerate() {
                    if d == a || g.adjacent(a, d) {
                        continue;
                    }
                    let mut meet = am.clone();
                    meet.intersect_with(&d_masks[di]);
                    if meet.ones().next().is_none() {
                        continue;
                    }
                    // shortest a-d path with interior in `rest`
                    let mut prev = vec![usize::MAX; n];
                    let mut queue = std::collections::VecDeque::from([a]);
                    prev[a] = a;
                    'bfs: while let Some(v) = queue.pop_front() {
                        for w in g.neighbors(v) {
                            if prev[w] != usize::MAX {
                                continue;
                            }
                            if w == d && v != a {
                                prev[w] = v;
                                break 'bfs;
                            }
                            if !banned.contains(w) && w != d {
                                prev[w] = v;
                                queue.push_back(w);
                            }
                        }
                    }
                    if prev[d] == usize::MAX {
                        continue;
                    }
                    let mut path = vec![d];
                    while *path.last().unwrap() != a {
                        path.push(prev[*path.last().unwrap()]);
                    }
                    // path = d .. a; cycle = b, c, d, .., a
                    let mut cycle = vec![b, c];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// No induced `C_n` or `C_n^opp` for any n >= 5.
pub fn is_weakly_chordal(g: &Graph) -> bool {
    find_hole(g).is_none() && find_hole(&complement(g)).is_none()
}

/// A maximum clique, exact branch and bound.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn expand(g: &Graph, current: &mut Vec<usize>, mut p: FixedBitSet, best: &mut Vec<usize>) {
        loop {
            let count = p.count_ones(..);
            if current.len() + count <= best.len() {
                return;
            }
            let Some(v) = p.ones().max_by_key(|&v| {
                let mut r = g.row(v).clone();
                r.intersect_with(&p);
                r.count_ones(..)
            }) else {
                if current.len() > best.len() {
                    *best = current.clone();
                }
                return;
            };
            p.remove(v);
            let mut pv = p.clone();
            pv.intersect_with(g.row(v));
            current.push(v);
            expand(g, current, pv, best);
            current.pop();
        }
    }
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    expand(g, &mut current, p, &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len().max(usize::from(g.n() > 0))
}

/// Vertices surviving repeated deletion of degree < k vertices.
fn k_core(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    queue.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

fn k_colorable_backtrack(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut color = vec![usize::MAX; n];
    // saturation-order backtracking with symmetry breaking on new colors
    fn go(g: &Graph, k: usize, color: &mut Vec<usize>, used: usize, placed: usize) -> bool {
        let n = g.n();
        if placed == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                let sat: std::collections::BTreeSet<usize> = g
                    .neighbors(v)
                    .filter(|&w| color[w] != usize::MAX)
                    .map(|w| color[w])
                    .collect();
                (sat.len(), g.degree(v))
            })
            .unwrap();
        let forbidden: FixedBitSet = {
            let mut f = FixedBitSet::with_capacity(k);
            for w in g.neighbors(v) {
                if color[w] != usize::MAX {
                    f.insert(color[w]);
                }
            }
            f
        };
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if forbidden.contains(c) {
                continue;
            }
            color[v] = c;
            if go(g, k, color, used.max(c + 1), placed + 1) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }
    go(g, k, &mut color, 0, 0)
}

fn is_k_colorable(g: &Graph, k: usize) -> bool {
    let core = k_core(g, k);
    if core.is_empty() {
        return true;
    }
    let h = induced_subgraph_ids(g, &core);
    h.connected_components()
        .into_iter()
        .all(|comp| k_colorable_backtrack(&induced_subgraph_ids(&h, &comp), k))
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    if bipartition(g).is_some() {
        return 2;
    }
    let lb = clique_number(g).max(3);
    let mut k = lb;
    loop {
        if is_k_colorable(g, k) {
            return k;
        }
        k += 1;
    }
}

/// Factors whose join reconstructs `g`: the connected components of the
/// complement, as induced subgraphs of `g`.
pub fn join_factors(g: &Graph) -> Vec<Graph> {
    if g.n() == 0 {
        return vec![g.clone()];
    }
    let comps = complement(g).connected_components();
    comps
        .into_iter()
        .map(|c| induced_subgraph_ids(g, &c))
        .collect()
}

/// `Some((p, q))` when `g` is a complete bipartite graph `K_{p,q}`, with
/// p >= q. Discrete graphs count as `K_{n,0}`.
pub fn complete_bipartite_params(g: &Graph) -> Option<(usize, usize)> {
    if g.n() == 0 {
        return None;
    }
    if g.edge_count() == 0 {
        return Some((g.n(), 0));
    }
    let comps = complement(g).connected_components();
    if comps.len() != 2 {
        return None;
    }
    for c in &comps {
        if induced_subgraph_ids(g, c).edge_count() != 0 {
            return None;
        }
    }
    let (p, q) = (comps[0].len(), comps[1].len());
    Some((p.max(q), p.min(q)))
}
