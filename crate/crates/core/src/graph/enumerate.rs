//! Exhaustive generation of small graphs up to isomorphism. Test fodder for
//! the closure lemmas and the acceptance suite.

use super::search::canonical_key;
use super::{combine, CombineMode, Graph};
use std::collections::HashSet;

/// All graphs on exactly `n` vertices, one per isomorphism class, labels
/// `v0..`. Grown by vertex extension with canonical deduplication; fine for
/// n <= 7.
pub fn graphs_on_exactly(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 8);
    let mut level: Vec<Graph> = vec![Graph::new(vec!["v0"]).unwrap()];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let labels: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
                let mut h = Graph::new(labels).unwrap();
                for (i, j) in g.edges() {
                    h.set_edge(i, j);
                }
                for b in 0..k - 1 {
                    if mask & (1 << b) != 0 {
                        h.set_edge(b, k - 1);
                    }
                }
                if seen.insert(canonical_key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn all_graphs_up_to_iso(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_on_exactly).collect()
}

pub fn connected_graphs_up_to_iso(max_n: usize) -> Vec<Graph> {
    all_graphs_up_to_iso(max_n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// AHU canonical string of a free tree given by an adjacency list.
fn tree_canonical(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    if n == 1 {
        return "()".into();
    }
    // centers by leaf peeling
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();

    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(adj, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    centers
        .iter()
        .map(|&c| encode(adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// All trees on exactly `n` vertices, one per isomorphism class. Generated by
/// attaching a leaf to every vertex of every (n-1)-tree and deduplicating by
/// AHU canonical form.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]]; // adjacency lists, 1 vertex
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..k - 1 {
                let mut adj = t.clone();
                adj.push(vec![attach]);
                adj[attach].push(k - 1);
                if seen.insert(tree_canonical(&adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut g = Graph::new(labels).unwrap();
            for (v, nbrs) in adj.iter().enumerate() {
                for &w in nbrs {
                    if v < w {
                        g.set_edge(v, w);
                    }
                }
            }
            g
        })
        .collect()
}

pub fn all_trees_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_trees).collect()
}

/// All forests on at most `max_n` vertices, one per isomorphism class:
/// multisets of trees assembled by disjoint union.
pub fn all_forests_up_to(max_n: usize) -> Vec<Graph> {
    let trees: Vec<Vec<Graph>> = (0..=max_n)
        .map(|k| if k == 0 { vec![] } else { all_trees(k) })
        .collect();
    let mut out: Vec<Graph> = Vec::new();
    // components in weakly decreasing size; within a size, index-monotone
    fn go(
        trees: &[Vec<Graph>],
        budget: usize,
        max_size: usize,
        min_index_at_max: usize,
        current: Option<Graph>,
        out: &mut Vec<Graph>,
    ) {
        if let Some(g) = &current {
            out.push(g.clone());
        }
        for size in (1..=budget.min(max_size)).rev() {
            let start = if size == max_size { min_index_at_max } else { 0 };
            for (ti, t) in trees[size].iter().enumerate().skip(start) {
                let next = match &current {
                    None => t.clone(),
                    Some(g) => combine(CombineMode::DisjointUnion, g, t),
                };
                go(trees, budget - size, size, ti, Some(next), out);
            }
        }
    }
    go(&trees, max_n, max_n, 0, None, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        // OEIS A000088: 1, 2, 4, 11, 34, 156
        assert_eq!(graphs_on_exactly(1).len(), 1);
        assert_eq!(graphs_on_exactly(2).len(), 2);
        assert_eq!(graphs_on_exactly(3).len(), 4);
        assert_eq!(graphs_on_exactly(4).len(), 11);
        assert_eq!(graphs_on_exactly(5).len(), 34);
        assert_eq!(graphs_on_exactly(6).len(), 156);
    }

    #[test]
    fn connected_counts() {
        // OEIS A001349: 1, 1, 2, 6, 21, 112
        let by_n: Vec<usize> = (1..=6)
            .map(|n| {
                graphs_on_exactly(n)
                    .into_iter()
                    .filter(|g| g.is_connected())
                    .count()
            })
            .collect();
        assert_eq!(by_n, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        // OEIS A000055: 1, 1, 1, 2, 3, 6, 11, 23, 47
        let by_n: Vec<usize> = (1..=9).map(|n| all_trees(n).len()).collect();
        assert_eq!(by_n, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        assert_eq!(all_trees_up_to(9).len(), 95);
    }

    #[test]
    fn forest_counts() {
        // OEIS A005195 partial sums: forests on <= 5 vertices
        // f(1)=1 f(2)=2 f(3)=3 f(4)=6 f(5)=10
        assert_eq!(all_forests_up_to(5).len(), 1 + 2 + 3 + 6 + 10);
        for f in all_forests_up_to(5) {
            assert!(super::super::classify::classify(&f).forest);
        }
    }
}
