//! Finite simple graphs with labeled vertices.
//!
//! Graphs are immutable after construction; every transform returns a fresh
//! value. Vertex identity is positional (`usize`) internally, label-based at
//! the API boundary.

mod classify;
mod enumerate;
mod search;

pub use classify::{
    bipartition, chromatic_number, classify, clique_number, complete_bipartite_params,
    find_cycle, find_edge_plus_point, find_hole, find_induced_p4, find_induced_square,
    find_odd_cycle, find_triangle, is_complete, is_forest, is_triangle_free, is_weakly_chordal,
    join_factors, max_clique, GraphClassReport,
};
pub use enumerate::{
    all_forests_up_to, all_graphs_up_to_iso, all_trees, all_trees_up_to,
    connected_graphs_up_to_iso, graphs_on_exactly,
};
pub use search::{
    all_induced_embeddings, are_isomorphic, canonical_key, find_induced_embedding,
    induced_cycles_of_length, DEFAULT_SEARCH_NODES,
};

use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<FixedBitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}, E={:?})", self.labels, self.edge_labels())
    }
}

/// Which named family `standard_graph` should build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Discrete,
}

/// How `combine` should merge two graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Join,
    DisjointUnion,
}

impl Graph {
    /// Graph on the given labels with no edges.
    pub fn new<S: Into<String>>(labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            index,
            adj: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    pub fn from_edges<S: Into<String>>(labels: Vec<S>, edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Graph::new(labels)?;
        for (a, b) in edges {
            let i = g.vertex(a)?;
            let j = g.vertex(b)?;
            if i == j {
                return Err(Error::InvalidParameter(format!("self-loop at `{a}`")));
            }
            g.set_edge(i, j);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, i: usize, j: usize) {
        debug_assert_ne!(i, j);
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones(..)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].ones()
    }

    /// Link of a vertex: its neighbors.
    pub fn link(&self, i: usize) -> Vec<usize> {
        self.neighbors(i).collect()
    }

    /// Star of a vertex: the vertex together with its neighbors.
    pub fn star(&self, i: usize) -> FixedBitSet {
        let mut s = self.adj[i].clone();
        s.insert(i);
        s
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in self.adj[i].ones() {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// Stable fingerprint used to detect words applied to the wrong graph.
    pub fn fingerprint(&self) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.labels.hash(&mut h);
        self.edges().hash(&mut h);
        h.finish()
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// BFS distances from `start`; `usize::MAX` for unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Builds the named parametric family with labels `v0..v{n-1}`.
pub fn standard_graph(kind: StandardKind, params: &[usize]) -> Result<Graph> {
    let labels = |n: usize| (0..n).map(|i| format!("v{i}")).collect::<Vec<_>>();
    match kind {
        StandardKind::Path => {
            let [n] = params else {
                return Err(Error::InvalidParameter("path takes one parameter".into()));
            };
            if *n < 1 {
                return Err(Error::InvalidParameter("path needs n >= 1".into()));
            }
            let mut g = Graph::new(labels(*n))?;
            for i in 0..n.saturating_sub(1) {
                g.set_edge(i, i + 1);
            }
            Ok(g)
        }
        StandardKind::Cycle => {
            let [n] = params else {
                return Err(Error::InvalidParameter("cycle takes one parameter".into()));
            };
            if *n < 3 {
                return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
            }
            let mut g = Graph::new(labels(*n))?;
            for i in 0..*n {
                g.set_edge(i, (i + 1) % n);
            }
            Ok(g)
        }
        StandardKind::Complete => {
            let [n] = params else {
                return Err(Error::InvalidParameter("complete takes one parameter".into()));
            };
            if *n < 1 {
                return Err(Error::InvalidParameter("complete needs n >= 1".into()));
            }
            let mut g = Graph::new(labels(*n))?;
            for i in 0..*n {
                for j in i + 1..*n {
                    g.set_edge(i, j);
                }
            }
            Ok(g)
        }
        StandardKind::CompleteBipartite => {
            let [p, q] = params else {
                return Err(Error::InvalidParameter(
                    "complete_bipartite takes two parameters".into(),
                ));
            };
            let mut g = Graph::new(labels(p + q))?;
            for i in 0..*p {
                for j in 0..*q {
                    g.set_edge(i, p + j);
                }
            }
            Ok(g)
        }
        StandardKind::Discrete => {
            let [n] = params else {
                return Err(Error::InvalidParameter("discrete takes one parameter".into()));
            };
            if *n < 1 {
                return Err(Error::InvalidParameter("discrete needs n >= 1".into()));
            }
            Graph::new(labels(*n))
        }
    }
}

/// Join or disjoint union. Colliding labels are disambiguated with `l.`/`r.`
/// prefixes so that the result is always well-formed.
pub fn combine(mode: CombineMode, g1: &Graph, g2: &Graph) -> Graph {
    let collision = g2.labels.iter().any(|l| g1.index.contains_key(l));
    let mut labels: Vec<String> = Vec::with_capacity(g1.n() + g2.n());
    if collision {
        labels.extend(g1.labels.iter().map(|l| format!("l.{l}")));
        labels.extend(g2.labels.iter().map(|l| format!("r.{l}")));
    } else {
        labels.extend(g1.labels.iter().cloned());
        labels.extend(g2.labels.iter().cloned());
    }
    let mut g = Graph::new(labels).expect("prefixed labels are unique");
    for (i, j) in g1.edges() {
        g.set_edge(i, j);
    }
    let off = g1.n();
    for (i, j) in g2.edges() {
        g.set_edge(off + i, off + j);
    }
    if mode == CombineMode::Join {
        for i in 0..g1.n() {
            for j in 0..g2.n() {
                g.set_edge(i, off + j);
            }
        }
    }
    g
}

/// Edge-complement on the same labels.
pub fn complement(g: &Graph) -> Graph {
    let mut c = Graph::new(g.labels.clone()).expect("labels already unique");
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if !g.adjacent(i, j) {
                c.set_edge(i, j);
            }
        }
    }
    c
}

/// Induced subgraph on the given labels, in the given order.
pub fn induced_subgraph(g: &Graph, keep: &[&str]) -> Result<Graph> {
    let ids: Vec<usize> = keep.iter().map(|l| g.vertex(l)).collect::<Result<_>>()?;
    Ok(induced_subgraph_ids(g, &ids))
}

pub fn induced_subgraph_ids(g: &Graph, ids: &[usize]) -> Graph {
    let labels: Vec<String> = ids.iter().map(|&i| g.labels[i].clone()).collect();
    let mut s = Graph::new(labels).expect("subset of unique labels");
    for (a, &i) in ids.iter().enumerate() {
        for (b, &j) in ids.iter().enumerate().skip(a + 1) {
            if g.adjacent(i, j) {
                s.set_edge(a, b);
            }
        }
    }
    s
}

fn primed(g: &Graph, label: &str) -> String {
    let mut l = format!("{label}'");
    while g.has_vertex(&l) {
        l.push('\'');
    }
    l
}

/// Double of `g` along the star of `t`: two copies glued on `st(t)`, the
/// second copy's vertices outside the star primed.
pub fn double_along_star(g: &Graph, t: &str) -> Result<Graph> {
    let tv = g.vertex(t)?;
    let star = g.star(tv);
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !star.contains(v)).collect();
    let mut labels = g.labels.clone();
    let mut copy_of = HashMap::new();
    for &v in &outside {
        let l = primed(g, &g.labels[v]);
        copy_of.insert(v, labels.len());
        labels.push(l);
    }
    let mut d = Graph::new(labels)?;
    for (i, j) in g.edges() {
        d.set_edge(i, j);
        let ci = copy_of.get(&i).copied().unwrap_or(i);
        let cj = copy_of.get(&j).copied().unwrap_or(j);
        if (ci, cj) != (i, j) {
            d.set_edge(ci, cj);
        }
    }
    Ok(d)
}

/// True when `b` induces a connected subgraph of the complement.
pub fn is_anticonnected(g: &Graph, b: &[usize]) -> bool {
    if b.is_empty() {
        return false;
    }
    let comp = complement(g);
    induced_subgraph_ids(&comp, b).is_connected()
}

/// Co-contraction of an anticonnected vertex set `b` to a single vertex,
/// adjacent to exactly the common neighbors of all of `b`.
pub fn cocontract(g: &Graph, b: &[&str]) -> Result<Graph> {
    let ids: Vec<usize> = b.iter().map(|l| g.vertex(l)).collect::<Result<_>>()?;
    if ids.is_empty() {
        return Err(Error::EmptyInput("co-contraction set".into()));
    }
    if !is_anticonnected(g, &ids) {
        return Err(Error::NotAnticonnected(format!("{b:?}")));
    }
    let in_b: Vec<bool> = {
        let mut v = vec![false; g.n()];
        for &i in &ids {
            v[i] = true;
        }
        v
    };
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_b[v]).collect();
    let mut labels: Vec<String> = rest.iter().map(|&v| g.labels[v].clone()).collect();
    let joined = format!("[{}]", b.join("+"));
    labels.push(joined);
    let vb = labels.len() - 1;
    let mut out = Graph::new(labels)?;
    for (a, &i) in rest.iter().enumerate() {
        for (c, &j) in rest.iter().enumerate().skip(a + 1) {
            if g.adjacent(i, j) {
                out.set_edge(a, c);
            }
        }
        if ids.iter().all(|&x| g.adjacent(i, x)) {
            out.set_edge(a, vb);
        }
    }
    Ok(out)
}

/// All nonempty cliques of `g`, each as a sorted vertex list.
pub fn all_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(g: &Graph, current: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        for v in from..g.n() {
            if current.iter().all(|&u| g.adjacent(u, v)) {
                current.push(v);
                out.push(current.clone());
                extend(g, current, v + 1, out);
                current.pop();
            }
        }
    }
    extend(g, &mut current, 0, &mut out);
    out
}

/// Clique graph: one vertex per nonempty clique, adjacency = joint
/// containment in a common clique (equivalently, the union is a clique).
pub fn clique_graph(g: &Graph) -> Graph {
    let cliques = all_cliques(g);
    let labels: Vec<String> = cliques
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|&v| g.label(v)).collect();
            format!("{{{}}}", names.join("+"))
        })
        .collect();
    let mut k = Graph::new(labels).expect("clique labels are unique");
    for a in 0..cliques.len() {
        for b in a + 1..cliques.len() {
            let union_is_clique = cliques[a].iter().all(|&u| {
                cliques[b]
                    .iter()
                    .all(|&v| u == v || g.adjacent(u, v))
            });
            if union_is_clique {
                k.set_edge(a, b);
            }
        }
    }
    k
}

/// Mycielskian: shadow vertex per original plus one apex; preserves
/// triangle-freeness and raises the chromatic number by exactly one.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut labels = g.labels.clone();
    for v in 0..n {
        let mut l = format!("{}*", g.labels[v]);
        while labels.contains(&l) {
            l.push('*');
        }
        labels.push(l);
    }
    let mut apex = "apex".to_string();
    while labels.contains(&apex) {
        apex.push('+');
    }
    labels.push(apex);
    let mut m = Graph::new(labels).expect("shadow labels are unique");
    for (i, j) in g.edges() {
        m.set_edge(i, j);
        m.set_edge(n + i, j);
        m.set_edge(i, n + j);
    }
    for v in 0..n {
        m.set_edge(n + v, 2 * n);
    }
    m
}
