//! Finite-scale geometric diagnostics of an approximation: distances,
//! star separation, 2-thin geodesic bigons, chromatic number.

use super::{same_conjugate_copy, ExtGraphApprox};
use crate::graph::chromatic_number;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StarSeparationCheck {
    pub u: String,
    pub v: String,
    /// Vertex whose closed star separates u from v, when one exists in the
    /// approximation.
    pub separator: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BigonViolation {
    pub endpoints: (String, String),
    pub geodesic_a: Vec<String>,
    pub geodesic_b: Vec<String>,
    /// Vertex of geodesic a at distance > 2 from every vertex of geodesic b.
    pub far_vertex: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagnosticsReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    /// Largest finite eccentricity (diameter of the largest component).
    pub diameter: usize,
    pub chromatic_number: usize,
    pub star_separation_checks: Vec<StarSeparationCheck>,
    pub thin_bigon_violations: Vec<BigonViolation>,
}

const SAMPLE_PAIRS: usize = 24;
const MAX_GEODESICS_PER_PAIR: usize = 24;
const MAX_BIGON_DISTANCE: usize = 8;

/// Up to `cap` geodesics from s to t, walked through the shortest-path DAG.
fn geodesics(
    g: &crate::graph::Graph,
    du: &[usize],
    dv: &[usize],
    s: usize,
    t: usize,
    cap: usize,
) -> Vec<Vec<usize>> {
    let d = du[t];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![vec![s]];
    while let Some(path) = stack.pop() {
        if out.len() >= cap {
            break;
        }
        let last = *path.last().unwrap();
        if last == t {
            out.push(path);
            continue;
        }
        for w in g.neighbors(last) {
            if du[w] == du[last] + 1 && du[w] + dv[w] == d {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    out
}

pub fn diagnostics(approx: &ExtGraphApprox, seed: u64) -> DiagnosticsReport {
    let g = &approx.graph;
    let base = &approx.base_graph;
    let n = g.n();
    let comps = g.connected_components();
    let dist: Vec<Vec<usize>> = (0..n).map(|v| g.bfs_distances(v)).collect();
    let diameter = dist
        .iter()
        .flat_map(|row| row.iter().filter(|&&d| d != usize::MAX))
        .max()
        .copied()
        .unwrap_or(0);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // star separation: sampled pairs lying in different conjugates of Γ
    let mut cross_pairs: Vec<(usize, usize)> = Vec::new();
    'outer: for i in 0..n {
        for j in i + 1..n {
            if !same_conjugate_copy(base, &approx.vertices[i], &approx.vertices[j]) {
                cross_pairs.push((i, j));
                if cross_pairs.len() >= 4000 {
                    break 'outer;
                }
            }
        }
    }
    cross_pairs.shuffle(&mut rng);
    cross_pairs.truncate(SAMPLE_PAIRS);
    let star_separation_checks = cross_pairs
        .into_iter()
        .map(|(u, v)| {
            let separator = (0..n)
                .find(|&z| {
                    if z == u || z == v || g.adjacent(z, u) || g.adjacent(z, v) {
                        return false;
                    }
                    // BFS from u avoiding the closed star of z
                    let mut seen = vec![false; n];
                    seen[u] = true;
                    let mut stack = vec![u];
                    while let Some(x) = stack.pop() {
                        for w in g.neighbors(x) {
                            if w == z || g.adjacent(w, z) || seen[w] {
                                continue;
                            }
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                    !seen[v]
                })
                .map(|z| g.label(z).to_string());
            StarSeparationCheck {
                u: g.label(u).to_string(),
                v: g.label(v).to_string(),
                separator,
            }
        })
        .collect();

    // 2-thin bigons over sampled endpoint pairs
    let mut pair_pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let d = dist[i][j];
            d >= 2 && d != usize::MAX && d <= MAX_BIGON_DISTANCE
        })
        .collect();
    pair_pool.shuffle(&mut rng);
    pair_pool.truncate(SAMPLE_PAIRS);
    let mut thin_bigon_violations = Vec::new();
    for (s, t) in pair_pool {
        let paths = geodesics(g, &dist[s], &dist[t], s, t, MAX_GEODESICS_PER_PAIR);
        for a in 0..paths.len() {
            for b in 0..paths.len() {
                if a == b {
                    continue;
                }
                for &x in &paths[a] {
                    let near = paths[b].iter().any(|&y| dist[x][y] <= 2);
                    if !near {
                        thin_bigon_violations.push(BigonViolation {
                            endpoints: (g.label(s).to_string(), g.label(t).to_string()),
                            geodesic_a: paths[a].iter().map(|&v| g.label(v).to_string()).collect(),
                            geodesic_b: paths[b].iter().map(|&v| g.label(v).to_string()).collect(),
                            far_vertex: g.label(x).to_string(),
                        });
                    }
                }
            }
        }
    }

    DiagnosticsReport {
        vertex_count: n,
        edge_count: g.edge_count(),
        component_count: comps.len(),
        diameter,
        chromatic_number: chromatic_number(g),
        star_separation_checks,
        thin_bigon_violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::{grow, GrowStrategy};
    use crate::graph::{standard_graph, StandardKind};

    #[test]
    fn c5_radius2_diagnostics() {
        let c5 = standard_graph(StandardKind::Cycle, &[5]).unwrap();
        let a = grow(&c5, GrowStrategy::Radius(2), 1000).unwrap();
        let report = diagnostics(&a, 0);
        assert_eq!(report.chromatic_number, 3);
        assert!(report.component_count == 1);
        // C5 is not weakly chordal, but its extension graph is still
        // triangle- and square-free
        assert!(crate::graph::is_triangle_free(&a.graph));
    }

    #[test]
    fn p4_radius2_bigons_empty() {
        let p4 = Graph::from_edges(vec!["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])
            .unwrap();
        let a = grow(&p4, GrowStrategy::Radius(2), 1000).unwrap();
        let report = diagnostics(&a, 7);
        assert!(report.thin_bigon_violations.is_empty());
    }

    use crate::graph::Graph;

    #[test]
    fn star_separation_on_doubled_c5() {
        let c5 = standard_graph(StandardKind::Cycle, &[5]).unwrap();
        let a = grow(&c5, GrowStrategy::Doubling(vec!["v0".into(), "v2".into()]), 200).unwrap();
        let report = diagnostics(&a, 1);
        assert!(!report.star_separation_checks.is_empty());
        let found = report
            .star_separation_checks
            .iter()
            .filter(|c| c.separator.is_some())
            .count();
        assert!(found > 0, "expected at least one separating star");
    }
}
