use super::*;
use crate::ext::SearchBudget;
use crate::graph::{combine, mycielskian, standard_graph, CombineMode, StandardKind};

fn c(n: usize) -> Graph {
    standard_graph(StandardKind::Cycle, &[n]).unwrap()
}
fn p(n: usize) -> Graph {
    standard_graph(StandardKind::Path, &[n]).unwrap()
}
fn k(n: usize) -> Graph {
    standard_graph(StandardKind::Complete, &[n]).unwrap()
}
fn budget() -> SearchBudget {
    SearchBudget {
        max_vertices: 500,
        max_radius: 2,
        node_budget: 20_000_000,
    }
}

#[test]
fn decide_c6_into_c5() {
    match decide(&c(6), &c(5), &budget()).unwrap() {
        Verdict::Yes(cert) => {
            assert_eq!(cert.note, CertificateNote::CycleCellulation);
            assert!(verify_certificate(&cert).unwrap());
        }
        other => panic!("expected Yes, got {other:?}"),
    }
}

#[test]
fn decide_c7_into_c6_cycle_arithmetic() {
    match decide(&c(7), &c(6), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::CycleArithmetic),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_p4_into_c4_p4_theorem() {
    match decide(&p(4), &c(4), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::P4Theorem),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_k33_into_c4() {
    let k33 = standard_graph(StandardKind::CompleteBipartite, &[3, 3]).unwrap();
    match decide(&k33, &c(4), &budget()).unwrap() {
        Verdict::Yes(cert) => {
            assert_eq!(cert.note, CertificateNote::ClassRule);
            assert!(verify_certificate(&cert).unwrap());
        }
        other => panic!("expected Yes, got {other:?}"),
    }
}

#[test]
fn decide_k3_into_c5_clique_rank() {
    match decide(&k(3), &c(5), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::CliqueRank),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_trees_into_p4() {
    for t in crate::graph::all_trees(6) {
        match decide(&t, &p(4), &budget()).unwrap() {
            Verdict::Yes(cert) => assert!(verify_certificate(&cert).unwrap()),
            other => panic!("expected Yes for a tree, got {other:?}"),
        }
    }
}

#[test]
fn decide_mycielskian_asymmetry() {
    let grotzsch = mycielskian(&c(5));
    match decide(&grotzsch, &c(5), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::ChromaticTriangleFree),
        other => panic!("expected No, got {other:?}"),
    }
    match decide(&c(5), &grotzsch, &budget()).unwrap() {
        Verdict::Yes(cert) => {
            assert_eq!(cert.note, CertificateNote::Subgraph);
            assert!(verify_certificate(&cert).unwrap());
        }
        other => panic!("expected Yes, got {other:?}"),
    }
}

#[test]
fn scan_examples() {
    // (C4, C5): the square obstruction
    let obs = obstruction_scan(&c(4), &c(5)).unwrap();
    assert_eq!(obs.kind, ObstructionKind::KambitesSquare);
    // (P3, K3): the scan is silent; the complete-target rule decides
    assert!(obstruction_scan(&p(3), &k(3)).is_none());
    match decide(&p(3), &k(3), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::DisjointCliquesTarget),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_into_free_products_of_cliques() {
    // two triangles: two source cliques fit into translated conjugates
    let two_k3 = combine(CombineMode::DisjointUnion, &k(3), &k(3));
    let three_k2 = {
        let e = p(2);
        let two = combine(CombineMode::DisjointUnion, &e, &e);
        combine(CombineMode::DisjointUnion, &two, &e)
    };
    match decide(&three_k2, &two_k3, &budget()).unwrap() {
        Verdict::Yes(cert) => assert!(verify_certificate(&cert).unwrap()),
        other => panic!("expected Yes, got {other:?}"),
    }
    // P3 needs a non-clique component
    match decide(&p(3), &two_k3, &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::DisjointCliquesTarget),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_star_forest_cases() {
    // single star into a long cycle: leaves are conjugates over one P3
    let star = standard_graph(StandardKind::CompleteBipartite, &[1, 4]).unwrap();
    match decide(&star, &c(5), &budget()).unwrap() {
        Verdict::Yes(cert) => assert!(verify_certificate(&cert).unwrap()),
        other => panic!("expected Yes, got {other:?}"),
    }
    // two stars into a path long enough to offer an edge-plus-point
    let two_stars = combine(
        CombineMode::DisjointUnion,
        &standard_graph(StandardKind::CompleteBipartite, &[1, 2]).unwrap(),
        &standard_graph(StandardKind::CompleteBipartite, &[1, 3]).unwrap(),
    );
    match decide(&two_stars, &p(5), &budget()).unwrap() {
        Verdict::Yes(cert) => assert!(verify_certificate(&cert).unwrap()),
        other => panic!("expected Yes, got {other:?}"),
    }
    // into P3 they are refuted: A(P3) = Z x F2 has no Z * Z^2
    match decide(&two_stars, &p(3), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::EdgePlusPoint),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_edge_plus_point_obstruction() {
    let lam = combine(CombineMode::DisjointUnion, &p(2), &k(1));
    match decide(&lam, &c(4), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::EdgePlusPoint),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_two_edges_into_c4() {
    // an edge plus anything non-adjacent is the Z * Z^2 obstruction, and
    // joins never contain an induced edge-plus-point
    let two_edges = combine(CombineMode::DisjointUnion, &p(2), &p(2));
    match decide(&two_edges, &c(4), &budget()).unwrap() {
        Verdict::No(obs) => assert_eq!(obs.kind, ObstructionKind::EdgePlusPoint),
        other => panic!("expected No, got {other:?}"),
    }
}

#[test]
fn decide_forest_join_recursion() {
    // discrete source into a wheel (a join): the kernel argument projects
    // onto the C5 factor, where three same-base conjugates do the job
    let wheel = combine(CombineMode::Join, &k(1), &c(5));
    let d3 = standard_graph(StandardKind::Discrete, &[3]).unwrap();
    match decide(&d3, &wheel, &budget()).unwrap() {
        Verdict::Yes(cert) => assert!(verify_certificate(&cert).unwrap()),
        other => panic!("expected Yes, got {other:?}"),
    }
}

#[test]
fn decide_p6opp_cycle_returns_unknown() {
    let p6opp = crate::graph::complement(&p(6));
    let small = SearchBudget {
        max_vertices: 220,
        max_radius: 1,
        node_budget: 4_000_000,
    };
    for n in [5usize, 6] {
        match decide(&c(n), &p6opp, &small).unwrap() {
            Verdict::Unknown(report) => {
                assert!(!report.strategies_tried.is_empty());
            }
            Verdict::Yes(_) => panic!("C{n} in P6^opp would settle an open case"),
            Verdict::No(obs) => panic!("no sound refutation is known: {obs:?}"),
        }
    }
}

#[test]
fn tampered_certificates_fail() {
    let verdict = decide(&c(6), &c(5), &budget()).unwrap();
    let Verdict::Yes(cert) = verdict else {
        panic!("expected Yes");
    };
    assert!(verify_certificate(&cert).unwrap());
    // swap one image with a fresh conjugate unrelated to the cycle
    let mut tampered = cert.clone();
    let w = crate::words::normalize_str(&cert.target, "v0 v2").unwrap();
    tampered.assignment[0] = crate::ext::ext_vertex(&cert.target, 3, &w).unwrap();
    assert!(!verify_certificate(&tampered).unwrap());
    // duplicate images are rejected too
    let mut duped = cert.clone();
    duped.assignment[0] = duped.assignment[1].clone();
    assert!(!verify_certificate(&duped).unwrap());
}

#[test]
fn monotone_restriction_of_certificates() {
    let Verdict::Yes(cert) = decide(&c(8), &c(6), &budget()).unwrap() else {
        panic!("C8 embeds into C6^e");
    };
    // restrict to an induced sub-forest of C8: a path on 4 of its vertices
    let keep = [0usize, 1, 2, 3];
    let sub = crate::graph::induced_subgraph_ids(&cert.source, &keep);
    let restricted = EmbeddingCertificate {
        source: sub,
        target: cert.target.clone(),
        assignment: keep.iter().map(|&i| cert.assignment[i].clone()).collect(),
        note: cert.note,
    };
    assert!(verify_certificate(&restricted).unwrap());
}
