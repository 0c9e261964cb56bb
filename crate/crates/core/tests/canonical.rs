mod common;

use std::collections::HashSet;

use rand::Rng;

use common::interval_graph_classes;
use ehig_core::canonical::{build_canonical, parse_model, verify_canonical, write_model, StretchedModel};
use ehig_core::generate::{random_interval_graph, rng};
use ehig_core::graphs::{interval_clique_path, reduce_twins, CliquePath, Graph};

fn check(g: &Graph) {
    let reduced = reduce_twins(g).unwrap().graph;
    let cp = interval_clique_path(&reduced).unwrap();
    let m = build_canonical(&reduced, &cp).unwrap();
    assert!(verify_canonical(&reduced, &m), "{reduced}");
    structure(&reduced, &cp, &m);
    assert_eq!(write_model(&build_canonical(&reduced, &cp).unwrap()), write_model(&m));
    assert_eq!(parse_model(&write_model(&m)).unwrap(), m);
}

fn structure(g: &Graph, cp: &CliquePath, m: &StretchedModel) {
    let ivs = m.hypergraph.intervals();
    let lefts: HashSet<usize> = ivs.iter().map(|i| i.l).collect();
    let rights: HashSet<usize> = ivs.iter().map(|i| i.r).collect();
    assert_eq!((lefts.len(), rights.len()), (ivs.len(), ivs.len()));
    for (i, z) in m.zeros().into_iter().enumerate() {
        let mut at: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| m.interval_of(g.label(v)).unwrap().contains(z))
            .collect();
        at.sort_unstable();
        assert_eq!(at, cp.clique(i + 1));
    }
    let t = cp.len();
    let s_plus_e: usize = (1..=t)
        .map(|i| {
            let s = (0..g.vertex_count()).filter(|&v| cp.range(v).0 == i).count();
            let e = (0..g.vertex_count()).filter(|&v| cp.range(v).1 == i).count();
            s + e - 1
        })
        .sum();
    assert_eq!(m.hypergraph.points(), s_plus_e + t - 1);
}

#[test]
fn every_small_interval_graph() {
    for s in interval_graph_classes(7).iter().flatten() {
        check(&s.to_graph());
    }
}

#[test]
fn random_larger_interval_graphs() {
    for seed in 0..500 {
        let mut r = rng(seed);
        let n = r.gen_range(8..=20);
        check(&random_interval_graph(n, &mut r).0);
    }
}
