mod common;

use proptest::prelude::*;

use common::{forbidden_structure, has_exact_hitting_set, interval_graph_classes, Small};
use ehig_core::ehig::{
    build_partition_cover, construct_backbone, cover_size_profile, extract_hitting_points, recognize,
    verify_forbidden_witness, Outcome, PartitionCover, RecognizeOptions,
};
use ehig_core::generate::{random_interval_graph, rng};
use ehig_core::graphs::{reduce_twins, Graph};
use ehig_core::hyperkit::{brute_force_ehs, exact_hit_check};

fn interval_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_interval_graph(n, &mut rng(seed)).0)
}

fn check_outcome(g: &Graph) -> bool {
    let rec = recognize(g, &RecognizeOptions::default()).unwrap();
    match &rec.outcome {
        Outcome::Ehig { hitting, partition } => {
            assert!(exact_hit_check(&rec.model.hypergraph, hitting).unwrap().is_exact);
            let mut seen = vec![0; g.vertex_count()];
            for block in rec.original_partition() {
                assert!(g.is_clique(&block));
                block.iter().for_each(|&v| seen[v] += 1);
            }
            assert!(seen.iter().all(|&c| c == 1));
            assert_eq!(partition.len(), hitting.len());
            true
        }
        Outcome::NotEhig { k, witness } => {
            assert!(*k > 1);
            assert_eq!(brute_force_ehs(&rec.model.hypergraph, None).unwrap(), None);
            if let Some(w) = witness {
                assert!(verify_forbidden_witness(g, w), "{g}");
            }
            false
        }
    }
}

#[test]
fn verdicts_match_forbidden_structure_search_on_small_graphs() {
    for s in interval_graph_classes(7).iter().flatten() {
        let g = s.to_graph();
        let ehig = check_outcome(&g);
        assert_eq!(ehig, forbidden_structure(s).is_none(), "{g}");
        let reduced = reduce_twins(&g).unwrap();
        let rec = recognize(&g, &RecognizeOptions::default()).unwrap();
        assert_eq!(reduced.graph, rec.reduction.graph);
        assert_eq!(has_exact_hitting_set(&rec.model.hypergraph), ehig);
    }
}

#[test]
fn adjacent_size_three_covers_occur_in_exactly_hittable_graphs() {
    let g = Graph::numbered(6, [(4, 0), (4, 1), (4, 5), (5, 2), (5, 3)]).unwrap();
    let rec = recognize(&g, &RecognizeOptions::default()).unwrap();
    assert!(rec.is_ehig());
    let h = &rec.reduction.graph;
    let profile = cover_size_profile(&rec.backbone, &rec.clique_path, h);
    assert_eq!(profile.sizes, [3, 3]);
    assert!(profile.adjacent_threes());
    assert!(forbidden_structure(&Small::from_graph(&g)).is_none());
}

#[test]
fn claw_middle_leaf_has_no_private_point() {
    let g = Graph::build(Vec::<&str>::new(), [("u", "a"), ("u", "b"), ("u", "c")]).unwrap();
    let rec = recognize(&g, &RecognizeOptions::default()).unwrap();
    let blocks = match build_partition_cover(&rec.backbone, &rec.clique_path, &rec.reduction.graph).unwrap() {
        PartitionCover::Valid(b) => b,
        PartitionCover::Invalid { reason, .. } => panic!("{reason}"),
    };
    assert_eq!(blocks.len(), 3);
    let err = extract_hitting_points(&rec.model, &rec.reduction.graph, &blocks).unwrap_err();
    assert_eq!(err.block.len(), 1);
    assert!(rec.is_ehig());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn certificates_verify(g in interval_graph(12)) {
        check_outcome(&g);
    }

    #[test]
    fn options_agree_on_the_verdict(g in interval_graph(10)) {
        let base = recognize(&g, &RecognizeOptions::default()).unwrap().is_ehig();
        let reversed = RecognizeOptions { reverse: true, ..Default::default() };
        let unreduced = RecognizeOptions { skip_twin_reduction: true, ..Default::default() };
        prop_assert_eq!(recognize(&g, &reversed).unwrap().is_ehig(), base);
        prop_assert_eq!(recognize(&g, &unreduced).unwrap().is_ehig(), base);
    }

    #[test]
    fn valid_partitions_are_realised_by_points(g in interval_graph(12)) {
        let rec = recognize(&g, &RecognizeOptions::default()).unwrap();
        let h = &rec.reduction.graph;
        let profile = cover_size_profile(&rec.backbone, &rec.clique_path, h);
        if profile.is_admissible() {
            if let PartitionCover::Valid(blocks) = build_partition_cover(&rec.backbone, &rec.clique_path, h).unwrap() {
                if let Ok(hit) = extract_hitting_points(&rec.model, h, &blocks) {
                    prop_assert!(exact_hit_check(&rec.model.hypergraph, &hit).unwrap().is_exact);
                    prop_assert!(rec.is_ehig());
                }
            }
        }
    }

    #[test]
    fn backbone_segments_are_walks_and_induced_unless_stalled(g in interval_graph(14)) {
        let rec = recognize(&g, &RecognizeOptions::default()).unwrap();
        let b = construct_backbone(&rec.clique_path, &rec.reduction.graph);
        prop_assert_eq!(&b, &rec.backbone);
        let vs = b.vertices();
        let h = &rec.reduction.graph;
        for seg in b.segments() {
            prop_assert!(vs[seg.clone()].windows(2).all(|w| h.adjacent(w[0], w[1])));
            if b.steps[seg.clone()].iter().all(|s| !s.stalled) {
                prop_assert!(ehig_core::ehig::is_induced_path(h, &vs[seg]));
            }
        }
    }
}
