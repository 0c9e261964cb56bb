mod common;

use proptest::prelude::*;

use common::{has_exact_hitting_set, minimax_membership};
use ehig_core::generate::{random_hypergraph, rng};
use ehig_core::hyperkit::{
    brute_force_ehs, exact_hit_check, exactly_hittable, is_proper, min_membership_hitting, proper_greedy_ehs,
    HittingSet, Interval, IntervalHypergraph,
};

fn hypergraph(max_points: usize, max_intervals: usize) -> impl Strategy<Value = IntervalHypergraph> {
    (1..=max_points, 0..=max_intervals, any::<u64>()).prop_map(|(n, m, seed)| random_hypergraph(n, m, &mut rng(seed)))
}

/// Proper staircase: equal lengths, so no interval strictly inside another.
fn staircase() -> impl Strategy<Value = IntervalHypergraph> {
    (1usize..=6, prop::collection::vec(1usize..=12, 0..=10)).prop_map(|(len, starts)| {
        let n = 12 + len - 1;
        let ivs = starts
            .iter()
            .enumerate()
            .map(|(i, &l)| Interval::new(format!("S{i}"), l, l + len - 1))
            .collect();
        IntervalHypergraph::new(n, ivs)
    })
}

/// Lexicographically smallest exact hitting set by enumerating every
/// subset of points.
fn smallest_exact(h: &IntervalHypergraph) -> Option<Vec<usize>> {
    let n = h.points();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1 << n) {
        let pts: Vec<usize> = (1..=n).filter(|p| mask >> (p - 1) & 1 == 1).collect();
        let exact = h
            .intervals()
            .iter()
            .all(|i| pts.iter().filter(|&&p| i.contains(p)).count() == 1);
        if exact && best.as_ref().is_none_or(|b| pts < *b) {
            best = Some(pts);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn exact_solver_agrees_with_enumeration(h in hypergraph(15, 10)) {
        let found = exactly_hittable(&h).unwrap();
        prop_assert_eq!(found.is_some(), has_exact_hitting_set(&h));
        if let Some(s) = found {
            prop_assert!(exact_hit_check(&h, &s).unwrap().is_exact);
        }
    }

    #[test]
    fn brute_force_is_lexicographically_first(h in hypergraph(10, 7)) {
        let bf = brute_force_ehs(&h, None).unwrap().map(|s| s.points().to_vec());
        prop_assert_eq!(bf, smallest_exact(&h));
    }

    #[test]
    fn membership_value_matches_minimax(h in hypergraph(14, 9)) {
        let got = min_membership_hitting(&h).unwrap();
        prop_assert_eq!(got.k, minimax_membership(&h).unwrap_or(0));
        let longest = h.intervals().iter().map(Interval::len).max().unwrap_or(0);
        prop_assert!(got.k <= longest);
        for i in h.intervals() {
            let c = got.points.points().iter().filter(|&&p| i.contains(p)).count();
            prop_assert!(c >= 1 && c <= got.k);
        }
        prop_assert_eq!(got.k <= 1, exactly_hittable(&h).unwrap().is_some());
    }

    #[test]
    fn greedy_hits_staircases_exactly(h in staircase()) {
        prop_assert!(is_proper(&h));
        let s = proper_greedy_ehs(&h).unwrap();
        prop_assert!(exact_hit_check(&h, &s).unwrap().is_exact);
    }

    #[test]
    fn answers_are_deterministic(h in hypergraph(12, 8)) {
        prop_assert_eq!(min_membership_hitting(&h).unwrap(), min_membership_hitting(&h).unwrap());
        prop_assert_eq!(exactly_hittable(&h).unwrap(), exactly_hittable(&h).unwrap());
    }
}

#[test]
fn membership_can_exceed_every_point_load() {
    // Singletons force all three points, yet no point lies in three intervals.
    let h = IntervalHypergraph::from_pairs(3, &[(1, 3), (1, 1), (2, 2), (3, 3)]);
    assert_eq!(h.point_loads().iter().max(), Some(&2));
    assert_eq!(min_membership_hitting(&h).unwrap().k, 3);
    assert_eq!(minimax_membership(&h), Some(3));
}

#[test]
fn nested_intervals_are_not_proper() {
    let h = IntervalHypergraph::from_pairs(4, &[(1, 4), (2, 3)]);
    assert!(!is_proper(&h));
    assert!(proper_greedy_ehs(&h).is_err());
}

#[test]
fn empty_hypergraph_conventions() {
    let h = IntervalHypergraph::new(3, Vec::new());
    let m = min_membership_hitting(&h).unwrap();
    assert!(m.is_vacuous());
    assert_eq!(exactly_hittable(&h).unwrap(), Some(HittingSet::empty()));
}
