mod common;

use proptest::prelude::*;
use szeged_core::bounds::{bridge_tail_bound, bundle_value, mixed_bundle_value, odd_cycle_bound};
use szeged_core::enumerate::{random_cactus, Enumerator};
use szeged_core::families::{self, BundleSpec};
use szeged_core::graph::{cactus_profile, cut_edges, is_connected};
use szeged_core::indices::{diff_square_sum, edge_partition, edge_revised_szeged, szeged, wiener};
use szeged_core::io::{emit_graph6, parse_graph6};
use szeged_core::{certificate, Exec, Graph, QuarterInt};

fn cactus() -> impl Strategy<Value = Graph> {
    (1usize..=40, any::<u64>(), any::<u64>()).prop_map(|(n, pick, seed)| {
        let k = (pick as usize) % ((n - 1) / 2 + 1);
        random_cactus(n, k, seed).unwrap()
    })
}

fn small_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()).prop_map(move |e| (n, e))
    })
}

fn bundle_spec() -> impl Strategy<Value = BundleSpec> {
    proptest::collection::vec(3usize..=12, 0..=5)
        .prop_flat_map(|lengths| {
            let used: usize = lengths.iter().sum();
            let room = 60usize.saturating_sub(used);
            (Just(lengths), 0..=room)
        })
        .prop_filter("at most 60 edges", |(l, p)| {
            l.iter().sum::<usize>() + p <= 60
        })
        .prop_map(|(l, p)| BundleSpec::new(l, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn certificate_ignores_labels(g in cactus().prop_filter("certificate cap", |g| g.n() <= 12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(certificate(&g).unwrap(), certificate(&g.relabel(&order)).unwrap());
    }

    #[test]
    fn difference_identity(g in cactus()) {
        let m = g.m() as i64;
        let q = edge_revised_szeged(&g).unwrap().quarters();
        prop_assert_eq!(q, m.pow(3) - diff_square_sum(&g).unwrap());
        prop_assert_eq!(q, common::quarters_of(&g));
    }

    #[test]
    fn edge_difference_bound(g in cactus()) {
        let m = g.m() as i64;
        for &(u, v) in g.edges() {
            let d = edge_partition(&g, u, v).unwrap().difference();
            prop_assert!(d * d <= (m - 1).pow(2));
            prop_assert_eq!(d * d == (m - 1).pow(2), g.is_pendant_edge(u, v));
        }
    }

    #[test]
    fn orientation_symmetry(g in cactus()) {
        for &(u, v) in g.edges() {
            prop_assert_eq!(edge_partition(&g, u, v).unwrap(), edge_partition(&g, v, u).unwrap().reversed());
        }
    }

    #[test]
    fn bundle_closed_form_matches_direct(spec in bundle_spec()) {
        let g = families::bundle(&spec).unwrap();
        let direct = QuarterInt::from_quarters(common::quarters_of(&g));
        prop_assert_eq!(bundle_value(&spec.cycle_lengths, spec.m()).unwrap(), direct);
        prop_assert_eq!(edge_revised_szeged(&g).unwrap(), direct);
    }

    #[test]
    fn cut_edges_match_removal((n, edges) in small_graph()) {
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assume!(is_connected(&g));
        let expected: Vec<(usize, usize)> = edges
            .iter()
            .filter(|&&e| {
                let rest: Vec<_> = edges.iter().copied().filter(|&f| f != e).collect();
                !common::connected(n, &rest)
            })
            .copied()
            .collect();
        let mut expected = expected;
        expected.sort_unstable();
        prop_assert_eq!(cut_edges(&g).unwrap(), expected);
    }

    #[test]
    fn cactus_test_matches_cycle_count((n, edges) in small_graph()) {
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assume!(is_connected(&g));
        let profile = cactus_profile(&g).unwrap();
        prop_assert_eq!(profile.is_cactus, common::is_cactus(n, &edges));
        if profile.is_cactus {
            prop_assert_eq!(profile.k + n, g.m() + 1);
        }
    }

    #[test]
    fn random_cacti_are_sound(n in 1usize..=60, pick in any::<usize>(), seed in any::<u64>()) {
        let k = pick % ((n - 1) / 2 + 1);
        let g = random_cactus(n, k, seed).unwrap();
        let p = cactus_profile(&g).unwrap();
        prop_assert!(p.is_cactus);
        prop_assert_eq!((g.n(), g.m(), p.k), (n, n + k - 1, k));
        prop_assert_eq!(g, random_cactus(n, k, seed).unwrap());
    }
}

#[test]
fn mixed_bundles_follow_closed_form() {
    for k in 0..=5usize {
        for t in 0..=k {
            for m in (3 * t + 4 * (k - t)).max(1)..=40 {
                let lengths: Vec<usize> = [vec![3; t], vec![4; k - t]].concat();
                let g = mixed_bundle_value(t, k, m).unwrap();
                assert_eq!(
                    g.value,
                    bundle_value(&lengths, m).unwrap(),
                    "t={t} k={k} m={m}"
                );
                if t < k {
                    let next = mixed_bundle_value(t + 1, k, m).unwrap().value;
                    let mm = m as i64;
                    assert_eq!((next - g.value).quarters(), (mm - 9).pow(2) - 36);
                }
            }
        }
    }
}

#[test]
fn lengthening_a_cycle_raises_the_bundle_value() {
    fn specs(k: usize, min: usize, budget: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for l in min..=budget {
            for mut rest in specs(k - 1, l, budget - l) {
                rest.insert(0, l);
                out.push(rest);
            }
        }
        out
    }
    for m in 3..=40 {
        for k in 1..=4 {
            for lengths in specs(k, 3, m) {
                let base = bundle_value(&lengths, m).unwrap();
                for i in 0..k {
                    if lengths.iter().sum::<usize>() + 2 > m {
                        continue;
                    }
                    let mut longer = lengths.clone();
                    longer[i] += 2;
                    assert!(
                        bundle_value(&longer, m).unwrap() > base,
                        "{lengths:?} m={m} at {i}"
                    );
                }
            }
        }
    }
}

#[test]
fn second_bound_closed_forms() {
    for m in 16..=30usize {
        for k in 1..=(m - 1) / 4 {
            let (mm, kk) = (m as i64, k as i64);
            let tail = QuarterInt::from_quarters(2 * mm * mm + 3 * mm + 4 * kk * (6 * mm - 15) - 8);
            let triangle =
                QuarterInt::from_quarters(3 * mm * mm - 19 * mm + 4 * kk * (6 * mm - 15) + 45);
            assert_eq!(bridge_tail_bound(m, k).unwrap(), tail);
            assert_eq!(odd_cycle_bound(m, k).unwrap(), triangle);
        }
    }
}

#[test]
fn graph6_round_trip_on_enumerated_cacti() {
    let e = Enumerator::new(Exec::Sequential);
    for n in 1..=8 {
        for k in 0..=(n - 1) / 2 {
            for class in e.classes(n, k).unwrap() {
                let text = emit_graph6(&class.graph).unwrap();
                assert_eq!(parse_graph6(&text).unwrap(), class.graph);
            }
        }
    }
}

#[test]
fn trees_have_equal_szeged_and_wiener() {
    let e = Enumerator::new(Exec::Sequential);
    for n in 1..=9 {
        for class in e.classes(n, 0).unwrap() {
            let g = &class.graph;
            assert_eq!(szeged(g).unwrap(), wiener(g).unwrap());
            assert_eq!(wiener(g).unwrap(), common::wiener(g.n(), g.edges()));
            assert_eq!(szeged(g).unwrap(), common::vertex_szeged(g.n(), g.edges()));
        }
    }
}
