//! End-to-end fixtures: named graphs with known balance behavior, product
//! laws validated exhaustively at small orders, and the layer classifier
//! checked against brute-force BFS.

use dbal_core::enumerate::{enumerate_all, enumerate_connected};
use dbal_core::graph::{Family, Graph};
use dbal_core::graph6::{parse_graph6, to_graph6};
use dbal_core::metrics::{all_pairs_distances, balance_profile, pair_side};
use dbal_core::products::{cart_membership, ProductGraph};

fn profile_of(g: &Graph) -> Vec<bool> {
    let d = all_pairs_distances(g);
    balance_profile(&d)
        .unwrap()
        .verdicts
        .iter()
        .map(|v| v.balanced)
        .collect()
}

#[test]
fn cycles_and_complete_graphs_are_highly_balanced() {
    for n in 3..=12 {
        let c = Family::Cycle(n).build().unwrap();
        assert!(
            profile_of(&c).iter().all(|&b| b),
            "C{n} should be balanced at every distance"
        );
    }
    for n in 2..=8 {
        let k = Family::Complete(n).build().unwrap();
        assert_eq!(profile_of(&k), vec![true], "K{n}");
    }
}

#[test]
fn the_three_cube_is_highly_balanced() {
    let k2 = Family::Complete(2).build().unwrap();
    let c4 = Family::Cycle(4).build().unwrap();
    let q3 = ProductGraph::cartesian(&k2, &c4).unwrap();
    assert_eq!(q3.graph().n(), 8);
    assert_eq!(profile_of(q3.graph()), vec![true, true, true]);
}

#[test]
fn path_profiles() {
    let p4 = Family::Path(4).build().unwrap();
    assert_eq!(profile_of(&p4), vec![false, false, true]);

    let k23 = Family::CompleteBipartite(2, 3).build().unwrap();
    assert_eq!(profile_of(&k23), vec![false, true]);

    let w6 = Family::Wheel(6).build().unwrap();
    assert_eq!(profile_of(&w6), vec![false, true]);
}

#[test]
fn distance_formulas_hold_exhaustively_at_small_orders() {
    let hs: Vec<Graph> = (1..=3).flat_map(|n| enumerate_all(n).unwrap()).collect();
    for n in 1..=3 {
        for g in enumerate_connected(n).unwrap() {
            for h in &hs {
                for p in [
                    ProductGraph::cartesian(&g, h).unwrap(),
                    ProductGraph::lexicographic(&g, h).unwrap(),
                    ProductGraph::corona(&g, h).unwrap(),
                ] {
                    let dp = all_pairs_distances(p.graph());
                    if let Err(m) = p.check_distance_formula(&dp) {
                        panic!("{:?} of {g:?} and {h:?}: {m}", p.kind());
                    }
                }
            }
        }
    }
}

#[test]
fn corona_adds_two_to_the_diameter() {
    let hs: Vec<Graph> = (1..=2).flat_map(|n| enumerate_all(n).unwrap()).collect();
    for n in 2..=4 {
        for g in enumerate_connected(n).unwrap() {
            let dg = all_pairs_distances(&g).diameter().unwrap();
            for h in &hs {
                let p = ProductGraph::corona(&g, h).unwrap();
                let dp = all_pairs_distances(p.graph()).diameter().unwrap();
                assert_eq!(dp, dg + 2, "corona of {g:?} and {h:?}");
            }
        }
    }
}

#[test]
fn layer_classifier_agrees_with_bfs() {
    let factors = [
        (2, Family::Cycle(5).build().unwrap()),
        (3, Family::Path(4).build().unwrap()),
        (2, Family::CompleteBipartite(2, 3).build().unwrap()),
    ];
    for (n, h) in factors {
        let kn = Family::Complete(n).build().unwrap();
        let p = ProductGraph::cartesian(&kn, &h).unwrap();
        let dp = all_pairs_distances(p.graph());
        let dh = all_pairs_distances(&h);
        let nv = p.graph().n();
        for fx in 0..nv {
            for fy in 0..nv {
                if fx == fy {
                    continue;
                }
                let x = p.unflat(fx);
                let y = p.unflat(fy);
                for fz in 0..nv {
                    let z = p.unflat(fz);
                    let fast = cart_membership(
                        n,
                        &dh,
                        (x.g, x.h.unwrap()),
                        (y.g, y.h.unwrap()),
                        (z.g, z.h.unwrap()),
                    )
                    .unwrap();
                    let brute = pair_side(&dp, fx, fy, fz);
                    assert_eq!(fast, brute, "triple ({fx}, {fy}, {fz}) in K{n} x {h:?}");
                }
            }
        }
    }
}

#[test]
fn graph6_round_trips_every_small_graph() {
    for n in 1..=5 {
        for g in enumerate_all(n).unwrap() {
            let s = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
