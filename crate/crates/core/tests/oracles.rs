//! Independent oracles for the two pillars everything else stands on:
//! shortest-path distances and the exhaustive enumeration of connected
//! graphs. Each oracle is implemented from scratch with a different
//! algorithm than the library uses, so agreement is meaningful.

use dbal_core::enumerate::{enumerate_all, enumerate_connected};
use dbal_core::graph::Graph;
use dbal_core::metrics::{all_pairs_distances, UNREACHABLE};

/// Floyd–Warshall over an explicit matrix, saturating instead of
/// overflowing on unreachable entries.
fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    const INF: u64 = u64::MAX / 4;
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

#[test]
fn bfs_distances_match_floyd_warshall_exhaustively() {
    const INF: u64 = u64::MAX / 4;
    for n in 1..=5 {
        for g in enumerate_all(n).unwrap() {
            let bfs = all_pairs_distances(&g);
            let fw = floyd_warshall(&g);
            for (u, row) in fw.iter().enumerate() {
                for (v, &expected) in row.iter().enumerate() {
                    let got = bfs.dist(u, v);
                    if expected >= INF {
                        assert_eq!(got, UNREACHABLE, "({u}, {v}) in {g:?}");
                    } else {
                        assert_eq!(u64::from(got), expected, "({u}, {v}) in {g:?}");
                    }
                }
            }
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of labeled connected graphs on `n` vertices via the standard
/// recurrence: subtract, from all graphs, those whose component containing
/// vertex 1 has k < n vertices.
fn connected_count(n: u64) -> u64 {
    fn all_graphs(n: u64) -> u64 {
        1u64 << (n * (n - 1) / 2)
    }
    let mut c = vec![0u64; n as usize + 1];
    for m in 1..=n {
        let mut total = all_graphs(m);
        for k in 1..m {
            total -= binomial(m - 1, k - 1) * c[k as usize] * all_graphs(m - k);
        }
        c[m as usize] = total;
    }
    c[n as usize]
}

#[test]
fn enumeration_agrees_with_the_counting_recurrence() {
    for n in 1..=6 {
        let enumerated = enumerate_connected(n).unwrap().count() as u64;
        assert_eq!(enumerated, connected_count(n as u64), "n = {n}");
    }
}

#[test]
fn connected_counts_match_the_known_sequence() {
    // 1, 1, 4, 38, 728, 26704, 1866256 labeled connected graphs.
    let known = [1, 1, 4, 38, 728, 26704, 1866256];
    for (i, &expected) in known.iter().enumerate() {
        assert_eq!(connected_count(i as u64 + 1), expected);
    }
    assert_eq!(enumerate_connected(5).unwrap().count(), 728);
}

#[test]
fn every_enumerated_graph_is_simple_and_distinct() {
    for n in 1..=4 {
        let graphs: Vec<Graph> = enumerate_all(n).unwrap().collect();
        assert_eq!(graphs.len(), 1usize << (n * (n - 1) / 2));
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }
}
