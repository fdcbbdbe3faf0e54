//! Exhaustive enumeration of labeled graphs on few vertices.
//!
//! A graph on `n` vertices corresponds to a bit mask over the `n(n-1)/2`
//! vertex pairs, ordered `(0,1), (0,2), (1,2), (0,3), ..` — the same column
//! order used by graph6. Enumeration walks masks in increasing order, so any
//! sweep over these graphs is deterministic and chunkable.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Hard cap for exhaustive sweeps: `n = 7` already means 2^21 masks.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration supports 1..={MAX_ENUMERATION_VERTICES} vertices, got {0}")]
    OutOfRange(usize),
}

fn check_range(n: usize) -> Result<(), EnumerateError> {
    if (1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(EnumerateError::OutOfRange(n))
    }
}

/// Number of vertex pairs, i.e. bits in a mask.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Number of labeled graphs on `n` vertices (`2^pairs`).
#[inline]
pub fn mask_count(n: usize) -> u64 {
    1 << pair_count(n)
}

/// Materialize the graph for an edge mask.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    debug_assert!(pair_count(n) <= 64 && mask < mask_count(n).max(1));
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj, None).expect("mask adjacency is symmetric and loop-free")
}

/// Connectivity test for an edge mask without allocating a [`Graph`].
pub fn mask_is_connected(n: usize, mask: u64) -> bool {
    debug_assert!(n <= MAX_ENUMERATION_VERTICES);
    if n == 1 {
        return true;
    }
    let mut adj = [0u64; MAX_ENUMERATION_VERTICES];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    let full = (1u64 << n) - 1;
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen == full
}

/// All labeled graphs on `n` vertices, in mask order.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    check_range(n)?;
    Ok((0..mask_count(n)).map(move |mask| graph_from_mask(n, mask)))
}

/// All connected labeled graphs on `n` vertices, in mask order.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    check_range(n)?;
    Ok((0..mask_count(n))
        .filter(move |&mask| mask_is_connected(n, mask))
        .map(move |mask| graph_from_mask(n, mask)))
}
