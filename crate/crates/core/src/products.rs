//! Graph products and the counting helpers tied to them.
//!
//! Three products of graphs `G` and `H` are supported, each with a
//! closed-form distance law that is validated against BFS in tests:
//!
//! * **Cartesian** `G x H`: `(g1, h1) ~ (g2, h2)` iff one coordinate is equal
//!   and the other adjacent. Distances add: `d = d_G + d_H`.
//! * **Lexicographic** `G[H]`: adjacent iff `g1 ~ g2`, or `g1 = g2` and
//!   `h1 ~ h2`. For distinct layers of a connected `G` the distance is
//!   `d_G(g1, g2)`; within a layer it is 1 across an `H`-edge and otherwise 2
//!   (when `g1` has any neighbor), falling back to `d_H` for isolated `g1`.
//! * **Corona** `G o H`: the roots induce a copy of `G` and each root is
//!   joined to a private copy of `H`. Between distinct roots the distance is
//!   `d_G`; entering or leaving a copy costs one extra step, and two
//!   vertices in the same copy are at distance 1 or 2 (via their root).
//!
//! Product vertices are `(g, h)` pairs; for the corona, `h = None` marks the
//! root `(g, 0)` and `h = Some(i)` the `i`-th vertex of the copy at `g`.

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::{Graph, GraphError, VertexId};
use crate::metrics::{all_pairs_distances, DistanceMatrix, PairSide, UNREACHABLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Corona,
}

impl std::fmt::Display for ProductKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Corona => "corona",
        })
    }
}

/// A vertex of a product graph. `h = None` is the corona root of layer `g`;
/// cartesian and lexicographic products use `h = Some(..)` everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductVertex {
    pub g: VertexId,
    pub h: Option<VertexId>,
}

impl ProductVertex {
    pub fn new(g: VertexId, h: VertexId) -> ProductVertex {
        ProductVertex { g, h: Some(h) }
    }

    pub fn root(g: VertexId) -> ProductVertex {
        ProductVertex { g, h: None }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("root vertices only exist in corona products")]
    RootOutsideCorona,
    #[error("product vertex ({g}, {h:?}) out of range")]
    VertexOutOfRange { g: usize, h: Option<usize> },
    #[error("pair must be distinct vertices")]
    SamePair,
    #[error("pair at distance {found} but at least {needed} required")]
    PairTooClose { needed: u32, found: u32 },
    #[error("pair is unreachable; factor must be connected")]
    UnreachablePair,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A product graph together with its factors and their distance matrices.
pub struct ProductGraph {
    kind: ProductKind,
    graph: Graph,
    g: Graph,
    h: Graph,
    dg: DistanceMatrix,
    dh: DistanceMatrix,
}

impl ProductGraph {
    /// Cartesian product `G x H`.
    pub fn cartesian(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
        let (gn, hn) = (g.n(), h.n());
        check_size(gn * hn)?;
        let mut adj = vec![VertexSet::EMPTY; gn * hn];
        for g1 in 0..gn {
            for h1 in 0..hn {
                let x = g1 * hn + h1;
                for h2 in h.neighbors(h1).iter() {
                    adj[x].insert(g1 * hn + h2);
                }
                for g2 in g.neighbors(g1).iter() {
                    adj[x].insert(g2 * hn + h1);
                }
            }
        }
        Self::assemble(ProductKind::Cartesian, adj, g, h, "x")
    }

    /// Lexicographic product `G[H]`.
    pub fn lexicographic(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
        let (gn, hn) = (g.n(), h.n());
        check_size(gn * hn)?;
        let layer = VertexSet::full(hn);
        let mut adj = vec![VertexSet::EMPTY; gn * hn];
        for g1 in 0..gn {
            for h1 in 0..hn {
                let x = g1 * hn + h1;
                for h2 in h.neighbors(h1).iter() {
                    adj[x].insert(g1 * hn + h2);
                }
                for g2 in g.neighbors(g1).iter() {
                    adj[x] |= VertexSet::from_bits(layer.bits() << (g2 * hn));
                }
            }
        }
        Self::assemble(ProductKind::Lexicographic, adj, g, h, "lex")
    }

    /// Corona product `G o H`: vertices `0..n_G` are the roots (inducing
    /// `G`), followed by one block of `n_H` copy vertices per root.
    pub fn corona(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
        let (gn, hn) = (g.n(), h.n());
        check_size(gn + gn * hn)?;
        let mut adj = vec![VertexSet::EMPTY; gn + gn * hn];
        for g1 in 0..gn {
            for g2 in g.neighbors(g1).iter() {
                adj[g1].insert(g2);
            }
            let base = gn + g1 * hn;
            for h1 in 0..hn {
                adj[g1].insert(base + h1);
                adj[base + h1].insert(g1);
                for h2 in h.neighbors(h1).iter() {
                    adj[base + h1].insert(base + h2);
                }
            }
        }
        Self::assemble(ProductKind::Corona, adj, g, h, "o")
    }

    fn assemble(
        kind: ProductKind,
        adj: Vec<VertexSet>,
        g: &Graph,
        h: &Graph,
        symbol: &str,
    ) -> Result<ProductGraph, GraphError> {
        let label = match (g.label(), h.label()) {
            (Some(a), Some(b)) => Some(format!("{a} {symbol} {b}")),
            _ => None,
        };
        let graph = Graph::from_adjacency(adj, label)?;
        Ok(ProductGraph {
            kind,
            graph,
            g: g.clone(),
            h: h.clone(),
            dg: all_pairs_distances(g),
            dh: all_pairs_distances(h),
        })
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn g_factor(&self) -> &Graph {
        &self.g
    }

    pub fn h_factor(&self) -> &Graph {
        &self.h
    }

    /// Flat index of a product vertex.
    pub fn flat(&self, x: ProductVertex) -> Result<usize, ProductError> {
        let hn = self.h.n();
        match (self.kind, x.h) {
            (ProductKind::Corona, None) if x.g < self.g.n() => Ok(x.g),
            (ProductKind::Corona, Some(h)) if x.g < self.g.n() && h < hn => {
                Ok(self.g.n() + x.g * hn + h)
            }
            (ProductKind::Cartesian | ProductKind::Lexicographic, Some(h))
                if x.g < self.g.n() && h < hn =>
            {
                Ok(x.g * hn + h)
            }
            (ProductKind::Cartesian | ProductKind::Lexicographic, None) => {
                Err(ProductError::RootOutsideCorona)
            }
            _ => Err(ProductError::VertexOutOfRange { g: x.g, h: x.h }),
        }
    }

    /// Product vertex of a flat index.
    pub fn unflat(&self, ix: usize) -> ProductVertex {
        debug_assert!(ix < self.graph.n());
        let hn = self.h.n();
        match self.kind {
            ProductKind::Cartesian | ProductKind::Lexicographic => {
                ProductVertex::new(ix / hn, ix % hn)
            }
            ProductKind::Corona => {
                if ix < self.g.n() {
                    ProductVertex::root(ix)
                } else {
                    let rest = ix - self.g.n();
                    ProductVertex::new(rest / hn, rest % hn)
                }
            }
        }
    }

    /// Distance between two product vertices by the closed-form law of the
    /// product, without BFS on the product graph.
    pub fn formula_distance(&self, x: ProductVertex, y: ProductVertex) -> Result<u32, ProductError> {
        self.flat(x)?;
        self.flat(y)?;
        Ok(match self.kind {
            ProductKind::Cartesian => {
                let (h1, h2) = (x.h.unwrap(), y.h.unwrap());
                add_inf(self.dg.dist(x.g, y.g), self.dh.dist(h1, h2))
            }
            ProductKind::Lexicographic => {
                let (h1, h2) = (x.h.unwrap(), y.h.unwrap());
                if x.g != y.g {
                    self.dg.dist(x.g, y.g)
                } else if h1 == h2 {
                    0
                } else if self.h.has_edge(h1, h2) {
                    1
                } else if self.g.degree(x.g) > 0 {
                    // Any neighboring layer provides a common neighbor.
                    2
                } else {
                    self.dh.dist(h1, h2)
                }
            }
            ProductKind::Corona => {
                if x.g != y.g {
                    let hops = u32::from(x.h.is_some()) + u32::from(y.h.is_some());
                    add_inf(self.dg.dist(x.g, y.g), hops)
                } else {
                    match (x.h, y.h) {
                        (None, None) => 0,
                        (None, Some(_)) | (Some(_), None) => 1,
                        (Some(h1), Some(h2)) => {
                            if h1 == h2 {
                                0
                            } else if self.h.has_edge(h1, h2) {
                                1
                            } else {
                                // Through the shared root.
                                2
                            }
                        }
                    }
                }
            }
        })
    }

    /// Check the distance law against BFS distances of the product on every
    /// ordered vertex pair.
    pub fn check_distance_formula(&self, dp: &DistanceMatrix) -> Result<(), FormulaMismatch> {
        let n = self.graph.n();
        assert_eq!(dp.n(), n, "distance matrix belongs to another graph");
        for x in 0..n {
            for y in 0..n {
                let formula = self
                    .formula_distance(self.unflat(x), self.unflat(y))
                    .expect("unflat yields valid vertices");
                if formula != dp.dist(x, y) {
                    return Err(FormulaMismatch {
                        x,
                        y,
                        formula,
                        bfs: dp.dist(x, y),
                    });
                }
            }
        }
        Ok(())
    }
}

#[inline]
fn add_inf(a: u32, b: u32) -> u32 {
    if a == UNREACHABLE || b == UNREACHABLE {
        UNREACHABLE
    } else {
        a + b
    }
}

fn check_size(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// A disagreement between a product distance law and BFS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaMismatch {
    pub x: usize,
    pub y: usize,
    pub formula: u32,
    pub bfs: u32,
}

impl std::fmt::Display for FormulaMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "distance law gives {} for pair ({}, {}) but BFS finds {}",
            self.formula, self.x, self.y, self.bfs
        )
    }
}

/// Size of the W-set of `(x, y)` in a lexicographic product `G[H]` where
/// `x = (g1, h1)`, `y = (g2, h2)` and `d_G(g1, g2) >= 3`: every vertex of
/// `W(g1, g2)`'s layers is strictly closer, so the size is
/// `|W(g1, g2)| * |V(H)|` independent of `h1, h2`.
pub fn lex_w_count(
    dg: &DistanceMatrix,
    g1: VertexId,
    g2: VertexId,
    h_order: usize,
) -> Result<usize, ProductError> {
    let d = dg.dist(g1, g2);
    if d == UNREACHABLE {
        return Err(ProductError::UnreachablePair);
    }
    if d < 3 {
        return Err(ProductError::PairTooClose { needed: 3, found: d });
    }
    let (cu, _) = crate::metrics::w_counts(dg, g1, g2);
    Ok(cu * h_order)
}

/// Classify a vertex `z` of `K_n x H` relative to the pair `(x, y)` without
/// touching the product graph, by the layer cases:
///
/// * same layer as `x` (`z.g == x.g`): closer to `x` iff `d_H(h, h1) <= d_H(h, h2)`,
/// * same layer as `y`: closer to `x` iff `h` is closer to `h1` by at least two,
/// * any other layer: decided by strict `d_H` comparison alone,
///
/// with the roles swapped for membership on the `y` side, and the remaining
/// vertices equidistant. When `x` and `y` share a layer the classification
/// reduces to the W-partition of `(h1, h2)` in `H`.
pub fn cart_membership(
    n: usize,
    dh: &DistanceMatrix,
    x: (VertexId, VertexId),
    y: (VertexId, VertexId),
    z: (VertexId, VertexId),
) -> Result<PairSide, ProductError> {
    let hn = dh.n();
    for &(g, h) in [&x, &y, &z] {
        if g >= n || h >= hn {
            return Err(ProductError::VertexOutOfRange { g, h: Some(h) });
        }
    }
    if x == y {
        return Err(ProductError::SamePair);
    }
    let ((g1, h1), (g2, h2), (g, h)) = (x, y, z);
    let d1 = dh.dist(h, h1);
    let d2 = dh.dist(h, h2);
    if d1 == UNREACHABLE || d2 == UNREACHABLE {
        return Err(ProductError::UnreachablePair);
    }
    let (in_x, in_y) = if g1 == g2 {
        (d1 < d2, d2 < d1)
    } else if g == g1 {
        (d1 <= d2, d2 < d1 && d2 != d1 - 1)
    } else if g == g2 {
        (d1 < d2 && d1 != d2 - 1, d2 <= d1)
    } else {
        (d1 < d2, d2 < d1)
    };
    debug_assert!(!(in_x && in_y));
    Ok(if in_x {
        PairSide::CloserU
    } else if in_y {
        PairSide::CloserV
    } else {
        PairSide::Equidistant
    })
}

/// For a vertex pair `(h1, h2)` of `H`, count on each side the vertices of
/// the W-set whose two distances differ by exactly one:
/// `(|{h in W(h1, h2) : d(h1, h) = d(h2, h) - 1}|, same with roles swapped)`.
pub fn w_step_counts(dh: &DistanceMatrix, h1: VertexId, h2: VertexId) -> (usize, usize) {
    let mut left = 0;
    let mut right = 0;
    for h in 0..dh.n() {
        let d1 = dh.dist(h1, h) as u64;
        let d2 = dh.dist(h2, h) as u64;
        left += usize::from(d1 + 1 == d2);
        right += usize::from(d2 + 1 == d1);
    }
    (left, right)
}

/// For an ordered pair `(g1, g2)`, the two side counts that govern balance
/// of mixed root/copy pairs in a corona product:
/// `(|{g : d(g1, g) + 2 <= d(g2, g)}|, |{g : d(g2, g) <= d(g1, g)}|)`.
pub fn corona_side_counts(dg: &DistanceMatrix, g1: VertexId, g2: VertexId) -> (usize, usize) {
    let mut left = 0;
    let mut right = 0;
    for g in 0..dg.n() {
        let d1 = dg.dist(g1, g) as u64;
        let d2 = dg.dist(g2, g) as u64;
        left += usize::from(d1 + 2 <= d2);
        right += usize::from(d2 <= d1);
    }
    (left, right)
}

/// Partition of the vertex set by the distance offset `d(u, x) - d(v, x)`,
/// clamped to `[-2, 2]`: five buckets from "closer to `u` by at least two"
/// to "farther from `u` by at least two".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FivePartition {
    pub closer_two: VertexSet,
    pub closer_one: VertexSet,
    pub equidistant: VertexSet,
    pub farther_one: VertexSet,
    pub farther_two: VertexSet,
}

impl FivePartition {
    pub fn counts(&self) -> [usize; 5] {
        [
            self.closer_two.len(),
            self.closer_one.len(),
            self.equidistant.len(),
            self.farther_one.len(),
            self.farther_two.len(),
        ]
    }
}

/// Compute the offset partition for a pair at distance at least two in a
/// connected graph.
pub fn five_partition(
    d: &DistanceMatrix,
    u: VertexId,
    v: VertexId,
) -> Result<FivePartition, ProductError> {
    let duv = d.dist(u, v);
    if duv == UNREACHABLE {
        return Err(ProductError::UnreachablePair);
    }
    if duv < 2 {
        return Err(ProductError::PairTooClose {
            needed: 2,
            found: duv,
        });
    }
    let mut p = FivePartition {
        closer_two: VertexSet::EMPTY,
        closer_one: VertexSet::EMPTY,
        equidistant: VertexSet::EMPTY,
        farther_one: VertexSet::EMPTY,
        farther_two: VertexSet::EMPTY,
    };
    for x in 0..d.n() {
        let du = d.dist(u, x);
        let dv = d.dist(v, x);
        if du == UNREACHABLE || dv == UNREACHABLE {
            return Err(ProductError::UnreachablePair);
        }
        let offset = du as i64 - dv as i64;
        if offset <= -2 {
            p.closer_two.insert(x);
        } else if offset == -1 {
            p.closer_one.insert(x);
        } else if offset == 0 {
            p.equidistant.insert(x);
        } else if offset == 1 {
            p.farther_one.insert(x);
        } else {
            p.farther_two.insert(x);
        }
    }
    Ok(p)
}
