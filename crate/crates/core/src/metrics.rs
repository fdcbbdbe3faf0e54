//! Distance-based metrics: BFS distances, W-partitions, and the
//! distance-balance predicates built on them.
//!
//! For distinct vertices `u, v` the set `W(u, v)` collects the vertices
//! strictly closer to `u` than to `v`. A connected graph is
//! `l`-distance-balanced when every pair at distance exactly `l` satisfies
//! `|W(u, v)| = |W(v, u)|`; the property is only defined for
//! `1 <= l <= diam`, and out-of-range `l` is reported as not applicable
//! rather than vacuously true.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, VertexId};

/// Distance value for unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MetricsError {
    #[error("vertices {0} and {1} must be distinct")]
    SamePair(VertexId, VertexId),
    #[error("vertices {0} and {1} are in different components")]
    UnreachablePair(VertexId, VertexId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("l = {l} is outside [1, diam = {diam}]: balance at l is not applicable")]
    NotApplicable { l: u32, diam: u32 },
}

/// All-pairs distances of a graph, `UNREACHABLE` marking distinct components.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v]
    }

    /// Largest distance, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut max = 0;
        for &d in &self.d {
            if d == UNREACHABLE {
                return None;
            }
            max = max.max(d);
        }
        Some(max)
    }

    pub fn is_connected(&self) -> bool {
        self.diameter().is_some()
    }
}

/// BFS from every vertex. Runs in `O(n)` word operations per vertex thanks to
/// frontier expansion over bitsets.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut dist = 0;
        while !frontier.is_empty() {
            for v in frontier.iter() {
                row[v] = dist;
            }
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= g.neighbors(v);
            }
            frontier = next.minus(seen);
            seen |= frontier;
            dist += 1;
        }
    }
    DistanceMatrix { n, d }
}

/// Distance shells around `x`: element `k` is the set of vertices at
/// distance exactly `k`, up to the eccentricity of `x`. Vertices in other
/// components appear in no shell.
pub fn shells(d: &DistanceMatrix, x: VertexId) -> Vec<VertexSet> {
    let mut ecc = 0;
    for v in 0..d.n() {
        let dist = d.dist(x, v);
        if dist != UNREACHABLE {
            ecc = ecc.max(dist);
        }
    }
    let mut out = vec![VertexSet::EMPTY; ecc as usize + 1];
    for v in 0..d.n() {
        let dist = d.dist(x, v);
        if dist != UNREACHABLE {
            out[dist as usize].insert(v);
        }
    }
    out
}

/// The three-way split of the vertex set by relative distance to `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPartition {
    pub u: VertexId,
    pub v: VertexId,
    /// Vertices strictly closer to `u`, i.e. `W(u, v)`.
    pub closer_u: VertexSet,
    pub equidistant: VertexSet,
    /// Vertices strictly closer to `v`, i.e. `W(v, u)`.
    pub closer_v: VertexSet,
}

/// Where a vertex lands relative to an ordered pair `(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSide {
    CloserU,
    Equidistant,
    CloserV,
}

/// Classify `x` by comparing its distances to `u` and to `v`.
#[inline]
pub fn pair_side(d: &DistanceMatrix, u: VertexId, v: VertexId, x: VertexId) -> PairSide {
    let du = d.dist(x, u);
    let dv = d.dist(x, v);
    match du.cmp(&dv) {
        std::cmp::Ordering::Less => PairSide::CloserU,
        std::cmp::Ordering::Equal => PairSide::Equidistant,
        std::cmp::Ordering::Greater => PairSide::CloserV,
    }
}

/// Compute the W-partition of a pair. Requires `u != v` in a common
/// component; unreachable vertices (in other components) are classified as
/// equidistant, matching the convention that only connected graphs are
/// analyzed for balance.
pub fn w_partition(d: &DistanceMatrix, u: VertexId, v: VertexId) -> Result<WPartition, MetricsError> {
    if u == v {
        return Err(MetricsError::SamePair(u, v));
    }
    if d.dist(u, v) == UNREACHABLE {
        return Err(MetricsError::UnreachablePair(u, v));
    }
    let mut p = WPartition {
        u,
        v,
        closer_u: VertexSet::EMPTY,
        equidistant: VertexSet::EMPTY,
        closer_v: VertexSet::EMPTY,
    };
    for x in 0..d.n() {
        match pair_side(d, u, v, x) {
            PairSide::CloserU => p.closer_u.insert(x),
            PairSide::Equidistant => p.equidistant.insert(x),
            PairSide::CloserV => p.closer_v.insert(x),
        }
    }
    Ok(p)
}

/// `(|W(u, v)|, |W(v, u)|)` without materializing the sets.
#[inline]
pub fn w_counts(d: &DistanceMatrix, u: VertexId, v: VertexId) -> (usize, usize) {
    let mut cu = 0;
    let mut cv = 0;
    for x in 0..d.n() {
        let du = d.dist(x, u);
        let dv = d.dist(x, v);
        cu += usize::from(du < dv);
        cv += usize::from(dv < du);
    }
    (cu, cv)
}

/// Verdict of a balance check at one `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Balance {
    Balanced,
    /// The lexicographically first pair at distance `l` with unequal W-sizes.
    Unbalanced { u: VertexId, v: VertexId },
}

impl Balance {
    pub fn is_balanced(self) -> bool {
        matches!(self, Balance::Balanced)
    }
}

/// Is the graph `l`-distance-balanced? Defined for connected graphs and
/// `1 <= l <= diam` only.
pub fn is_l_distance_balanced(d: &DistanceMatrix, l: u32) -> Result<Balance, MetricsError> {
    let diam = d.diameter().ok_or(MetricsError::Disconnected)?;
    if l < 1 || l > diam {
        return Err(MetricsError::NotApplicable { l, diam });
    }
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            if d.dist(u, v) == l {
                let (cu, cv) = w_counts(d, u, v);
                if cu != cv {
                    return Ok(Balance::Unbalanced { u, v });
                }
            }
        }
    }
    Ok(Balance::Balanced)
}

/// Balance verdict for a single `l` within a profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LVerdict {
    pub l: u32,
    pub balanced: bool,
    /// First failing pair when not balanced.
    pub witness: Option<(VertexId, VertexId)>,
}

/// Balance verdicts for every `l` in `1..=diam`.
#[derive(Clone, Debug)]
pub struct BalanceProfile {
    pub diam: u32,
    pub verdicts: Vec<LVerdict>,
}

impl BalanceProfile {
    /// Balanced at every applicable `l`.
    pub fn is_highly_balanced(&self) -> bool {
        self.verdicts.iter().all(|v| v.balanced)
    }

    /// Verdict at `l`, if `1 <= l <= diam`.
    pub fn at(&self, l: u32) -> Option<&LVerdict> {
        if l >= 1 && l <= self.diam {
            Some(&self.verdicts[l as usize - 1])
        } else {
            None
        }
    }

    /// Balanced at `l`? `None` when `l` is out of range.
    pub fn balanced_at(&self, l: u32) -> Option<bool> {
        self.at(l).map(|v| v.balanced)
    }
}

/// Compute the whole balance profile in one pass over the vertex pairs.
/// Witnesses are the lexicographically first failing pair per `l`.
pub fn balance_profile(d: &DistanceMatrix) -> Result<BalanceProfile, MetricsError> {
    let diam = d.diameter().ok_or(MetricsError::Disconnected)?;
    let mut verdicts: Vec<LVerdict> = (1..=diam)
        .map(|l| LVerdict {
            l,
            balanced: true,
            witness: None,
        })
        .collect();
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            let l = d.dist(u, v);
            if l == 0 {
                continue;
            }
            let verdict = &mut verdicts[l as usize - 1];
            if !verdict.balanced {
                continue;
            }
            let (cu, cv) = w_counts(d, u, v);
            if cu != cv {
                verdict.balanced = false;
                verdict.witness = Some((u, v));
            }
        }
    }
    Ok(BalanceProfile { diam, verdicts })
}

/// A graph is locally regular when every pair of non-adjacent vertices has
/// equal degrees. Returns the lexicographically first violating pair.
pub fn local_regularity_witness(g: &Graph) -> Option<(VertexId, VertexId)> {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) && g.degree(u) != g.degree(v) {
                return Some((u, v));
            }
        }
    }
    None
}

pub fn is_locally_regular(g: &Graph) -> bool {
    local_regularity_witness(g).is_none()
}

/// Truncated shell sums for a pair `(a, b)`:
///
/// * left: vertices `x` with `1 <= d(a, x) <= diam - 1` and `d(b, x) >= d(a, x)`,
/// * right: the same with roles of `a` and `b` swapped.
///
/// Both sides count `sum over k in 1..diam` of `|N_k(a) \ N_{k-1}[b]|`
/// (respectively the swapped version). For connected graphs, equality of the
/// two sums over every pair at distance `l` is equivalent to `l`-balance.
/// The graph must be connected; `diam` is its diameter.
pub fn shell_sums(d: &DistanceMatrix, diam: u32, a: VertexId, b: VertexId) -> (usize, usize) {
    let mut left = 0;
    let mut right = 0;
    for x in 0..d.n() {
        let da = d.dist(a, x);
        let db = d.dist(b, x);
        left += usize::from(da >= 1 && da <= diam.saturating_sub(1) && db >= da);
        right += usize::from(db >= 1 && db <= diam.saturating_sub(1) && da >= db);
    }
    (left, right)
}

/// Structural classification of a graph of diameter two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinClassification {
    /// Regular graph.
    Regular,
    /// Not regular, but a join of two or more regular graphs.
    JoinOfRegulars,
    Neither,
}

impl std::fmt::Display for JoinClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            JoinClassification::Regular => "regular",
            JoinClassification::JoinOfRegulars => "nonregular-join-of-regulars",
            JoinClassification::Neither => "neither",
        })
    }
}

/// Decide whether a graph is regular, or a nonregular join of two or more
/// regular graphs (the components of its complement, each inducing a regular
/// subgraph), or neither.
pub fn classify_join_of_regulars(g: &Graph) -> JoinClassification {
    if g.is_regular() {
        return JoinClassification::Regular;
    }
    let parts = g.complement().components();
    if parts.len() < 2 {
        return JoinClassification::Neither;
    }
    for part in parts {
        let mut degs = part.iter().map(|u| (g.neighbors(u) & part).len());
        let first = degs.next().expect("components are nonempty");
        if degs.any(|d| d != first) {
            return JoinClassification::Neither;
        }
    }
    JoinClassification::JoinOfRegulars
}
