//! Simple undirected graphs on up to 64 vertices.
//!
//! Vertices are the integers `0..n`. Adjacency is stored as one [`VertexSet`]
//! per vertex, so neighborhood queries and traversals are word operations.
//! Graphs are always loop-free with symmetric adjacency; constructors enforce
//! both and everything else preserves them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

/// Index of a vertex inside a [`Graph`]; always in `[0, n)` for its graph.
pub type VertexId = usize;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for `{family}`: {reason}")]
    BadFamilyParams {
        family: &'static str,
        reason: String,
    },
    #[error("adjacency not symmetric between {u} and {v}")]
    AsymmetricAdjacency { u: usize, v: usize },
    #[error("join of zero graphs")]
    EmptyJoin,
    #[error("cannot parse graph spec `{0}`")]
    BadSpec(String),
    #[error(transparent)]
    Graph6(#[from] crate::graph6::Graph6Error),
}

/// An undirected, loop-free graph on `1..=64` vertices.
///
/// Equality and hashing compare the vertex count and adjacency only; the
/// optional label is a display tag and is ignored.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl Graph {
    /// Build a graph from an explicit edge list. Duplicate edges are fine;
    /// self-loops and out-of-range endpoints are not.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        g.debug_validate();
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            label: None,
        })
    }

    /// Build from per-vertex adjacency sets, validating symmetry and
    /// irreflexivity. Used by product constructors that assemble adjacency
    /// directly.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>, label: Option<String>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let full = VertexSet::full(n);
        for (u, &nb) in adj.iter().enumerate() {
            if !nb.minus(full).is_empty() {
                let v = nb.minus(full).first().unwrap();
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if nb.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            for v in nb.iter() {
                if !adj[v].contains(u) {
                    return Err(GraphError::AsymmetricAdjacency { u, v });
                }
            }
        }
        Ok(Graph { n, adj, label })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == VertexSet::full(self.n)
    }

    /// The vertex set of the connected component containing `start`.
    pub fn component_of(&self, start: VertexId) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = next.minus(seen);
            seen |= frontier;
        }
        seen
    }

    /// Connected components, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = VertexSet::full(self.n);
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.component_of(v);
            out.push(comp);
            remaining = remaining.minus(comp);
        }
        out
    }

    /// The complement graph: same vertices, exactly the missing edges.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|u| {
                let mut s = full.minus(self.adj[u]);
                s.remove(u);
                s
            })
            .collect();
        let g = Graph {
            n: self.n,
            adj,
            label: None,
        };
        g.debug_validate();
        g
    }

    /// Induced subgraph on `keep`, relabeling vertices in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        let verts: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        if verts.is_empty() {
            return Err(GraphError::NoVertices);
        }
        let mut new_id = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| new_id[w]).collect())
            .collect();
        let g = Graph {
            n: verts.len(),
            adj,
            label: None,
        };
        g.debug_validate();
        Ok(g)
    }

    /// The graph with vertex `v` (and its edges) removed.
    pub fn without_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        self.induced(keep)
    }

    /// Check structural invariants (no loops, symmetric adjacency, all
    /// neighbors in range). Debug builds only.
    pub(crate) fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            let full = VertexSet::full(self.n);
            for u in 0..self.n {
                debug_assert!(!self.adj[u].contains(u), "self-loop at {u}");
                debug_assert!(
                    self.adj[u].minus(full).is_empty(),
                    "neighbor out of range at {u}"
                );
                for v in self.adj[u].iter() {
                    debug_assert!(self.adj[v].contains(u), "asymmetric edge {u}-{v}");
                }
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}", self.n)?;
        if let Some(l) = &self.label {
            write!(f, ", label={l}")?;
        }
        write!(f, ", edges={:?})", self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l} (n={}, m={})", self.n, self.edge_count()),
            None => write!(f, "graph (n={}, m={})", self.n, self.edge_count()),
        }
    }
}

/// Join of graphs: disjoint union plus all edges between distinct parts.
/// Vertices are numbered block by block in the given order.
pub fn join(parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::EmptyJoin);
    }
    let total: usize = parts.iter().map(|g| g.n()).sum();
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut g = Graph::edgeless(total)?;
    let full = VertexSet::full(total);
    let mut offset = 0;
    for part in parts {
        let block = VertexSet::from_bits(VertexSet::full(part.n()).bits() << offset);
        for u in 0..part.n() {
            let shifted = VertexSet::from_bits(part.neighbors(u).bits() << offset);
            g.adj[offset + u] = shifted | full.minus(block);
        }
        offset += part.n();
    }
    g.debug_validate();
    Ok(g)
}

/// Standard graph families, parsed from specs like `cycle:5` or `K7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// Star on `n >= 1` vertices total: one center joined to `n - 1` leaves.
    Star(usize),
    /// Complete bipartite graph with sides of size `m, n >= 1`.
    CompleteBipartite(usize, usize),
    /// Wheel on `n >= 4` vertices total: a hub joined to a cycle on `n - 1`.
    Wheel(usize),
    /// Edgeless graph on `n >= 1` vertices.
    Empty(usize),
}

impl Family {
    /// Display label, e.g. `C5` or `K2,3`.
    pub fn label(&self) -> String {
        match self {
            Family::Complete(n) => format!("K{n}"),
            Family::Cycle(n) => format!("C{n}"),
            Family::Path(n) => format!("P{n}"),
            Family::Star(n) => format!("S{n}"),
            Family::CompleteBipartite(m, n) => format!("K{m},{n}"),
            Family::Wheel(n) => format!("W{n}"),
            Family::Empty(n) => format!("E{n}"),
        }
    }

    /// Construct the graph.
    pub fn build(&self) -> Result<Graph, GraphError> {
        let g = match *self {
            Family::Complete(n) => {
                Self::check("complete", n >= 1, "need n >= 1")?;
                Graph::edgeless(n)?.complement()
            }
            Family::Cycle(n) => {
                Self::check("cycle", n >= 3, "need n >= 3")?;
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)?
            }
            Family::Path(n) => {
                Self::check("path", n >= 1, "need n >= 1")?;
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)?
            }
            Family::Star(n) => {
                Self::check("star", n >= 1, "need n >= 1")?;
                let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                Graph::from_edges(n, &edges)?
            }
            Family::CompleteBipartite(m, n) => {
                Self::check("complete_bipartite", m >= 1 && n >= 1, "need m, n >= 1")?;
                join(&[Family::Empty(m).build()?, Family::Empty(n).build()?])?
            }
            Family::Wheel(n) => {
                Self::check("wheel", n >= 4, "need n >= 4")?;
                join(&[Family::Complete(1).build()?, Family::Cycle(n - 1).build()?])?
            }
            Family::Empty(n) => Graph::edgeless(n)?,
        };
        Ok(g.with_label(self.label()))
    }

    fn check(family: &'static str, ok: bool, reason: &str) -> Result<(), GraphError> {
        if ok {
            Ok(())
        } else {
            Err(GraphError::BadFamilyParams {
                family,
                reason: reason.to_string(),
            })
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parse `name:params` specs: `complete:5`, `cycle:7`, `path:4`,
    /// `star:5`, `complete_bipartite:2,3` (alias `cbip:2,3`), `wheel:6`,
    /// `empty:3`.
    fn from_str(s: &str) -> Result<Family, GraphError> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| GraphError::BadSpec(s.to_string()))?;
        let nums: Result<Vec<usize>, _> = params.split(',').map(|p| p.trim().parse()).collect();
        let nums = nums.map_err(|_| GraphError::BadSpec(s.to_string()))?;
        let one = |nums: &[usize]| -> Result<usize, GraphError> {
            match nums {
                [n] => Ok(*n),
                _ => Err(GraphError::BadSpec(s.to_string())),
            }
        };
        match name.trim() {
            "complete" => Ok(Family::Complete(one(&nums)?)),
            "cycle" => Ok(Family::Cycle(one(&nums)?)),
            "path" => Ok(Family::Path(one(&nums)?)),
            "star" => Ok(Family::Star(one(&nums)?)),
            "complete_bipartite" | "cbip" => match nums[..] {
                [m, n] => Ok(Family::CompleteBipartite(m, n)),
                _ => Err(GraphError::BadSpec(s.to_string())),
            },
            "wheel" => Ok(Family::Wheel(one(&nums)?)),
            "empty" => Ok(Family::Empty(one(&nums)?)),
            other => Err(GraphError::UnknownFamily(other.to_string())),
        }
    }
}

/// Parse a compact graph spec:
///
/// * `g6:<string>` — a graph6-encoded graph,
/// * `family:params` — see [`Family`],
/// * shorthand — `K5`, `K2,3`, `C7`, `P4`, `W6`, `S5`, `E3`.
pub fn parse_graph_spec(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    if let Some(g6) = s.strip_prefix("g6:") {
        return Ok(crate::graph6::parse_graph6(g6)?);
    }
    if s.contains(':') {
        return Family::from_str(s)?.build();
    }
    if let Some(fam) = parse_shorthand(s) {
        return fam.build();
    }
    Err(GraphError::BadSpec(s.to_string()))
}

fn parse_shorthand(s: &str) -> Option<Family> {
    let mut chars = s.chars();
    let head = chars.next()?;
    let rest = chars.as_str();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit() || c == ',') {
        return None;
    }
    if head == 'K' && rest.contains(',') {
        let (m, n) = rest.split_once(',')?;
        return Some(Family::CompleteBipartite(
            m.parse().ok()?,
            n.parse().ok()?,
        ));
    }
    let n: usize = rest.parse().ok()?;
    match head {
        'K' => Some(Family::Complete(n)),
        'C' => Some(Family::Cycle(n)),
        'P' => Some(Family::Path(n)),
        'W' => Some(Family::Wheel(n)),
        'S' => Some(Family::Star(n)),
        'E' => Some(Family::Empty(n)),
        _ => None,
    }
}
