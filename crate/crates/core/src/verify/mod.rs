//! Executable characterization checks.
//!
//! Every check pairs a *prediction* computed from factor-side data with an
//! *observation* computed by brute force on the graph or product under
//! test. An instance fails exactly when the two disagree or an internal
//! consistency assertion breaks; hypothesis violations are reported as
//! skips, never as vacuous passes.
//!
//! Checks run either on a single instance ([`run_single`]) or over
//! exhaustive sweeps of small labeled graphs ([`run_corpus`]).

mod corpus;
mod report;

pub use corpus::{
    assemble_outcome, parse_sweep, run_corpus, CorpusError, CorpusOptions, CorpusOutcome,
    SweepOverrides, DEFAULT_BUDGET,
};
pub use report::{render_text, InstanceRecord, VerificationReport};

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::graph6::to_graph6;
use crate::metrics::{
    all_pairs_distances, balance_profile, classify_join_of_regulars, is_l_distance_balanced,
    is_locally_regular, local_regularity_witness, shell_sums, Balance, BalanceProfile,
    DistanceMatrix, JoinClassification,
};
use crate::products::{corona_side_counts, five_partition, lex_w_count, w_step_counts, ProductGraph};

/// Identifier of one characterization check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// `G[H]` is `l`-distance-balanced iff `G` is, for `l >= 3`.
    Lex32,
    /// W-set sizes in `G[H]` scale by `|V(H)|` for pairs at factor
    /// distance `>= 3`.
    Lemma31,
    /// `G o H` is 2-distance-balanced iff `G = K1` and `H` is locally
    /// regular.
    Prop41,
    /// A graph with a universal vertex `v` is 2-distance-balanced iff
    /// removing `v` leaves a locally regular graph.
    Cor42,
    /// `G o H` is `l`-distance-balanced iff three factor-side conditions
    /// hold, for `3 <= l <= diam(G) + 2`.
    Lemma43,
    /// `G o H` is `(diam(G) + 2)`-distance-balanced iff `G` is
    /// `diam(G)`-distance-balanced.
    Thm44i,
    /// `G o H` is never `l`-distance-balanced for `3 <= l <= diam(G) + 1`.
    Thm44ii,
    /// The two side counts of a pair at distance `>= 2` cannot tie in both
    /// orientations, and the offset partition has the expected structure.
    Claim44,
    /// Under `l`- and `(l-1)`-balance of `H`, `K_n x H` is
    /// `l`-distance-balanced iff the step counts match on every pair at
    /// distance `l - 1`.
    Thm52,
    /// If `K_n x H` is `l`-distance-balanced then so is `H`.
    Prop53,
    /// `K_n x H` is 2-distance-balanced iff `H` is both 2- and
    /// 1-distance-balanced.
    Cor54,
    /// `G` is `l`-distance-balanced iff truncated shell sums agree on every
    /// pair at distance `l`.
    Prop61,
    /// Diameter two: 2-distance-balance, equal degrees at distance-2 pairs,
    /// and being regular or a nonregular join of regulars all coincide.
    Cor62,
}

/// All checks, in canonical order.
pub const ALL_CHECKS: [CheckId; 13] = [
    CheckId::Lex32,
    CheckId::Lemma31,
    CheckId::Prop41,
    CheckId::Cor42,
    CheckId::Lemma43,
    CheckId::Thm44i,
    CheckId::Thm44ii,
    CheckId::Claim44,
    CheckId::Thm52,
    CheckId::Prop53,
    CheckId::Cor54,
    CheckId::Prop61,
    CheckId::Cor62,
];

impl CheckId {
    pub fn id(self) -> &'static str {
        match self {
            CheckId::Lex32 => "lex-3.2",
            CheckId::Lemma31 => "lemma-3.1",
            CheckId::Prop41 => "prop-4.1",
            CheckId::Cor42 => "cor-4.2",
            CheckId::Lemma43 => "lemma-4.3",
            CheckId::Thm44i => "thm-4.4i",
            CheckId::Thm44ii => "thm-4.4ii",
            CheckId::Claim44 => "claim-4.4",
            CheckId::Thm52 => "thm-5.2",
            CheckId::Prop53 => "prop-5.3",
            CheckId::Cor54 => "cor-5.4",
            CheckId::Prop61 => "prop-6.1",
            CheckId::Cor62 => "cor-6.2",
        }
    }

    /// One-line statement of what the check asserts.
    pub fn describe(self) -> &'static str {
        match self {
            CheckId::Lex32 => "lexicographic product is l-balanced iff the first factor is (l >= 3)",
            CheckId::Lemma31 => "W-set sizes in a lexicographic product scale by |V(H)| at factor distance >= 3",
            CheckId::Prop41 => "corona is 2-balanced iff G = K1 and H is locally regular",
            CheckId::Cor42 => "universal vertex: 2-balanced iff the rest is locally regular",
            CheckId::Lemma43 => "corona is l-balanced iff three factor conditions hold (3 <= l <= diam+2)",
            CheckId::Thm44i => "corona is (diam+2)-balanced iff G is diam-balanced",
            CheckId::Thm44ii => "corona is never l-balanced for 3 <= l <= diam+1",
            CheckId::Claim44 => "side counts of a pair at distance >= 2 never tie in both orientations",
            CheckId::Thm52 => "complete-factor cartesian product: l-balance iff step counts match at distance l-1",
            CheckId::Prop53 => "l-balance of a complete-factor cartesian product forces l-balance of H",
            CheckId::Cor54 => "complete-factor cartesian product is 2-balanced iff H is 2- and 1-balanced",
            CheckId::Prop61 => "l-balance iff truncated shell sums agree at every pair at distance l",
            CheckId::Cor62 => "diameter two: 2-balance = equal degrees at distance 2 = join structure",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("unknown check id `{0}`")]
pub struct UnknownCheck(String);

impl FromStr for CheckId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<CheckId, UnknownCheck> {
        ALL_CHECKS
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

/// Counts of evaluated, skipped, and failed instances.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub checked: u64,
    pub skipped: u64,
    pub failed: u64,
}

/// Outcome of one check instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Both sides evaluated; `witness` is present exactly when the instance
    /// failed (prediction and observation disagree, or an internal
    /// assertion broke).
    Checked {
        predicted: bool,
        observed: bool,
        witness: Option<String>,
    },
    /// A hypothesis of the check does not hold for this input.
    Skipped(String),
}

/// One evaluated (or skipped) check instance.
#[derive(Clone, Debug)]
pub struct InstanceResult {
    pub check: CheckId,
    /// Input graphs by role (`g`, `h`), as compact tokens.
    pub inputs: Vec<(&'static str, String)>,
    /// Numeric parameters by name (`l`, `n`, `v`).
    pub params: Vec<(&'static str, i64)>,
    pub outcome: Outcome,
}

impl InstanceResult {
    pub fn failed(&self) -> bool {
        matches!(
            self.outcome,
            Outcome::Checked {
                witness: Some(_),
                ..
            }
        )
    }

    pub fn skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped(_))
    }

    pub fn passed(&self) -> bool {
        !self.failed() && !self.skipped()
    }
}

/// Compact token for a graph in reports: graph6 when it fits.
pub(crate) fn graph_token(g: &Graph) -> String {
    match to_graph6(g) {
        Ok(s) => format!("g6:{s}"),
        Err(_) => format!("n={};m={}", g.n(), g.edge_count()),
    }
}

/// Cached per-graph data shared by the checks: distances, diameter, and the
/// balance profile (computed on first use, since the exhaustive sweeps
/// touch millions of graphs whose profile is never needed). Only
/// constructible for connected graphs.
pub(crate) struct Facts {
    d: DistanceMatrix,
    diam: u32,
    profile: OnceCell<BalanceProfile>,
}

impl Facts {
    pub(crate) fn new(g: &Graph) -> Option<Facts> {
        let d = all_pairs_distances(g);
        let diam = d.diameter()?;
        Some(Facts {
            d,
            diam,
            profile: OnceCell::new(),
        })
    }

    fn diam(&self) -> u32 {
        self.diam
    }

    fn profile(&self) -> &BalanceProfile {
        self.profile
            .get_or_init(|| balance_profile(&self.d).expect("distance matrix is connected"))
    }

    /// Balanced at `l`? Panics when `l` is out of `[1, diam]`; callers gate
    /// the range first.
    fn bal(&self, l: u32) -> bool {
        self.profile()
            .balanced_at(l)
            .unwrap_or_else(|| panic!("l = {l} out of range for diameter {}", self.diam))
    }
}

fn skip(reason: impl Into<String>) -> Outcome {
    Outcome::Skipped(reason.into())
}

/// Outcome for an evaluated equivalence, attaching `detail` when the two
/// sides disagree.
fn decided(predicted: bool, observed: bool, detail: impl FnOnce() -> String) -> Outcome {
    let witness = (predicted != observed).then(detail);
    Outcome::Checked {
        predicted,
        observed,
        witness,
    }
}

/// Outcome for an internal consistency failure: the check's supporting law
/// itself broke on this instance.
fn broken(detail: String) -> Outcome {
    Outcome::Checked {
        predicted: true,
        observed: false,
        witness: Some(detail),
    }
}

fn passed_outcome() -> Outcome {
    Outcome::Checked {
        predicted: true,
        observed: true,
        witness: None,
    }
}

fn balance_word(b: bool) -> &'static str {
    if b {
        "balanced"
    } else {
        "unbalanced"
    }
}

/// Describe the observation side for witness strings.
fn observe_balance(verdict: Balance) -> String {
    match verdict {
        Balance::Balanced => "balanced".to_string(),
        Balance::Unbalanced { u, v } => format!("unbalanced (first failing pair ({u}, {v}))"),
    }
}

/// Build a product within the budget and return its distance matrix, or the
/// reason it was skipped.
fn build_product(
    build: impl FnOnce() -> Result<ProductGraph, crate::graph::GraphError>,
    vertices: usize,
    budget: usize,
) -> Result<DistanceMatrix, String> {
    if vertices > budget {
        return Err(format!(
            "product on {vertices} vertices exceeds budget {budget}"
        ));
    }
    match build() {
        Ok(p) => Ok(all_pairs_distances(p.graph())),
        Err(e) => Err(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Per-check evaluation. Each function receives precomputed Facts for the
// factor whose profile drives the prediction, so sweeps can share them
// across many instances.
// ---------------------------------------------------------------------------

fn result(
    check: CheckId,
    inputs: Vec<(&'static str, String)>,
    params: Vec<(&'static str, i64)>,
    outcome: Outcome,
) -> InstanceResult {
    InstanceResult {
        check,
        inputs,
        params,
        outcome,
    }
}

fn two_graphs(g: &Graph, h: &Graph) -> Vec<(&'static str, String)> {
    vec![("g", graph_token(g)), ("h", graph_token(h))]
}

fn one_graph(g: &Graph) -> Vec<(&'static str, String)> {
    vec![("g", graph_token(g))]
}

fn h_graph(h: &Graph) -> Vec<(&'static str, String)> {
    vec![("h", graph_token(h))]
}

pub(crate) fn eval_lex(g: &Graph, gf: &Facts, h: &Graph, l: u32, budget: usize) -> InstanceResult {
    let done = |o| result(CheckId::Lex32, two_graphs(g, h), vec![("l", l as i64)], o);
    if l < 3 {
        return done(skip(format!("l = {l} below the minimum of 3")));
    }
    if g.n() < 2 {
        return done(skip("first factor must have at least two vertices"));
    }
    let diam = gf.diam();
    let vertices = g.n() * h.n();
    if diam < l {
        // No pair of G is at distance l; the distance law then forbids such
        // pairs in the product too, which is worth asserting before skipping.
        return done(match build_product(|| ProductGraph::lexicographic(g, h), vertices, budget) {
            Err(reason) => skip(reason),
            Ok(dp) => {
                let pdiam = dp.diameter().expect("product of connected G is connected");
                if pdiam >= l {
                    broken(format!(
                        "no pair of G is at distance {l} (diameter {diam}) yet the product has diameter {pdiam}"
                    ))
                } else {
                    skip(format!("no pairs at distance {l}: diam(G) = {diam}"))
                }
            }
        });
    }
    let dp = match build_product(|| ProductGraph::lexicographic(g, h), vertices, budget) {
        Err(reason) => return done(skip(reason)),
        Ok(dp) => dp,
    };
    if let Some(detail) = lex_count_mismatch(g, gf, h, &dp) {
        return done(broken(detail));
    }
    let predicted = gf.bal(l);
    let observed = is_l_distance_balanced(&dp, l).expect("l within product diameter");
    done(decided(predicted, observed.is_balanced(), || {
        format!(
            "first factor is {} at l = {l} but the product is {}",
            balance_word(predicted),
            observe_balance(observed)
        )
    }))
}

/// First violation of the W-count scaling law in `G[H]`, if any.
fn lex_count_mismatch(g: &Graph, gf: &Facts, h: &Graph, dp: &DistanceMatrix) -> Option<String> {
    let hn = h.n();
    for g1 in 0..g.n() {
        for g2 in 0..g.n() {
            if g1 == g2 || gf.d.dist(g1, g2) < 3 {
                continue;
            }
            let expected = lex_w_count(&gf.d, g1, g2, hn).expect("distance >= 3 checked");
            for h1 in 0..hn {
                for h2 in 0..hn {
                    let x = g1 * hn + h1;
                    let y = g2 * hn + h2;
                    let (cu, _) = crate::metrics::w_counts(dp, x, y);
                    if cu != expected {
                        return Some(format!(
                            "W-set of (({g1}, {h1}), ({g2}, {h2})) has {cu} vertices, scaling law gives {expected}"
                        ));
                    }
                }
            }
        }
    }
    None
}

pub(crate) fn eval_lex_count(g: &Graph, gf: &Facts, h: &Graph, budget: usize) -> InstanceResult {
    let done = |o| result(CheckId::Lemma31, two_graphs(g, h), vec![], o);
    if gf.diam() < 3 {
        return done(skip(format!(
            "no pairs at distance 3 or more: diam(G) = {}",
            gf.diam()
        )));
    }
    let vertices = g.n() * h.n();
    match build_product(|| ProductGraph::lexicographic(g, h), vertices, budget) {
        Err(reason) => done(skip(reason)),
        Ok(dp) => match lex_count_mismatch(g, gf, h, &dp) {
            Some(detail) => done(broken(detail)),
            None => done(passed_outcome()),
        },
    }
}

pub(crate) fn eval_corona_2db(g: &Graph, gf: &Facts, h: &Graph, budget: usize) -> InstanceResult {
    let done = |o| result(CheckId::Prop41, two_graphs(g, h), vec![], o);
    if h.n() < 2 {
        return done(skip("second factor must have at least two vertices"));
    }
    let vertices = g.n() * (1 + h.n());
    let dp = match build_product(|| ProductGraph::corona(g, h), vertices, budget) {
        Err(reason) => return done(skip(reason)),
        Ok(dp) => dp,
    };
    let pdiam = dp.diameter().expect("corona of connected G is connected");
    if let Some(detail) = corona_diameter_violation(g, gf, pdiam) {
        return done(broken(detail));
    }
    if pdiam < 2 {
        return done(skip("product has diameter below two".to_string()));
    }
    let predicted = g.n() == 1 && is_locally_regular(h);
    let observed = is_l_distance_balanced(&dp, 2).expect("diameter at least two");
    done(decided(predicted, observed.is_balanced(), || {
        let why = if g.n() != 1 {
            "first factor is not a single vertex".to_string()
        } else {
            match local_regularity_witness(h) {
                Some((a, b)) => format!("H is not locally regular (pair ({a}, {b}))"),
                None => "H is locally regular".to_string(),
            }
        };
        format!(
            "prediction {} ({why}), product {}",
            balance_word(predicted),
            observe_balance(observed)
        )
    }))
}

fn corona_diameter_violation(g: &Graph, gf: &Facts, pdiam: u32) -> Option<String> {
    if g.n() >= 2 && pdiam != gf.diam() + 2 {
        Some(format!(
            "corona diameter law violated: diam(G) + 2 = {} but BFS finds {pdiam}",
            gf.diam() + 2
        ))
    } else {
        None
    }
}

pub(crate) fn eval_universal(g: &Graph, gf: &Facts, v: VertexId) -> InstanceResult {
    let done = |o| result(CheckId::Cor42, one_graph(g), vec![("v", v as i64)], o);
    if g.degree(v) != g.n() - 1 {
        return done(skip(format!("vertex {v} is not universal")));
    }
    if gf.diam() != 2 {
        return done(skip(format!(
            "graph has diameter {} (pairs at distance two require diameter two)",
            gf.diam()
        )));
    }
    let rest = g.without_vertex(v).expect("universal vertex in range");
    let predicted = is_locally_regular(&rest);
    let observed = gf.bal(2);
    done(decided(predicted, observed, || {
        let why = match local_regularity_witness(&rest) {
            Some((a, b)) => format!("removal leaves unequal non-adjacent degrees at ({a}, {b})"),
            None => "removal leaves a locally regular graph".to_string(),
        };
        format!(
            "prediction {} ({why}), graph is {} at l = 2",
            balance_word(predicted),
            balance_word(observed)
        )
    }))
}

/// The three factor-side conditions governing corona balance at `l`:
/// (i) `G` is `l`-balanced when `l` is in range (vacuous above the
/// diameter), (ii) `G` is `(l-2)`-balanced, (iii) the side counts tie on
/// every ordered pair at distance `l - 1` (vacuous when none exist).
fn corona_conditions(gf: &Facts, l: u32) -> (bool, bool, bool) {
    let diam = gf.diam();
    let cond_i = if l <= diam { gf.bal(l) } else { true };
    let cond_ii = gf.bal(l - 2);
    let cond_iii = if l - 1 > diam {
        true
    } else {
        ordered_pair_tie_failure(&gf.d, l - 1).is_none()
    };
    (cond_i, cond_ii, cond_iii)
}

/// First ordered pair at distance `dist` whose side counts differ.
fn ordered_pair_tie_failure(d: &DistanceMatrix, dist: u32) -> Option<(VertexId, VertexId)> {
    for a in 0..d.n() {
        for b in 0..d.n() {
            if a != b && d.dist(a, b) == dist {
                let (left, right) = corona_side_counts(d, a, b);
                if left != right {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

pub(crate) fn eval_corona_l(
    check: CheckId,
    g: &Graph,
    gf: &Facts,
    h: &Graph,
    l: u32,
    budget: usize,
) -> InstanceResult {
    debug_assert!(matches!(
        check,
        CheckId::Lemma43 | CheckId::Thm44i | CheckId::Thm44ii
    ));
    let done = |o| result(check, two_graphs(g, h), vec![("l", l as i64)], o);
    if g.n() < 2 {
        return done(skip("first factor must have at least two vertices"));
    }
    let diam = gf.diam();
    if l < 3 || l > diam + 2 {
        return done(skip(format!("l = {l} outside [3, diam(G) + 2 = {}]", diam + 2)));
    }
    match check {
        CheckId::Thm44i if l != diam + 2 => {
            return done(skip(format!("check applies at l = diam(G) + 2 = {} only", diam + 2)));
        }
        CheckId::Thm44ii if l > diam + 1 => {
            return done(skip(format!("check applies for l <= diam(G) + 1 = {} only", diam + 1)));
        }
        _ => {}
    }
    let (cond_i, cond_ii, cond_iii) = corona_conditions(gf, l);
    let predicted = match check {
        CheckId::Lemma43 => cond_i && cond_ii && cond_iii,
        CheckId::Thm44i => gf.bal(diam),
        CheckId::Thm44ii => false,
        _ => unreachable!(),
    };
    let vertices = g.n() * (1 + h.n());
    let dp = match build_product(|| ProductGraph::corona(g, h), vertices, budget) {
        Err(reason) => return done(skip(reason)),
        Ok(dp) => dp,
    };
    let pdiam = dp.diameter().expect("corona of connected G is connected");
    if let Some(detail) = corona_diameter_violation(g, gf, pdiam) {
        return done(broken(detail));
    }
    let observed = is_l_distance_balanced(&dp, l).expect("l within [3, diam + 2]");
    done(decided(predicted, observed.is_balanced(), || {
        format!(
            "factor conditions (i = {cond_i}, ii = {cond_ii}, iii = {cond_iii}) predict {}, product {}",
            balance_word(predicted),
            observe_balance(observed)
        )
    }))
}

pub(crate) fn eval_claim(g: &Graph, gf: &Facts) -> InstanceResult {
    let done = |o| result(CheckId::Claim44, one_graph(g), vec![], o);
    if gf.diam() < 2 {
        return done(skip("no pairs at distance two or more"));
    }
    let d = &gf.d;
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let duv = d.dist(u, v);
            if duv < 2 {
                continue;
            }
            let (a1, b1) = corona_side_counts(d, u, v);
            let (a2, b2) = corona_side_counts(d, v, u);
            if a1 == b1 && a2 == b2 {
                return done(broken(format!(
                    "pair ({u}, {v}): side counts tie in both orientations (({a1}, {b1}) and ({a2}, {b2}))"
                )));
            }
            let p = five_partition(d, u, v).expect("pair at distance >= 2 in a connected graph");
            if p.counts().iter().sum::<usize>() != n {
                return done(broken(format!(
                    "pair ({u}, {v}): offset partition misses vertices"
                )));
            }
            if duv.is_multiple_of(2) && p.equidistant.is_empty() {
                return done(broken(format!(
                    "pair ({u}, {v}) at even distance {duv} has no equidistant vertex"
                )));
            }
            if !duv.is_multiple_of(2) && (p.closer_one.is_empty() || p.farther_one.is_empty()) {
                return done(broken(format!(
                    "pair ({u}, {v}) at odd distance {duv} misses a one-step bucket"
                )));
            }
        }
    }
    done(passed_outcome())
}

pub(crate) fn eval_cart(
    check: CheckId,
    n: usize,
    h: &Graph,
    hf: &Facts,
    l: u32,
    budget: usize,
) -> InstanceResult {
    debug_assert!(matches!(
        check,
        CheckId::Thm52 | CheckId::Prop53 | CheckId::Cor54
    ));
    let done = |o| result(check, h_graph(h), vec![("n", n as i64), ("l", l as i64)], o);
    let hdiam = hf.diam();
    if n < 2 {
        return done(skip("complete factor needs n >= 2"));
    }
    match check {
        CheckId::Thm52 => {
            if l < 2 {
                return done(skip("check applies for l >= 2"));
            }
            if l > hdiam {
                return done(skip(format!("no pairs at distance {l}: diam(H) = {hdiam}")));
            }
            if !hf.bal(l) || !hf.bal(l - 1) {
                return done(skip(format!(
                    "H must be both {l}- and {}-distance-balanced",
                    l - 1
                )));
            }
        }
        CheckId::Prop53 => {
            if l < 2 || l > hdiam {
                return done(skip(format!("l = {l} outside [2, diam(H) = {hdiam}]")));
            }
        }
        CheckId::Cor54 => {
            if l != 2 {
                return done(skip("check applies at l = 2 only"));
            }
            if hdiam < 2 {
                return done(skip(format!("H must have diameter at least two, found {hdiam}")));
            }
        }
        _ => unreachable!(),
    }
    let kn = crate::graph::Family::Complete(n)
        .build()
        .expect("complete graph of positive order");
    let vertices = n * h.n();
    let dp = match build_product(|| ProductGraph::cartesian(&kn, h), vertices, budget) {
        Err(reason) => return done(skip(reason)),
        Ok(dp) => dp,
    };
    let product_verdict =
        is_l_distance_balanced(&dp, l).expect("product diameter at least diam(H)");
    match check {
        CheckId::Thm52 => {
            let tie = step_count_tie_failure(&hf.d, l - 1);
            let predicted = tie.is_none();
            done(decided(predicted, product_verdict.is_balanced(), || {
                let why = match tie {
                    Some((h1, h2)) => format!("step counts differ at pair ({h1}, {h2})"),
                    None => "step counts match on every pair".to_string(),
                };
                format!(
                    "{why}, predicting {}; product {}",
                    balance_word(predicted),
                    observe_balance(product_verdict)
                )
            }))
        }
        CheckId::Prop53 => {
            let h_balanced = hf.bal(l);
            let observed = !product_verdict.is_balanced() || h_balanced;
            done(decided(true, observed, || {
                format!(
                    "product is balanced at l = {l} but H is {}",
                    observe_balance(
                        is_l_distance_balanced(&hf.d, l).expect("l within diam(H)")
                    )
                )
            }))
        }
        CheckId::Cor54 => {
            let predicted = hf.bal(2) && hf.bal(1);
            done(decided(predicted, product_verdict.is_balanced(), || {
                format!(
                    "H is {} at l = 2 and {} at l = 1, predicting {}; product {}",
                    balance_word(hf.bal(2)),
                    balance_word(hf.bal(1)),
                    balance_word(predicted),
                    observe_balance(product_verdict)
                )
            }))
        }
        _ => unreachable!(),
    }
}

/// First unordered pair at distance `dist` whose step counts differ.
fn step_count_tie_failure(d: &DistanceMatrix, dist: u32) -> Option<(VertexId, VertexId)> {
    for h1 in 0..d.n() {
        for h2 in h1 + 1..d.n() {
            if d.dist(h1, h2) == dist {
                let (left, right) = w_step_counts(d, h1, h2);
                if left != right {
                    return Some((h1, h2));
                }
            }
        }
    }
    None
}

pub(crate) fn eval_char(g: &Graph, gf: &Facts, l: u32) -> InstanceResult {
    let done = |o| result(CheckId::Prop61, one_graph(g), vec![("l", l as i64)], o);
    let diam = gf.diam();
    if l < 1 || l > diam {
        return done(skip(format!("l = {l} outside [1, diam = {diam}]")));
    }
    let d = &gf.d;
    let mut mismatch = None;
    'outer: for a in 0..g.n() {
        for b in a + 1..g.n() {
            if d.dist(a, b) == l {
                let (left, right) = shell_sums(d, diam, a, b);
                if left != right {
                    mismatch = Some((a, b, left, right));
                    break 'outer;
                }
            }
        }
    }
    let predicted = mismatch.is_none();
    let observed = gf.bal(l);
    done(decided(predicted, observed, || {
        let why = match mismatch {
            Some((a, b, left, right)) => {
                format!("shell sums differ at pair ({a}, {b}): {left} vs {right}")
            }
            None => "shell sums agree on every pair".to_string(),
        };
        format!(
            "{why}, predicting {}; graph is {} at l = {l}",
            balance_word(predicted),
            balance_word(observed)
        )
    }))
}

pub(crate) fn eval_diam2(g: &Graph, gf: &Facts) -> InstanceResult {
    let done = |o| result(CheckId::Cor62, one_graph(g), vec![], o);
    if gf.diam() != 2 {
        return done(skip(format!("graph has diameter {}, not two", gf.diam())));
    }
    let s_balance = gf.bal(2);
    let mut degree_pair = None;
    'outer: for u in 0..g.n() {
        for v in u + 1..g.n() {
            if gf.d.dist(u, v) == 2 && g.degree(u) != g.degree(v) {
                degree_pair = Some((u, v));
                break 'outer;
            }
        }
    }
    let s_degrees = degree_pair.is_none();
    let class = classify_join_of_regulars(g);
    let s_structure = class != JoinClassification::Neither;
    let witness = if s_balance == s_degrees && s_degrees == s_structure {
        None
    } else {
        Some(format!(
            "statements disagree: balance = {s_balance}, equal degrees at distance two = {s_degrees} \
             (pair {degree_pair:?}), structure = {s_structure} ({class})"
        ))
    };
    done(Outcome::Checked {
        predicted: s_degrees,
        observed: s_balance,
        witness,
    })
}

// ---------------------------------------------------------------------------
// Single-instance entry points.
// ---------------------------------------------------------------------------

/// Inputs for [`run_single`]. Checks use the subset they need.
#[derive(Clone, Debug, Default)]
pub struct SingleInputs {
    pub g: Option<Graph>,
    pub h: Option<Graph>,
    /// Order of the complete factor for the cartesian checks.
    pub n: Option<usize>,
    /// Restrict to one `l`; otherwise every `l` the check covers.
    pub l: Option<u32>,
    /// Maximum number of product vertices to build.
    pub budget: usize,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SingleError {
    #[error("check {check} requires {what}")]
    MissingInput {
        check: &'static str,
        what: &'static str,
    },
}

fn require<'a>(
    source: &'a Option<Graph>,
    check: CheckId,
    what: &'static str,
) -> Result<&'a Graph, SingleError> {
    source.as_ref().ok_or(SingleError::MissingInput {
        check: check.id(),
        what,
    })
}

/// Skip every requested `l` (or the representative smallest one) because the
/// primary graph is disconnected.
fn disconnected(check: CheckId, inputs: Vec<(&'static str, String)>, role: &str) -> InstanceResult {
    InstanceResult {
        check,
        inputs,
        params: vec![],
        outcome: skip(format!("{role} is disconnected")),
    }
}

/// Run one check on explicit inputs. Returns one instance per covered `l`
/// (or vertex, for the universal-vertex check).
pub fn run_single(check: CheckId, inputs: &SingleInputs) -> Result<Vec<InstanceResult>, SingleError> {
    let budget = inputs.budget;
    let pick = |l: Option<u32>, lo: u32, hi: u32| -> Vec<u32> {
        match l {
            Some(l) => vec![l],
            None if lo > hi => vec![lo],
            None => (lo..=hi).collect(),
        }
    };
    let out = match check {
        CheckId::Lex32 => {
            let g = require(&inputs.g, check, "--g")?;
            let h = require(&inputs.h, check, "--h")?;
            match Facts::new(g) {
                None => vec![disconnected(check, two_graphs(g, h), "G")],
                Some(gf) => pick(inputs.l, 3, gf.diam())
                    .into_iter()
                    .map(|l| eval_lex(g, &gf, h, l, budget))
                    .collect(),
            }
        }
        CheckId::Lemma31 => {
            let g = require(&inputs.g, check, "--g")?;
            let h = require(&inputs.h, check, "--h")?;
            match Facts::new(g) {
                None => vec![disconnected(check, two_graphs(g, h), "G")],
                Some(gf) => vec![eval_lex_count(g, &gf, h, budget)],
            }
        }
        CheckId::Prop41 => {
            let g = require(&inputs.g, check, "--g")?;
            let h = require(&inputs.h, check, "--h")?;
            match Facts::new(g) {
                None => vec![disconnected(check, two_graphs(g, h), "G")],
                Some(gf) => vec![eval_corona_2db(g, &gf, h, budget)],
            }
        }
        CheckId::Cor42 => {
            let g = require(&inputs.g, check, "--g")?;
            match Facts::new(g) {
                None => vec![disconnected(check, one_graph(g), "G")],
                Some(gf) => {
                    let universal = g.universal_vertices();
                    if universal.is_empty() {
                        vec![result(
                            check,
                            one_graph(g),
                            vec![],
                            skip("graph has no universal vertex"),
                        )]
                    } else {
                        universal
                            .into_iter()
                            .map(|v| eval_universal(g, &gf, v))
                            .collect()
                    }
                }
            }
        }
        CheckId::Lemma43 | CheckId::Thm44i | CheckId::Thm44ii => {
            let g = require(&inputs.g, check, "--g")?;
            let h = require(&inputs.h, check, "--h")?;
            match Facts::new(g) {
                None => vec![disconnected(check, two_graphs(g, h), "G")],
                Some(gf) => {
                    let diam = gf.diam();
                    let (lo, hi) = match check {
                        CheckId::Lemma43 => (3, diam + 2),
                        CheckId::Thm44i => (diam + 2, diam + 2),
                        _ => (3, diam + 1),
                    };
                    pick(inputs.l, lo, hi)
                        .into_iter()
                        .map(|l| eval_corona_l(check, g, &gf, h, l, budget))
                        .collect()
                }
            }
        }
        CheckId::Claim44 => {
            let g = require(&inputs.g, check, "--g")?;
            match Facts::new(g) {
                None => vec![disconnected(check, one_graph(g), "G")],
                Some(gf) => vec![eval_claim(g, &gf)],
            }
        }
        CheckId::Thm52 | CheckId::Prop53 | CheckId::Cor54 => {
            let h = require(&inputs.h, check, "--h")?;
            let n = inputs.n.ok_or(SingleError::MissingInput {
                check: check.id(),
                what: "--n",
            })?;
            match Facts::new(h) {
                None => vec![disconnected(check, h_graph(h), "H")],
                Some(hf) => {
                    let ls = match check {
                        CheckId::Cor54 => vec![inputs.l.unwrap_or(2)],
                        _ => pick(inputs.l, 2, hf.diam()),
                    };
                    ls.into_iter()
                        .map(|l| eval_cart(check, n, h, &hf, l, budget))
                        .collect()
                }
            }
        }
        CheckId::Prop61 => {
            let g = require(&inputs.g, check, "--g")?;
            match Facts::new(g) {
                None => vec![disconnected(check, one_graph(g), "G")],
                Some(gf) => pick(inputs.l, 1, gf.diam())
                    .into_iter()
                    .map(|l| eval_char(g, &gf, l))
                    .collect(),
            }
        }
        CheckId::Cor62 => {
            let g = require(&inputs.g, check, "--g")?;
            match Facts::new(g) {
                None => vec![disconnected(check, one_graph(g), "G")],
                Some(gf) => vec![eval_diam2(g, &gf)],
            }
        }
    };
    Ok(out)
}

// ---------------------------------------------------------------------------
// Per-theorem entry points bundling the related sub-checks.
// ---------------------------------------------------------------------------

/// lex-3.2 on one instance, with the lemma-3.1 count identity asserted
/// inline.
pub fn verify_lex(g: &Graph, h: &Graph, l: u32, budget: usize) -> InstanceResult {
    match Facts::new(g) {
        None => disconnected(CheckId::Lex32, two_graphs(g, h), "G"),
        Some(gf) => eval_lex(g, &gf, h, l, budget),
    }
}

/// prop-4.1 on one instance.
pub fn verify_corona_2db(g: &Graph, h: &Graph, budget: usize) -> InstanceResult {
    match Facts::new(g) {
        None => disconnected(CheckId::Prop41, two_graphs(g, h), "G"),
        Some(gf) => eval_corona_2db(g, &gf, h, budget),
    }
}

/// cor-4.2 at one vertex.
pub fn verify_universal_vertex(g: &Graph, v: VertexId) -> InstanceResult {
    match Facts::new(g) {
        None => disconnected(CheckId::Cor42, one_graph(g), "G"),
        Some(gf) => eval_universal(g, &gf, v),
    }
}

/// lemma-4.3 plus whichever of thm-4.4i / thm-4.4ii also speaks about this
/// `l`.
pub fn verify_corona_l(g: &Graph, h: &Graph, l: u32, budget: usize) -> Vec<InstanceResult> {
    match Facts::new(g) {
        None => vec![disconnected(CheckId::Lemma43, two_graphs(g, h), "G")],
        Some(gf) => {
            let mut out = vec![eval_corona_l(CheckId::Lemma43, g, &gf, h, l, budget)];
            if g.n() >= 2 && l == gf.diam() + 2 {
                out.push(eval_corona_l(CheckId::Thm44i, g, &gf, h, l, budget));
            } else if g.n() >= 2 && (3..=gf.diam() + 1).contains(&l) {
                out.push(eval_corona_l(CheckId::Thm44ii, g, &gf, h, l, budget));
            }
            out
        }
    }
}

/// claim-4.4's pair inequality and partition structure over one graph.
pub fn verify_pair_count_claim(g: &Graph) -> InstanceResult {
    match Facts::new(g) {
        None => disconnected(CheckId::Claim44, one_graph(g), "G"),
        Some(gf) => eval_claim(g, &gf),
    }
}

/// thm-5.2 (hypothesis-gated) and prop-5.3, plus — at `l = 2` — cor-5.4,
/// on one `K_n x H` instance.
pub fn verify_cart(n: usize, h: &Graph, l: u32, budget: usize) -> Vec<InstanceResult> {
    match Facts::new(h) {
        None => vec![disconnected(CheckId::Thm52, h_graph(h), "H")],
        Some(hf) => {
            let mut out = vec![
                eval_cart(CheckId::Thm52, n, h, &hf, l, budget),
                eval_cart(CheckId::Prop53, n, h, &hf, l, budget),
            ];
            if l == 2 {
                out.push(eval_cart(CheckId::Cor54, n, h, &hf, l, budget));
            }
            out
        }
    }
}

/// prop-6.1 at `l`, plus the cor-6.2 equivalence when the graph has
/// diameter two and `l = 2`.
pub fn verify_char(g: &Graph, l: u32) -> Vec<InstanceResult> {
    match Facts::new(g) {
        None => vec![disconnected(CheckId::Prop61, one_graph(g), "G")],
        Some(gf) => {
            let mut out = vec![eval_char(g, &gf, l)];
            if gf.diam() == 2 && l == 2 {
                out.push(eval_diam2(g, &gf));
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Result accumulation shared by single-instance and sweep modes.
// ---------------------------------------------------------------------------

/// Accumulates instance results. Sweeps keep only failures (the pass and
/// skip volume over exhaustive corpora is enormous); single-instance runs
/// keep everything.
pub(crate) struct Acc {
    keep_all: bool,
    pub counts: ReportSummary,
    pub per_check: std::collections::BTreeMap<CheckId, ReportSummary>,
    pub kept: Vec<InstanceResult>,
}

impl Acc {
    pub(crate) fn new(keep_all: bool) -> Acc {
        Acc {
            keep_all,
            counts: ReportSummary::default(),
            per_check: Default::default(),
            kept: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, r: InstanceResult) {
        let per = self.per_check.entry(r.check).or_default();
        if r.skipped() {
            self.counts.skipped += 1;
            per.skipped += 1;
        } else {
            self.counts.checked += 1;
            per.checked += 1;
            if r.failed() {
                self.counts.failed += 1;
                per.failed += 1;
            }
        }
        if self.keep_all || r.failed() {
            self.kept.push(r);
        }
    }

    pub(crate) fn merge(&mut self, other: Acc) {
        self.counts.checked += other.counts.checked;
        self.counts.skipped += other.counts.skipped;
        self.counts.failed += other.counts.failed;
        for (check, s) in other.per_check {
            let per = self.per_check.entry(check).or_default();
            per.checked += s.checked;
            per.skipped += s.skipped;
            per.failed += s.failed;
        }
        self.kept.extend(other.kept);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, Graph};

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    fn facts(g: &Graph) -> Facts {
        Facts::new(g).unwrap()
    }

    #[test]
    fn check_ids_round_trip() {
        for check in ALL_CHECKS {
            assert_eq!(check.id().parse::<CheckId>().unwrap(), check);
        }
        assert!("thm-9.9".parse::<CheckId>().is_err());
    }

    #[test]
    fn lex_instances() {
        // C7 is balanced everywhere, so its lexicographic products are
        // balanced at l = 3 regardless of the second factor.
        let c7 = fam(Family::Cycle(7));
        let h = fam(Family::Empty(2));
        let r = eval_lex(&c7, &facts(&c7), &h, 3, 60);
        assert!(r.passed());

        // P4 is 3-balanced, so P4[K2] is too.
        let p4 = fam(Family::Path(4));
        let r = eval_lex(&p4, &facts(&p4), &fam(Family::Complete(2)), 3, 60);
        assert!(r.passed());
        match r.outcome {
            Outcome::Checked {
                predicted,
                observed,
                ..
            } => {
                assert!(predicted && observed);
            }
            _ => panic!("expected a checked outcome"),
        }

        // Out-of-range l skips after asserting the product lacks such pairs.
        let r = eval_lex(&p4, &facts(&p4), &h, 5, 60);
        assert!(r.skipped());

        // K1 first factor skips.
        let k1 = fam(Family::Complete(1));
        let r = eval_lex(&k1, &facts(&k1), &h, 3, 60);
        assert!(r.skipped());
    }

    #[test]
    fn lex_count_instance() {
        let p5 = fam(Family::Path(5));
        let r = eval_lex_count(&p5, &facts(&p5), &fam(Family::Path(3)), 60);
        assert!(r.passed());

        let c4 = fam(Family::Cycle(4));
        let r = eval_lex_count(&c4, &facts(&c4), &fam(Family::Path(3)), 60);
        assert!(r.skipped(), "diameter two has no eligible pairs");
    }

    #[test]
    fn corona_2db_instances() {
        // K1 o P3 with locally regular P3: balanced.
        let k1 = fam(Family::Complete(1));
        let p3 = fam(Family::Path(3));
        let r = eval_corona_2db(&k1, &facts(&k1), &p3, 60);
        assert!(r.passed());

        // K2 o K2: prediction and observation both say unbalanced.
        let k2 = fam(Family::Complete(2));
        let r = eval_corona_2db(&k2, &facts(&k2), &k2, 60);
        assert!(r.passed());
        match r.outcome {
            Outcome::Checked { predicted, observed, .. } => {
                assert!(!predicted && !observed);
            }
            _ => panic!(),
        }

        // K1 o K3 = K4 has diameter one: skipped.
        let r = eval_corona_2db(&k1, &facts(&k1), &fam(Family::Complete(3)), 60);
        assert!(r.skipped());

        // Second factor K1 skips.
        let r = eval_corona_2db(&k2, &facts(&k2), &k1, 60);
        assert!(r.skipped());
    }

    #[test]
    fn universal_vertex_instances() {
        // Wheel: hub removal leaves the (locally regular) rim cycle.
        let w6 = fam(Family::Wheel(6));
        let r = eval_universal(&w6, &facts(&w6), 0);
        assert!(r.passed());

        // K1 joined to a paw: not locally regular after hub removal, and
        // indeed not 2-balanced.
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let g = crate::graph::join(&[fam(Family::Complete(1)), paw]).unwrap();
        let r = eval_universal(&g, &facts(&g), 0);
        assert!(r.passed());
        match r.outcome {
            Outcome::Checked { predicted, observed, .. } => {
                assert!(!predicted && !observed);
            }
            _ => panic!(),
        }

        // Complete graphs skip (diameter one), non-universal vertices skip.
        let k3 = fam(Family::Complete(3));
        assert!(eval_universal(&k3, &facts(&k3), 0).skipped());
        let p3 = fam(Family::Path(3));
        assert!(eval_universal(&p3, &facts(&p3), 0).skipped());
    }

    #[test]
    fn corona_l_instances() {
        let k2 = fam(Family::Complete(2));
        let k1 = fam(Family::Complete(1));
        // K2 o K1 = P4 at l = 3 = diam + 2: balanced, predicted by 1-balance
        // of K2.
        let r = eval_corona_l(CheckId::Lemma43, &k2, &facts(&k2), &k1, 3, 60);
        assert!(r.passed());
        let r = eval_corona_l(CheckId::Thm44i, &k2, &facts(&k2), &k1, 3, 60);
        assert!(r.passed());

        // P3 o K1 at l = 3 <= diam + 1: never balanced.
        let p3 = fam(Family::Path(3));
        let r = eval_corona_l(CheckId::Thm44ii, &p3, &facts(&p3), &k1, 3, 60);
        assert!(r.passed());

        // C4 o K2 at l = 4 = diam + 2 with C4 2-balanced: balanced.
        let c4 = fam(Family::Cycle(4));
        let r = eval_corona_l(CheckId::Lemma43, &c4, &facts(&c4), &k2, 4, 60);
        assert!(r.passed());
        match r.outcome {
            Outcome::Checked { predicted, observed, .. } => assert!(predicted && observed),
            _ => panic!(),
        }

        // Gates: wrong l for the two theorem parts.
        let r = eval_corona_l(CheckId::Thm44i, &p3, &facts(&p3), &k1, 3, 60);
        assert!(r.skipped());
        let r = eval_corona_l(CheckId::Thm44ii, &p3, &facts(&p3), &k1, 4, 60);
        assert!(r.skipped());
    }

    #[test]
    fn claim_instances() {
        let p4 = fam(Family::Path(4));
        assert!(eval_claim(&p4, &facts(&p4)).passed());
        let k3 = fam(Family::Complete(3));
        assert!(eval_claim(&k3, &facts(&k3)).skipped());
    }

    #[test]
    fn cart_instances() {
        // n = 2, H = C5, l = 2: counts tie, product balanced.
        let c5 = fam(Family::Cycle(5));
        let r = eval_cart(CheckId::Thm52, 2, &c5, &facts(&c5), 2, 60);
        assert!(r.passed());
        match r.outcome {
            Outcome::Checked { predicted, observed, .. } => assert!(predicted && observed),
            _ => panic!(),
        }

        // P4 is not 1-balanced: the l = 2 hypothesis fails.
        let p4 = fam(Family::Path(4));
        let r = eval_cart(CheckId::Thm52, 2, &p4, &facts(&p4), 2, 60);
        assert!(r.skipped());

        // Necessity holds trivially when the product is unbalanced.
        let r = eval_cart(CheckId::Prop53, 3, &p4, &facts(&p4), 2, 60);
        assert!(r.passed());

        // n = 3, H = P4 at l = 2: H not 1-balanced, so not 2-balanced.
        let r = eval_cart(CheckId::Cor54, 3, &p4, &facts(&p4), 2, 60);
        assert!(r.passed());
        match r.outcome {
            Outcome::Checked { predicted, observed, .. } => {
                assert!(!predicted && !observed);
            }
            _ => panic!(),
        }

        // Complete H has diameter one: cor-5.4 skips.
        let k3 = fam(Family::Complete(3));
        let r = eval_cart(CheckId::Cor54, 2, &k3, &facts(&k3), 2, 60);
        assert!(r.skipped());
    }

    #[test]
    fn char_instances() {
        let p4 = fam(Family::Path(4));
        let gf = facts(&p4);
        for l in 1..=3 {
            assert!(eval_char(&p4, &gf, l).passed());
        }
        assert!(eval_char(&p4, &gf, 4).skipped());

        let k23 = fam(Family::CompleteBipartite(2, 3));
        let gf = facts(&k23);
        assert!(eval_char(&k23, &gf, 1).passed());
        assert!(eval_char(&k23, &gf, 2).passed());
    }

    #[test]
    fn diam2_instances() {
        for g in [
            fam(Family::CompleteBipartite(2, 3)),
            fam(Family::Wheel(6)),
            fam(Family::Cycle(4)),
            Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap(),
        ] {
            let gf = facts(&g);
            let r = eval_diam2(&g, &gf);
            assert!(r.passed(), "{}: {:?}", graph_token(&g), r.outcome);
        }
        let p4 = fam(Family::Path(4));
        assert!(eval_diam2(&p4, &facts(&p4)).skipped());
    }

    #[test]
    fn theorem_entry_points_bundle_subchecks() {
        // K2 o K1 = P4 at l = 3 = diam(K2) + 2: lemma plus part (i).
        let k2 = fam(Family::Complete(2));
        let k1 = fam(Family::Complete(1));
        let results = verify_corona_l(&k2, &k1, 3, 60);
        assert_eq!(results.len(), 2);
        assert!(results.iter().all(|r| r.passed()));

        // C4 is balanced at both l = 1 and l = 2, so all three cartesian
        // statements evaluate on K2 x C4.
        let c4 = fam(Family::Cycle(4));
        let results = verify_cart(2, &c4, 2, 60);
        assert_eq!(results.len(), 3);
        assert!(results.iter().all(|r| r.passed()), "{results:?}");

        let k23 = fam(Family::CompleteBipartite(2, 3));
        let results = verify_char(&k23, 2);
        assert_eq!(results.len(), 2);
        assert!(results.iter().all(|r| r.passed()));

        // P5 with an edgeless second factor, and a cycle with a complete
        // one: prediction and observation agree both times.
        let p5 = fam(Family::Path(5));
        assert!(verify_lex(&p5, &fam(Family::Empty(2)), 3, 60).passed());
        let c7 = fam(Family::Cycle(7));
        assert!(verify_lex(&c7, &fam(Family::Complete(3)), 3, 60).passed());

        // Star hub: removal leaves an edgeless, locally regular graph.
        let s4 = fam(Family::Star(4));
        assert!(verify_universal_vertex(&s4, 0).passed());

        assert!(verify_pair_count_claim(&fam(Family::Path(4))).passed());
        assert!(verify_corona_2db(&k1, &fam(Family::Path(3)), 60).passed());
    }

    #[test]
    fn run_single_requires_inputs() {
        let err = run_single(CheckId::Lex32, &SingleInputs::default()).unwrap_err();
        assert!(matches!(err, SingleError::MissingInput { .. }));

        let inputs = SingleInputs {
            g: Some(fam(Family::Path(4))),
            h: Some(fam(Family::Complete(2))),
            budget: 60,
            ..Default::default()
        };
        let results = run_single(CheckId::Lex32, &inputs).unwrap();
        assert_eq!(results.len(), 1); // l = 3..=diam(P4)
        assert!(results[0].passed());
    }

    #[test]
    fn run_single_reports_disconnected_inputs_as_skips() {
        let inputs = SingleInputs {
            g: Some(fam(Family::Empty(3))),
            l: Some(1),
            budget: 60,
            ..Default::default()
        };
        let results = run_single(CheckId::Prop61, &inputs).unwrap();
        assert_eq!(results.len(), 1);
        assert!(results[0].skipped());
    }
}
