//! Exhaustive sweeps over small labeled graphs.
//!
//! A sweep enumerates every labeled graph in a check's domain (edge
//! subsets of up to seven vertices, connectivity-filtered where the check
//! demands it), evaluates the selected checks on each instance, and
//! aggregates counts. Failures are always retained with replayable
//! witnesses; passes and skips are only counted, because the full corpora
//! run to millions of instances.
//!
//! Sweeps are deterministic regardless of worker count: work splits into
//! fixed chunks whose partial results merge in chunk order, never in
//! completion order.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::{graph_from_mask, mask_count, mask_is_connected, MAX_ENUMERATION_VERTICES};
use crate::graph::{Family, Graph};
use crate::verify::{
    eval_cart, eval_char, eval_claim, eval_corona_2db, eval_corona_l, eval_diam2, eval_lex,
    eval_lex_count, eval_universal, Acc, CheckId, Facts, InstanceResult, ReportSummary,
    VerificationReport,
};

/// Default cap on product order; larger instances are skipped, not built.
pub const DEFAULT_BUDGET: usize = 60;

/// Masks per work unit when chunking an edge-subset enumeration.
const MASK_CHUNK: u64 = 1 << 14;
/// First-factor graphs per work unit in two-factor sweeps.
const GRAPH_CHUNK: usize = 8;

/// Overrides for the per-check default sweep domains, parsed from specs
/// like `connected:n<=7`, `G:n<=5,H:n<=3`, `n:2-3`, or `l:3`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOverrides {
    /// Max order for single-graph sweeps over connected graphs.
    pub connected_max: Option<usize>,
    /// Max order of the first factor in two-factor sweeps.
    pub g_max: Option<usize>,
    /// Max order of the second factor in two-factor sweeps.
    pub h_max: Option<usize>,
    /// Max order of the second factor in the single-root corona sweep.
    pub h1_max: Option<usize>,
    /// Range of complete-factor orders for the cartesian checks.
    pub n_range: Option<(usize, usize)>,
    /// Restrict every check to a single `l`.
    pub l: Option<u32>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("no checks selected")]
    NoChecks,
    #[error("bad sweep clause `{clause}`: {reason}")]
    BadSweep { clause: String, reason: String },
    #[error("sweep bound {what} = {got} outside [{lo}, {hi}]")]
    BadBound {
        what: &'static str,
        got: usize,
        lo: usize,
        hi: usize,
    },
}

fn bad(clause: &str, reason: impl Into<String>) -> CorpusError {
    CorpusError::BadSweep {
        clause: clause.to_string(),
        reason: reason.into(),
    }
}

fn parse_num(clause: &str, text: &str) -> Result<usize, CorpusError> {
    text.trim()
        .parse()
        .map_err(|_| bad(clause, format!("`{}` is not a positive integer", text.trim())))
}

fn parse_vertex_bound(clause: &str, value: &str) -> Result<usize, CorpusError> {
    let rest = value
        .strip_prefix("n<=")
        .ok_or_else(|| bad(clause, "expected a bound of the form n<=K"))?;
    parse_num(clause, rest)
}

/// Parse a sweep spec: comma-separated `domain:bound` clauses. Domains are
/// `connected`, `G`, `H`, `H1` (bounds `n<=K`), `n` (a value or range like
/// `2-3`), and `l` (a single value).
pub fn parse_sweep(spec: &str) -> Result<SweepOverrides, CorpusError> {
    let mut o = SweepOverrides::default();
    for clause in spec.split(',') {
        let clause = clause.trim();
        if clause.is_empty() {
            continue;
        }
        let (key, value) = clause
            .split_once(':')
            .ok_or_else(|| bad(clause, "expected domain:bound"))?;
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim();
        match key.as_str() {
            "connected" => o.connected_max = Some(parse_vertex_bound(clause, value)?),
            "g" => o.g_max = Some(parse_vertex_bound(clause, value)?),
            "h" => o.h_max = Some(parse_vertex_bound(clause, value)?),
            "h1" => o.h1_max = Some(parse_vertex_bound(clause, value)?),
            "n" => {
                let (lo, hi) = match value.split_once('-') {
                    Some((a, b)) => (parse_num(clause, a)?, parse_num(clause, b)?),
                    None => {
                        let v = parse_num(clause, value)?;
                        (v, v)
                    }
                };
                if lo < 1 || lo > hi {
                    return Err(bad(clause, "expected a range like 2-3 with 1 <= lo <= hi"));
                }
                o.n_range = Some((lo, hi));
            }
            "l" => {
                let v = parse_num(clause, value)?;
                if v < 1 || v > u32::MAX as usize {
                    return Err(bad(clause, "l must be a positive integer"));
                }
                o.l = Some(v as u32);
            }
            other => {
                return Err(bad(
                    clause,
                    format!("unknown domain `{other}` (expected connected, G, H, H1, n, or l)"),
                ))
            }
        }
    }
    Ok(o)
}

fn validate(o: &SweepOverrides) -> Result<(), CorpusError> {
    let enum_bounds = [
        ("connected", o.connected_max),
        ("G", o.g_max),
        ("H", o.h_max),
        ("H1", o.h1_max),
    ];
    for (what, bound) in enum_bounds {
        if let Some(got) = bound {
            if !(1..=MAX_ENUMERATION_VERTICES).contains(&got) {
                return Err(CorpusError::BadBound {
                    what,
                    got,
                    lo: 1,
                    hi: MAX_ENUMERATION_VERTICES,
                });
            }
        }
    }
    if let Some((lo, hi)) = o.n_range {
        if lo < 1 || lo > hi || hi > crate::bitset::MAX_VERTICES {
            return Err(CorpusError::BadBound {
                what: "n",
                got: hi,
                lo: 1,
                hi: crate::bitset::MAX_VERTICES,
            });
        }
    }
    Ok(())
}

/// Configuration for [`run_corpus`].
#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub checks: Vec<CheckId>,
    pub overrides: SweepOverrides,
    /// Maximum product order to build; larger instances are skipped.
    pub budget: usize,
    /// Worker threads; 0 uses the default pool.
    pub jobs: usize,
}

impl CorpusOptions {
    pub fn new(checks: impl Into<Vec<CheckId>>) -> CorpusOptions {
        CorpusOptions {
            checks: checks.into(),
            overrides: SweepOverrides::default(),
            budget: DEFAULT_BUDGET,
            jobs: 0,
        }
    }
}

/// A corpus run: the serializable report plus per-check subtotals.
#[derive(Clone, Debug)]
pub struct CorpusOutcome {
    pub report: VerificationReport,
    pub by_check: BTreeMap<CheckId, ReportSummary>,
}

/// The canonical command line reproducing a corpus run. Scheduling and
/// output flags are deliberately absent so reruns under different `--jobs`
/// or `--format` settings serialize identically.
fn canonical_command(checks: &[CheckId], options: &CorpusOptions) -> String {
    let ids: Vec<&str> = checks.iter().map(|c| c.id()).collect();
    let mut cmd = format!("dbal verify --check {}", ids.join(","));
    let o = &options.overrides;
    let mut clauses = Vec::new();
    if let Some(v) = o.connected_max {
        clauses.push(format!("connected:n<={v}"));
    }
    if let Some(v) = o.g_max {
        clauses.push(format!("G:n<={v}"));
    }
    if let Some(v) = o.h_max {
        clauses.push(format!("H:n<={v}"));
    }
    if let Some(v) = o.h1_max {
        clauses.push(format!("H1:n<={v}"));
    }
    if let Some((a, b)) = o.n_range {
        clauses.push(format!("n:{a}-{b}"));
    }
    if let Some(l) = o.l {
        clauses.push(format!("l:{l}"));
    }
    if !clauses.is_empty() {
        cmd.push_str(" --sweep ");
        cmd.push_str(&clauses.join(","));
    }
    if options.budget != DEFAULT_BUDGET {
        cmd.push_str(&format!(" --budget {}", options.budget));
    }
    cmd
}

/// Run the selected checks over their (possibly overridden) sweep domains.
pub fn run_corpus(options: &CorpusOptions) -> Result<CorpusOutcome, CorpusError> {
    if options.checks.is_empty() {
        return Err(CorpusError::NoChecks);
    }
    validate(&options.overrides)?;
    // Canonical selection order, duplicates collapsed.
    let checks: Vec<CheckId> = crate::verify::ALL_CHECKS
        .into_iter()
        .filter(|c| options.checks.contains(c))
        .collect();
    let started = Instant::now();
    let acc = with_pool(options.jobs, || sweep_all(&checks, options));
    let wall_time_ms = started.elapsed().as_millis() as u64;
    let report = VerificationReport::new(
        canonical_command(&checks, options),
        acc.counts,
        &acc.kept,
        wall_time_ms,
    );
    Ok(CorpusOutcome {
        report,
        by_check: acc.per_check,
    })
}

/// Bundle instance results evaluated elsewhere (e.g. single-instance runs
/// over file inputs) into the same report shape a sweep produces. Keeps
/// every instance, passes included.
pub fn assemble_outcome(
    command: String,
    results: Vec<InstanceResult>,
    wall_time_ms: u64,
) -> CorpusOutcome {
    let mut acc = Acc::new(true);
    for r in results {
        acc.push(r);
    }
    let report = VerificationReport::new(command, acc.counts, &acc.kept, wall_time_ms);
    CorpusOutcome {
        report,
        by_check: acc.per_check,
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool construction")
            .install(f)
    }
}

fn sweep_all(checks: &[CheckId], options: &CorpusOptions) -> Acc {
    let o = &options.overrides;
    let budget = options.budget;
    let selected = |ids: &[CheckId]| -> Vec<CheckId> {
        checks.iter().copied().filter(|c| ids.contains(c)).collect()
    };

    let mut acc = Acc::new(false);
    let lex = selected(&[CheckId::Lex32, CheckId::Lemma31]);
    if !lex.is_empty() {
        acc.merge(sweep_lex(&lex, o, budget));
    }
    if checks.contains(&CheckId::Prop41) {
        acc.merge(sweep_corona_2db(o, budget));
    }
    let corona = selected(&[CheckId::Lemma43, CheckId::Thm44i, CheckId::Thm44ii]);
    if !corona.is_empty() {
        acc.merge(sweep_corona_l(&corona, o, budget));
    }
    let cart = selected(&[CheckId::Thm52, CheckId::Prop53, CheckId::Cor54]);
    if !cart.is_empty() {
        acc.merge(sweep_cart(&cart, o, budget));
    }
    let single = selected(&[
        CheckId::Cor42,
        CheckId::Claim44,
        CheckId::Prop61,
        CheckId::Cor62,
    ]);
    if !single.is_empty() {
        acc.merge(sweep_connected(&single, o));
    }
    acc
}

// ---------------------------------------------------------------------------
// Domain enumeration helpers.
// ---------------------------------------------------------------------------

/// Contiguous mask ranges covering every graph on `lo_n..=hi_n` vertices.
fn mask_units(lo_n: usize, hi_n: usize) -> Vec<(usize, u64, u64)> {
    let mut units = Vec::new();
    for n in lo_n..=hi_n {
        let total = mask_count(n);
        let mut lo = 0;
        while lo < total {
            let hi = (lo + MASK_CHUNK).min(total);
            units.push((n, lo, hi));
            lo = hi;
        }
    }
    units
}

fn connected_graphs(lo_n: usize, hi_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in lo_n..=hi_n {
        for mask in 0..mask_count(n) {
            if mask_is_connected(n, mask) {
                out.push(graph_from_mask(n, mask));
            }
        }
    }
    out
}

fn all_graphs(lo_n: usize, hi_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in lo_n..=hi_n {
        for mask in 0..mask_count(n) {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

fn merge_all(partials: Vec<Acc>) -> Acc {
    let mut acc = Acc::new(false);
    for p in partials {
        acc.merge(p);
    }
    acc
}

fn l_values(restrict: Option<u32>, lo: u32, hi: u32) -> Vec<u32> {
    match restrict {
        Some(l) => vec![l],
        None if lo > hi => Vec::new(),
        None => (lo..=hi).collect(),
    }
}

// ---------------------------------------------------------------------------
// Per-group sweeps.
// ---------------------------------------------------------------------------

/// lex-3.2 and lemma-3.1: connected `G` (order 2..=5 by default) with
/// diameter at least three, against every graph `H` (order up to 3 by
/// default).
fn sweep_lex(checks: &[CheckId], o: &SweepOverrides, budget: usize) -> Acc {
    let gs = connected_graphs(2, o.g_max.unwrap_or(5));
    let hs = all_graphs(1, o.h_max.unwrap_or(3));
    let partials: Vec<Acc> = gs
        .par_chunks(GRAPH_CHUNK)
        .map(|chunk| {
            let mut acc = Acc::new(false);
            for g in chunk {
                let gf = Facts::new(g).expect("enumerated graph is connected");
                if gf.diam() < 3 {
                    continue;
                }
                for h in &hs {
                    for &check in checks {
                        match check {
                            CheckId::Lex32 => {
                                for l in l_values(o.l, 3, gf.diam()) {
                                    acc.push(eval_lex(g, &gf, h, l, budget));
                                }
                            }
                            CheckId::Lemma31 => acc.push(eval_lex_count(g, &gf, h, budget)),
                            _ => unreachable!("not a lexicographic check"),
                        }
                    }
                }
            }
            acc
        })
        .collect();
    merge_all(partials)
}

/// prop-4.1 in two regimes: general connected `G` (order 2..=4 by default)
/// against every `H` up to order 3, then `G = K1` against every `H` of
/// order 2..=6 — the regime where the prediction can be positive.
fn sweep_corona_2db(o: &SweepOverrides, budget: usize) -> Acc {
    let gs = connected_graphs(2, o.g_max.unwrap_or(4));
    let hs = all_graphs(1, o.h_max.unwrap_or(3));
    let general: Vec<Acc> = gs
        .par_chunks(GRAPH_CHUNK)
        .map(|chunk| {
            let mut acc = Acc::new(false);
            for g in chunk {
                let gf = Facts::new(g).expect("enumerated graph is connected");
                for h in &hs {
                    acc.push(eval_corona_2db(g, &gf, h, budget));
                }
            }
            acc
        })
        .collect();
    let mut acc = merge_all(general);

    let k1 = Family::Complete(1).build().expect("one-vertex graph");
    let units = mask_units(2, o.h1_max.unwrap_or(6));
    let rooted: Vec<Acc> = units
        .par_iter()
        .map(|&(n, lo, hi)| {
            let k1f = Facts::new(&k1).expect("K1 is connected");
            let mut acc = Acc::new(false);
            for mask in lo..hi {
                let h = graph_from_mask(n, mask);
                acc.push(eval_corona_2db(&k1, &k1f, &h, budget));
            }
            acc
        })
        .collect();
    acc.merge(merge_all(rooted));
    acc
}

/// lemma-4.3 and both parts of thm-4.4: connected `G` (order 2..=5 by
/// default) against every `H` up to order 3, at every `l` each statement
/// covers.
fn sweep_corona_l(checks: &[CheckId], o: &SweepOverrides, budget: usize) -> Acc {
    let gs = connected_graphs(2, o.g_max.unwrap_or(5));
    let hs = all_graphs(1, o.h_max.unwrap_or(3));
    let partials: Vec<Acc> = gs
        .par_chunks(GRAPH_CHUNK)
        .map(|chunk| {
            let mut acc = Acc::new(false);
            for g in chunk {
                let gf = Facts::new(g).expect("enumerated graph is connected");
                let diam = gf.diam();
                for h in &hs {
                    for &check in checks {
                        let (lo, hi) = match check {
                            CheckId::Lemma43 => (3, diam + 2),
                            CheckId::Thm44i => (diam + 2, diam + 2),
                            CheckId::Thm44ii => (3, diam + 1),
                            _ => unreachable!("not a corona check"),
                        };
                        for l in l_values(o.l, lo, hi) {
                            acc.push(eval_corona_l(check, g, &gf, h, l, budget));
                        }
                    }
                }
            }
            acc
        })
        .collect();
    merge_all(partials)
}

/// thm-5.2, prop-5.3, and cor-5.4 over `K_n x H` for `n` in 2..=3 and
/// connected `H` up to order 6 by default.
fn sweep_cart(checks: &[CheckId], o: &SweepOverrides, budget: usize) -> Acc {
    let (n_lo, n_hi) = o.n_range.unwrap_or((2, 3));
    let units = mask_units(1, o.h_max.unwrap_or(6));
    let partials: Vec<Acc> = units
        .par_iter()
        .map(|&(hn, lo, hi)| {
            let mut acc = Acc::new(false);
            for mask in lo..hi {
                if !mask_is_connected(hn, mask) {
                    continue;
                }
                let h = graph_from_mask(hn, mask);
                let hf = Facts::new(&h).expect("connectivity checked");
                for n in n_lo..=n_hi {
                    for &check in checks {
                        match check {
                            CheckId::Thm52 | CheckId::Prop53 => {
                                for l in l_values(o.l, 2, hf.diam()) {
                                    acc.push(eval_cart(check, n, &h, &hf, l, budget));
                                }
                            }
                            CheckId::Cor54 => {
                                acc.push(eval_cart(check, n, &h, &hf, o.l.unwrap_or(2), budget));
                            }
                            _ => unreachable!("not a cartesian check"),
                        }
                    }
                }
            }
            acc
        })
        .collect();
    merge_all(partials)
}

/// cor-4.2, claim-4.4, prop-6.1, and cor-6.2 share one pass over every
/// connected graph up to order 7 by default. Facts are computed lazily:
/// most graphs have no universal vertex, so a cor-4.2-only sweep skips the
/// distance work entirely for them.
fn sweep_connected(checks: &[CheckId], o: &SweepOverrides) -> Acc {
    let units = mask_units(1, o.connected_max.unwrap_or(MAX_ENUMERATION_VERTICES));
    let partials: Vec<Acc> = units
        .par_iter()
        .map(|&(n, lo, hi)| {
            let mut acc = Acc::new(false);
            for mask in lo..hi {
                if !mask_is_connected(n, mask) {
                    continue;
                }
                let g = graph_from_mask(n, mask);
                let mut facts: Option<Facts> = None;
                for &check in checks {
                    match check {
                        CheckId::Cor42 => {
                            let universal = g.universal_vertices();
                            if universal.is_empty() {
                                continue;
                            }
                            let gf = lazy_facts(&mut facts, &g);
                            for v in universal {
                                acc.push(eval_universal(&g, gf, v));
                            }
                        }
                        CheckId::Claim44 => {
                            let gf = lazy_facts(&mut facts, &g);
                            acc.push(eval_claim(&g, gf));
                        }
                        CheckId::Prop61 => {
                            let gf = lazy_facts(&mut facts, &g);
                            for l in l_values(o.l, 1, gf.diam()) {
                                acc.push(eval_char(&g, gf, l));
                            }
                        }
                        CheckId::Cor62 => {
                            let gf = lazy_facts(&mut facts, &g);
                            if gf.diam() == 2 {
                                acc.push(eval_diam2(&g, gf));
                            }
                        }
                        _ => unreachable!("not a single-graph check"),
                    }
                }
            }
            acc
        })
        .collect();
    merge_all(partials)
}

fn lazy_facts<'a>(slot: &'a mut Option<Facts>, g: &Graph) -> &'a Facts {
    slot.get_or_insert_with(|| Facts::new(g).expect("enumerated graph is connected"))
}
