//! `dbal` — distance-balance analysis of graphs and graph products.
//!
//! Three subcommands:
//!
//! * `analyze` reports order, size, diameter, degrees, local regularity
//!   and the full distance-balance profile of one connected graph;
//! * `product` builds a cartesian, lexicographic or corona product and
//!   validates its closed-form distance law against BFS;
//! * `verify` runs the product characterization checks, either on explicit
//!   inputs (single-instance mode) or over exhaustive sweeps of small
//!   graphs.
//!
//! Exit codes: 0 success, 1 a check found a counterexample, 2 input error,
//! 3 hypothesis not applicable (disconnected `analyze` input, or a
//! single-instance `verify` whose every instance was skipped).

mod render;
mod sources;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dbal_core::graph6::parse_edge_list;
use dbal_core::verify::{
    assemble_outcome, parse_sweep, render_text, run_corpus, run_single, CheckId, CorpusOptions,
    CorpusOutcome, SingleInputs, SweepOverrides, ALL_CHECKS, DEFAULT_BUDGET,
};
use dbal_core::{parse_graph6, parse_graph_spec, Graph, ProductGraph};

#[derive(Parser)]
#[command(
    name = "dbal",
    version = dbal_core::TOOL_VERSION,
    about = "Distance-balance analysis of graphs and graph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the distance-balance profile of one connected graph
    Analyze(AnalyzeArgs),
    /// Build a product graph and validate its distance law against BFS
    Product(ProductArgs),
    /// Run characterization checks on explicit inputs or exhaustive sweeps
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[command(group(
    clap::ArgGroup::new("source").required(true).args(["g6", "edges", "family"])
))]
struct AnalyzeArgs {
    /// graph6 string, e.g. "Bw"
    #[arg(long)]
    g6: Option<String>,
    /// Path to an edge-list file: an "n m" header, then one "u v" line per edge
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Family spec ("cycle:7", "cbip:2,3") or shorthand ("C7", "K2,3");
    /// a bare name takes its parameter from --n
    #[arg(long)]
    family: Option<String>,
    /// Parameter for --family, e.g. --family path --n 4
    #[arg(long, requires = "family")]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    #[value(alias = "cart")]
    Cartesian,
    #[value(alias = "lex")]
    Lexicographic,
    Corona,
}

#[derive(Args)]
struct ProductArgs {
    /// cartesian | lexicographic | corona
    #[arg(value_enum)]
    kind: KindArg,
    /// First factor: a graph spec ("K2", "cycle:5", "g6:Bw") or a file path
    g: String,
    /// Second factor
    h: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the product's graph6 line here (the report still goes to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest product order to build
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check ids, comma separated (e.g. "lex-3.2,prop-6.1"), or "all"
    #[arg(long, required = true, value_delimiter = ',')]
    check: Vec<String>,
    /// Sweep domain overrides: "connected:n<=6", "G:n<=5,H:n<=3", "n:2-3", "l:3"
    #[arg(long, conflicts_with_all = ["g", "h", "n"])]
    sweep: Option<String>,
    /// First input graph: a spec or a file of graph6 lines (single-instance mode)
    #[arg(long)]
    g: Option<String>,
    /// Second input graph (single-instance mode)
    #[arg(long)]
    h: Option<String>,
    /// Order of the complete factor for the cartesian checks (single-instance mode)
    #[arg(long)]
    n: Option<usize>,
    /// Check one distance only, instead of every distance the check covers
    #[arg(long)]
    l: Option<u32>,
    /// Worker threads for sweeps; 0 means one per core
    #[arg(long, env = "DBAL_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Largest product order to build; larger instances are skipped
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Product(args) => cmd_product(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode> {
    let g = analyze_input(&args)?;
    let Some(report) = render::AnalyzeReport::build(&g) else {
        eprintln!("graph is disconnected; distance-balance is undefined");
        return Ok(ExitCode::from(3));
    };
    let payload = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    emit(&payload, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn analyze_input(args: &AnalyzeArgs) -> Result<Graph> {
    if let Some(s) = &args.g6 {
        let s = s.strip_prefix("g6:").unwrap_or(s);
        return Ok(parse_graph6(s)?);
    }
    if let Some(path) = &args.edges {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        return Ok(parse_edge_list(&text)?);
    }
    let family = args.family.as_ref().expect("clap guarantees one source");
    let spec = match args.n {
        Some(n) => format!("{family}:{n}"),
        None => family.clone(),
    };
    Ok(parse_graph_spec(&spec)?)
}

// ---------------------------------------------------------------------------
// product
// ---------------------------------------------------------------------------

fn cmd_product(args: ProductArgs) -> Result<ExitCode> {
    ensure!(args.budget >= 1, "--budget must be positive");
    let g = sources::resolve_one(&args.g)?;
    let h = sources::resolve_one(&args.h)?;
    let order = match args.kind {
        KindArg::Cartesian | KindArg::Lexicographic => g.n() * h.n(),
        KindArg::Corona => g.n() * (1 + h.n()),
    };
    ensure!(
        order <= args.budget,
        "the product would have {order} vertices, above the --budget cap of {}",
        args.budget
    );
    let p = match args.kind {
        KindArg::Cartesian => ProductGraph::cartesian(&g, &h),
        KindArg::Lexicographic => ProductGraph::lexicographic(&g, &h),
        KindArg::Corona => ProductGraph::corona(&g, &h),
    }?;
    let report = render::ProductReport::build(&p);
    if let Some(path) = &args.out {
        let line = report
            .product
            .graph6
            .as_deref()
            .context("products on more than 62 vertices have no graph6 form")?;
        fs::write(path, format!("{line}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let payload = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    print!("{payload}");
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    ensure!(args.budget >= 1, "--budget must be positive");
    let checks = parse_checks(&args.check)?;
    let single = args.g.is_some() || args.h.is_some() || args.n.is_some();
    let outcome = if single {
        run_single_mode(&args, &checks)?
    } else {
        let mut overrides = match &args.sweep {
            Some(s) => parse_sweep(s)?,
            None => SweepOverrides::default(),
        };
        if let Some(l) = args.l {
            overrides.l = Some(l);
        }
        run_corpus(&CorpusOptions {
            checks,
            overrides,
            budget: args.budget,
            jobs: args.jobs,
        })?
    };
    let payload = match args.format {
        Format::Text => render_text(&outcome.report, Some(&outcome.by_check)),
        Format::Json => outcome.report.to_json() + "\n",
    };
    emit(&payload, args.out.as_deref())?;
    Ok(ExitCode::from(verify_exit_code(
        single,
        outcome.report.summary,
    )))
}

/// 1 on any counterexample; 3 when explicit inputs satisfied no check's
/// hypotheses (sweeps skip routinely, so only single-instance mode maps
/// all-skipped to 3); 0 otherwise, including a single-instance run over an
/// empty graph file, which checks nothing and has nothing to report.
fn verify_exit_code(single: bool, s: dbal_core::verify::ReportSummary) -> u8 {
    if s.failed > 0 {
        1
    } else if single && s.checked == 0 && s.skipped > 0 {
        3
    } else {
        0
    }
}

/// Evaluate the selected checks on explicit inputs. File sources may hold
/// several graphs; every (check, g, h) combination runs, so two files act
/// as a small cross-product sweep.
fn run_single_mode(args: &VerifyArgs, checks: &[CheckId]) -> Result<CorpusOutcome> {
    let started = Instant::now();
    let g_slots = slots(args.g.as_deref().map(sources::resolve).transpose()?);
    let h_slots = slots(args.h.as_deref().map(sources::resolve).transpose()?);
    let mut results = Vec::new();
    for &check in checks {
        for g in &g_slots {
            for h in &h_slots {
                let inputs = SingleInputs {
                    g: g.clone(),
                    h: h.clone(),
                    n: args.n,
                    l: args.l,
                    budget: args.budget,
                };
                results.extend(run_single(check, &inputs)?);
            }
        }
    }
    Ok(assemble_outcome(
        single_command(args, checks),
        results,
        started.elapsed().as_millis() as u64,
    ))
}

fn slots(graphs: Option<Vec<Graph>>) -> Vec<Option<Graph>> {
    match graphs {
        None => vec![None],
        Some(v) => v.into_iter().map(Some).collect(),
    }
}

fn parse_checks(raw: &[String]) -> Result<Vec<CheckId>> {
    let mut selected = Vec::new();
    for token in raw {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if token.eq_ignore_ascii_case("all") {
            selected.extend(ALL_CHECKS);
        } else {
            selected.push(token.parse::<CheckId>()?);
        }
    }
    // Canonical order, duplicates collapsed, so equivalent selections
    // produce identical reports.
    let checks: Vec<CheckId> = ALL_CHECKS
        .into_iter()
        .filter(|c| selected.contains(c))
        .collect();
    ensure!(!checks.is_empty(), "no checks selected");
    Ok(checks)
}

/// The canonical command recorded in single-instance reports. Scheduling
/// and output flags are omitted, mirroring the sweep reports.
fn single_command(args: &VerifyArgs, checks: &[CheckId]) -> String {
    let ids: Vec<&str> = checks.iter().map(|c| c.id()).collect();
    let mut cmd = format!("dbal verify --check {}", ids.join(","));
    if let Some(g) = &args.g {
        let _ = write!(cmd, " --g {g}");
    }
    if let Some(h) = &args.h {
        let _ = write!(cmd, " --h {h}");
    }
    if let Some(n) = args.n {
        let _ = write!(cmd, " --n {n}");
    }
    if let Some(l) = args.l {
        let _ = write!(cmd, " --l {l}");
    }
    if args.budget != DEFAULT_BUDGET {
        let _ = write!(cmd, " --budget {}", args.budget);
    }
    cmd
}

fn emit(payload: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, payload)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{payload}"),
    }
    Ok(())
}
