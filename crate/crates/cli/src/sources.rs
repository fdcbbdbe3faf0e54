//! Graph sources for the command line.
//!
//! A *source* names one or more graphs: either a compact spec such as
//! `K5`, `cycle:7`, `K2,3` or `g6:Bw`, or a path to a file holding an
//! `n m`-headed edge list or one graph6 string per line. Specs take
//! precedence over paths; prefix a path with `./` when a file name would
//! also parse as a spec.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use dbal_core::graph6::{parse_edge_list, parse_graph6_lines};
use dbal_core::{parse_graph_spec, Graph};

/// Resolve a source to its list of graphs. Specs yield exactly one graph;
/// files may hold any number, and an empty file is an empty list, not an
/// error.
pub fn resolve(source: &str) -> Result<Vec<Graph>> {
    match parse_graph_spec(source) {
        Ok(g) => Ok(vec![g]),
        Err(spec_err) => {
            if !Path::new(source).exists() {
                bail!("`{source}` is not a graph spec ({spec_err}) and no such file exists");
            }
            read_graph_file(source)
        }
    }
}

/// Resolve a source that must name exactly one graph.
pub fn resolve_one(source: &str) -> Result<Graph> {
    let mut graphs = resolve(source)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("length checked")),
        0 => bail!("`{source}` holds no graphs"),
        k => bail!("`{source}` holds {k} graphs where exactly one is expected"),
    }
}

/// Read a graph file: an edge list when the first content line is an
/// `n m` header, otherwise one graph6 string per line. Blank lines and
/// `#` comments are skipped in both formats.
pub fn read_graph_file(path: &str) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    if looks_like_edge_list(&text) {
        let g =
            parse_edge_list(&text).with_context(|| format!("parsing {path} as an edge list"))?;
        return Ok(vec![g]);
    }
    let mut graphs = Vec::new();
    for (i, parsed) in parse_graph6_lines(&text).enumerate() {
        let g = parsed.with_context(|| format!("parsing graph #{} in {path}", i + 1))?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Decimal digits sit outside the graph6 alphabet, so a first line of two
/// integers can only be an edge-list header.
fn looks_like_edge_list(text: &str) -> bool {
    let Some(first) = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
    else {
        return false;
    };
    let mut tokens = first.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(a), Some(b), None) => a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn specs_resolve_to_single_graphs() {
        let graphs = resolve("K2,3").unwrap();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].n(), 5);
        assert_eq!(resolve_one("cycle:7").unwrap().n(), 7);
        assert_eq!(resolve_one("g6:Bw").unwrap().edge_count(), 3);
    }

    #[test]
    fn graph6_files_may_hold_many_graphs() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "# two graphs").unwrap();
        writeln!(f, "Bw").unwrap();
        writeln!(f).unwrap();
        writeln!(f, "Cr").unwrap();
        let graphs = resolve(f.path().to_str().unwrap()).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].n(), 3);
        assert_eq!(graphs[1].n(), 4);
    }

    #[test]
    fn edge_list_files_are_sniffed_by_their_header() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "4 3\n0 1\n1 2\n2 3\n").unwrap();
        let g = resolve_one(f.path().to_str().unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 3));
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn empty_files_resolve_to_no_graphs() {
        let f = tempfile::NamedTempFile::new().unwrap();
        assert!(resolve(f.path().to_str().unwrap()).unwrap().is_empty());
    }

    #[test]
    fn missing_sources_are_rejected_with_both_readings() {
        let err = resolve("no-such-thing").unwrap_err().to_string();
        assert!(err.contains("no such file"), "{err}");
    }
}
