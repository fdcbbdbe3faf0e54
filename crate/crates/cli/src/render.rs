//! Typed reports for the `analyze` and `product` commands.
//!
//! Serde structs rather than ad-hoc JSON values, so the field order is
//! fixed and reruns diff cleanly. Each report renders itself both ways;
//! text and JSON always carry the same verdicts.

use std::fmt::Write as _;

use serde::Serialize;

use dbal_core::graph6::to_graph6;
use dbal_core::metrics::{
    classify_join_of_regulars, local_regularity_witness, w_counts, JoinClassification,
};
use dbal_core::{all_pairs_distances, balance_profile, Graph, ProductGraph, TOOL_VERSION};

/// Order, size, and graph6 form of one graph. Graphs above 62 vertices
/// have no short-form graph6 encoding; the field is absent for them.
#[derive(Serialize)]
pub struct GraphSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

impl GraphSummary {
    fn new(g: &Graph) -> GraphSummary {
        GraphSummary {
            label: g.label().map(str::to_string),
            n: g.n(),
            m: g.edge_count(),
            graph6: to_graph6(g).ok(),
        }
    }

    fn display_name(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => "graph".to_string(),
        }
    }

    fn g6_suffix(&self) -> String {
        match &self.graph6 {
            Some(s) => format!("  g6:{s}"),
            None => String::new(),
        }
    }
}

#[derive(Serialize)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
    pub sequence: Vec<usize>,
}

/// First pair at distance `l` whose two sides differ, with the side sizes.
#[derive(Serialize)]
pub struct UnbalancedPair {
    pub u: usize,
    pub v: usize,
    pub closer_to_u: usize,
    pub closer_to_v: usize,
}

#[derive(Serialize)]
pub struct BalanceLine {
    pub l: u32,
    pub balanced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<UnbalancedPair>,
}

/// Everything `analyze` reports about one connected graph.
#[derive(Serialize)]
pub struct AnalyzeReport {
    pub tool_version: String,
    pub graph: GraphSummary,
    pub diameter: u32,
    pub degrees: DegreeSummary,
    pub locally_regular: bool,
    /// First non-adjacent pair with different degrees, when not locally
    /// regular.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_regularity_witness: Option<(usize, usize)>,
    pub balance_profile: Vec<BalanceLine>,
    pub highly_distance_balanced: bool,
    /// Join-structure classification; reported for diameter-2 graphs,
    /// where it decides balance at distance 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join_classification: Option<String>,
}

impl AnalyzeReport {
    /// `None` when the graph is disconnected.
    pub fn build(g: &Graph) -> Option<AnalyzeReport> {
        let d = all_pairs_distances(g);
        d.diameter()?;
        let profile = balance_profile(&d).expect("diameter exists, so the graph is connected");
        let degrees = g.degrees();
        let witness = local_regularity_witness(g);
        let lines = profile
            .verdicts
            .iter()
            .map(|v| BalanceLine {
                l: v.l,
                balanced: v.balanced,
                witness: v.witness.map(|(u, w)| {
                    let (cu, cv) = w_counts(&d, u, w);
                    UnbalancedPair {
                        u,
                        v: w,
                        closer_to_u: cu,
                        closer_to_v: cv,
                    }
                }),
            })
            .collect();
        Some(AnalyzeReport {
            tool_version: TOOL_VERSION.to_string(),
            graph: GraphSummary::new(g),
            diameter: profile.diam,
            degrees: DegreeSummary {
                min: degrees.iter().copied().min().unwrap_or(0),
                max: degrees.iter().copied().max().unwrap_or(0),
                regular: g.is_regular(),
                sequence: degrees,
            },
            locally_regular: witness.is_none(),
            local_regularity_witness: witness,
            balance_profile: lines,
            highly_distance_balanced: profile.is_highly_balanced(),
            join_classification: (profile.diam == 2)
                .then(|| render_classification(classify_join_of_regulars(g))),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: {} vertices, {} edges{}",
            self.graph.display_name(),
            self.graph.n,
            self.graph.m,
            self.graph.g6_suffix()
        );
        let _ = writeln!(out, "diameter: {}", self.diameter);
        let regular = if self.degrees.regular { ", regular" } else { "" };
        let _ = writeln!(
            out,
            "degrees: {}..{}{regular}  {:?}",
            self.degrees.min, self.degrees.max, self.degrees.sequence
        );
        match self.local_regularity_witness {
            None => {
                let _ = writeln!(out, "locally regular: yes");
            }
            Some((u, v)) => {
                let _ = writeln!(
                    out,
                    "locally regular: no (non-adjacent vertices {u} and {v} have different degrees)"
                );
            }
        }
        if let Some(c) = &self.join_classification {
            let _ = writeln!(out, "join classification: {c}");
        }
        let _ = writeln!(out, "balance profile:");
        for line in &self.balance_profile {
            match &line.witness {
                None => {
                    let _ = writeln!(out, "  l={}: balanced", line.l);
                }
                Some(w) => {
                    let _ = writeln!(
                        out,
                        "  l={}: not balanced (pair ({}, {}) has sides {} vs {})",
                        line.l, w.u, w.v, w.closer_to_u, w.closer_to_v
                    );
                }
            }
        }
        let _ = writeln!(
            out,
            "highly distance-balanced: {}",
            yes_no(self.highly_distance_balanced)
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn render_classification(c: JoinClassification) -> String {
    c.to_string()
}

/// BFS-vs-closed-form validation of a product's distance law.
#[derive(Serialize)]
pub struct FormulaSummary {
    /// Ordered vertex pairs compared (order squared).
    pub pairs: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

#[derive(Serialize)]
pub struct ProductSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    /// Absent when the product is disconnected.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<u32>,
}

/// Everything `product` reports about one constructed product.
#[derive(Serialize)]
pub struct ProductReport {
    pub tool_version: String,
    pub kind: String,
    pub g: GraphSummary,
    pub h: GraphSummary,
    pub product: ProductSummary,
    pub distance_formula: FormulaSummary,
}

impl ProductReport {
    pub fn build(p: &ProductGraph) -> ProductReport {
        let graph = p.graph();
        let dp = all_pairs_distances(graph);
        let distance_formula = match p.check_distance_formula(&dp) {
            Ok(()) => FormulaSummary {
                pairs: graph.n() * graph.n(),
                ok: true,
                mismatch: None,
            },
            Err(m) => FormulaSummary {
                pairs: graph.n() * graph.n(),
                ok: false,
                mismatch: Some(m.to_string()),
            },
        };
        ProductReport {
            tool_version: TOOL_VERSION.to_string(),
            kind: p.kind().to_string(),
            g: GraphSummary::new(p.g_factor()),
            h: GraphSummary::new(p.h_factor()),
            product: ProductSummary {
                label: graph.label().map(str::to_string),
                n: graph.n(),
                m: graph.edge_count(),
                graph6: to_graph6(graph).ok(),
                diameter: dp.diameter(),
            },
            distance_formula,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} product of {} (n={}) and {} (n={})",
            self.kind,
            self.g.display_name(),
            self.g.n,
            self.h.display_name(),
            self.h.n
        );
        let diameter = match self.product.diameter {
            Some(d) => d.to_string(),
            None => "n/a (disconnected)".to_string(),
        };
        let _ = writeln!(
            out,
            "product: {} vertices, {} edges, diameter {}{}",
            self.product.n,
            self.product.m,
            diameter,
            match &self.product.graph6 {
                Some(s) => format!("  g6:{s}"),
                None => String::new(),
            }
        );
        if self.distance_formula.ok {
            let _ = writeln!(
                out,
                "distance formula: matches BFS on all {} ordered pairs",
                self.distance_formula.pairs
            );
        } else {
            let _ = writeln!(
                out,
                "distance formula: MISMATCH ({})",
                self.distance_formula
                    .mismatch
                    .as_deref()
                    .unwrap_or("unknown")
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dbal_core::Family;

    #[test]
    fn analyze_reports_the_path_profile() {
        let g = Family::Path(4).build().unwrap();
        let report = AnalyzeReport::build(&g).unwrap();
        assert_eq!(report.diameter, 3);
        assert!(!report.highly_distance_balanced);
        let balanced: Vec<bool> = report.balance_profile.iter().map(|b| b.balanced).collect();
        assert_eq!(balanced, [false, false, true]);
        let w = report.balance_profile[0].witness.as_ref().unwrap();
        assert_ne!(w.closer_to_u, w.closer_to_v);
        assert!(report.join_classification.is_none());
        let text = report.to_text();
        assert!(text.contains("l=3: balanced"), "{text}");
        assert!(text.contains("highly distance-balanced: no"), "{text}");
    }

    #[test]
    fn analyze_classifies_diameter_two_graphs() {
        let g = Family::Wheel(6).build().unwrap();
        let report = AnalyzeReport::build(&g).unwrap();
        assert_eq!(report.diameter, 2);
        let class = report.join_classification.as_deref().unwrap();
        assert_eq!(class, "nonregular-join-of-regulars");
        assert!(report.balance_profile[1].balanced);
    }

    #[test]
    fn analyze_declines_disconnected_graphs() {
        let g = Family::Empty(3).build().unwrap();
        assert!(AnalyzeReport::build(&g).is_none());
    }

    #[test]
    fn product_reports_carry_a_formula_verdict() {
        let g = Family::Complete(2).build().unwrap();
        let h = Family::Cycle(4).build().unwrap();
        let p = ProductGraph::cartesian(&g, &h).unwrap();
        let report = ProductReport::build(&p);
        assert_eq!(report.kind, "cartesian");
        assert_eq!(report.product.n, 8);
        assert_eq!(report.product.diameter, Some(3));
        assert!(report.distance_formula.ok);
        assert_eq!(report.distance_formula.pairs, 64);
        let json = report.to_json();
        assert!(json.contains("\"kind\": \"cartesian\""), "{json}");
    }
}
