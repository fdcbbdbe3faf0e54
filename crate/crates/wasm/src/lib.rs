//! Browser bindings for the distance-balance demo page.
//!
//! Every function takes plain strings and returns a JSON string shaped as
//! `{"ok": ...}` or `{"error": "..."}`. Keeping the boundary stringly
//! avoids marshalling structured values across the wasm ABI, and the same
//! functions compile natively, so the payloads are unit-tested without a
//! browser. Payloads carry explicit edge lists and factor coordinates so
//! the page can lay out drawings without re-deriving any structure.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use dbal_core::metrics::w_partition;
use dbal_core::{
    all_pairs_distances, balance_profile, parse_graph6, parse_graph_spec, to_graph6, Graph,
    ProductGraph,
};

/// Parse a graph from a family spec (`C5`, `cycle:7`, `cbip:2,3`) or a
/// graph6 string, with or without the `g6:` prefix.
fn graph_from_text(source: &str) -> Result<Graph, String> {
    let source = source.trim();
    if source.is_empty() {
        return Err("enter a graph spec such as C5, path:4 or a graph6 string".to_string());
    }
    if let Ok(g) = parse_graph_spec(source) {
        return Ok(g);
    }
    parse_graph6(source)
        .map_err(|e| format!("`{source}` is neither a family spec nor graph6 ({e})"))
}

fn ok_json(value: impl Serialize) -> String {
    #[derive(Serialize)]
    struct Envelope<T: Serialize> {
        ok: T,
    }
    serde_json::to_string(&Envelope { ok: value }).expect("payload serialization cannot fail")
}

fn err_json(message: String) -> String {
    #[derive(Serialize)]
    struct Envelope {
        error: String,
    }
    serde_json::to_string(&Envelope { error: message })
        .expect("payload serialization cannot fail")
}

#[derive(Serialize)]
struct ProfileEntry {
    l: u32,
    balanced: bool,
    witness: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct AnalyzePayload {
    label: Option<String>,
    n: usize,
    m: usize,
    graph6: Option<String>,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    connected: bool,
    diameter: Option<u32>,
    profile: Vec<ProfileEntry>,
    highly_balanced: Option<bool>,
}

/// Balance profile and drawing data for one graph.
#[wasm_bindgen]
pub fn analyze(source: &str) -> String {
    match analyze_impl(source) {
        Ok(payload) => ok_json(payload),
        Err(message) => err_json(message),
    }
}

fn analyze_impl(source: &str) -> Result<AnalyzePayload, String> {
    let g = graph_from_text(source)?;
    let d = all_pairs_distances(&g);
    let profile = d.diameter().map(|_| {
        balance_profile(&d).expect("diameter exists, so the graph is connected")
    });
    Ok(AnalyzePayload {
        label: g.label().map(str::to_string),
        n: g.n(),
        m: g.edge_count(),
        graph6: to_graph6(&g).ok(),
        edges: g.edges(),
        degrees: g.degrees(),
        connected: d.is_connected(),
        diameter: d.diameter(),
        profile: profile
            .as_ref()
            .map(|p| {
                p.verdicts
                    .iter()
                    .map(|v| ProfileEntry {
                        l: v.l,
                        balanced: v.balanced,
                        witness: v.witness,
                    })
                    .collect()
            })
            .unwrap_or_default(),
        highly_balanced: profile.as_ref().map(|p| p.is_highly_balanced()),
    })
}

/// Factor coordinates of one product vertex; `h` is absent for corona
/// roots.
#[derive(Serialize)]
struct VertexCoord {
    g: usize,
    h: Option<usize>,
}

#[derive(Serialize)]
struct ProductPayload {
    kind: String,
    label: Option<String>,
    g_order: usize,
    h_order: usize,
    n: usize,
    m: usize,
    graph6: Option<String>,
    diameter: Option<u32>,
    /// Closed-form distance law validated against BFS.
    formula_ok: bool,
    vertices: Vec<VertexCoord>,
    edges: Vec<(usize, usize)>,
}

/// Build a cartesian, lexicographic or corona product and return it with
/// per-vertex factor coordinates for layout.
#[wasm_bindgen]
pub fn product(kind: &str, g: &str, h: &str) -> String {
    match product_impl(kind, g, h) {
        Ok(payload) => ok_json(payload),
        Err(message) => err_json(message),
    }
}

fn product_impl(kind: &str, g: &str, h: &str) -> Result<ProductPayload, String> {
    let g = graph_from_text(g)?;
    let h = graph_from_text(h)?;
    let p = match kind.trim().to_ascii_lowercase().as_str() {
        "cartesian" | "cart" => ProductGraph::cartesian(&g, &h),
        "lexicographic" | "lex" => ProductGraph::lexicographic(&g, &h),
        "corona" => ProductGraph::corona(&g, &h),
        other => return Err(format!("unknown product kind `{other}`")),
    }
    .map_err(|e| e.to_string())?;
    let graph = p.graph();
    let dp = all_pairs_distances(graph);
    let vertices = (0..graph.n())
        .map(|i| {
            let v = p.unflat(i);
            VertexCoord { g: v.g, h: v.h }
        })
        .collect();
    Ok(ProductPayload {
        kind: p.kind().to_string(),
        label: graph.label().map(str::to_string),
        g_order: g.n(),
        h_order: h.n(),
        n: graph.n(),
        m: graph.edge_count(),
        graph6: to_graph6(graph).ok(),
        diameter: dp.diameter(),
        formula_ok: p.check_distance_formula(&dp).is_ok(),
        vertices,
        edges: graph.edges(),
    })
}

#[derive(Serialize)]
struct WPartitionPayload {
    n: usize,
    edges: Vec<(usize, usize)>,
    u: usize,
    v: usize,
    distance: u32,
    /// Per-vertex side: `"u"`, `"equal"` or `"v"`.
    sides: Vec<&'static str>,
    closer_u: usize,
    equidistant: usize,
    closer_v: usize,
    balanced: bool,
}

/// Split a graph's vertices by which of `u`, `v` they are strictly closer
/// to — the quantity whose equality across all pairs at one distance makes
/// the graph distance-balanced there.
#[wasm_bindgen]
pub fn w_partition_of(source: &str, u: usize, v: usize) -> String {
    match w_partition_impl(source, u, v) {
        Ok(payload) => ok_json(payload),
        Err(message) => err_json(message),
    }
}

fn w_partition_impl(source: &str, u: usize, v: usize) -> Result<WPartitionPayload, String> {
    let g = graph_from_text(source)?;
    if u >= g.n() || v >= g.n() {
        return Err(format!(
            "vertices must lie in 0..{}, got ({u}, {v})",
            g.n()
        ));
    }
    if u == v {
        return Err("pick two distinct vertices".to_string());
    }
    let d = all_pairs_distances(&g);
    let parts = w_partition(&d, u, v).map_err(|e| e.to_string())?;
    let sides = (0..g.n())
        .map(|x| {
            if parts.closer_u.contains(x) {
                "u"
            } else if parts.closer_v.contains(x) {
                "v"
            } else {
                "equal"
            }
        })
        .collect();
    let (cu, cv) = (parts.closer_u.len(), parts.closer_v.len());
    Ok(WPartitionPayload {
        n: g.n(),
        edges: g.edges(),
        u,
        v,
        distance: d.dist(u, v),
        sides,
        closer_u: cu,
        equidistant: parts.equidistant.len(),
        closer_v: cv,
        balanced: cu == cv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn ok(payload: &str) -> Value {
        let value: Value = serde_json::from_str(payload).expect("payload is JSON");
        assert!(
            value.get("error").is_none(),
            "unexpected error: {}",
            value["error"]
        );
        value["ok"].clone()
    }

    #[test]
    fn analyze_reports_profiles_and_drawing_data() {
        let v = ok(&analyze("C5"));
        assert_eq!(v["n"], 5);
        assert_eq!(v["m"], 5);
        assert_eq!(v["connected"], true);
        assert_eq!(v["diameter"], 2);
        assert_eq!(v["highly_balanced"], true);
        assert_eq!(v["profile"].as_array().unwrap().len(), 2);
        assert_eq!(v["edges"].as_array().unwrap().len(), 5);

        let v = ok(&analyze("path:4"));
        assert_eq!(v["profile"][0]["balanced"], false);
        assert_eq!(v["profile"][2]["balanced"], true);
    }

    #[test]
    fn analyze_handles_disconnected_and_bad_inputs() {
        let v = ok(&analyze("empty:3"));
        assert_eq!(v["connected"], false);
        assert!(v["diameter"].is_null());
        assert_eq!(v["profile"].as_array().unwrap().len(), 0);

        let e: Value = serde_json::from_str(&analyze("no-such")).unwrap();
        assert!(e["error"].as_str().unwrap().contains("no-such"));
    }

    #[test]
    fn product_payloads_carry_coordinates() {
        let v = ok(&product("cartesian", "K2", "C4"));
        assert_eq!(v["n"], 8);
        assert_eq!(v["m"], 12);
        assert_eq!(v["diameter"], 3);
        assert_eq!(v["formula_ok"], true);
        assert_eq!(v["vertices"][5]["g"], 1);
        assert_eq!(v["vertices"][5]["h"], 1);

        let v = ok(&product("corona", "K2", "K1"));
        assert_eq!(v["n"], 4);
        assert!(v["vertices"][0]["h"].is_null(), "roots have no h coordinate");
        assert_eq!(v["vertices"][2]["h"], 0);

        let e: Value = serde_json::from_str(&product("tensor", "K2", "K2")).unwrap();
        assert!(e["error"].as_str().unwrap().contains("tensor"));
    }

    #[test]
    fn w_partition_colors_every_vertex() {
        let v = ok(&w_partition_of("P4", 0, 3));
        assert_eq!(v["distance"], 3);
        assert_eq!(v["sides"], serde_json::json!(["u", "u", "v", "v"]));
        assert_eq!(v["closer_u"], 2);
        assert_eq!(v["closer_v"], 2);
        assert_eq!(v["equidistant"], 0);
        assert_eq!(v["balanced"], true);

        let e: Value = serde_json::from_str(&w_partition_of("P4", 0, 0)).unwrap();
        assert!(e["error"].as_str().unwrap().contains("distinct"));
        let e: Value = serde_json::from_str(&w_partition_of("P4", 0, 9)).unwrap();
        assert!(e["error"].as_str().unwrap().contains("0..4"));
    }
}
