//! Browser bindings for the foxes library. Three operations back the
//! static page in `www/`: preset generation, contractibility analysis
//! with a fox certificate, and a minimum-contractible DFS-tree hunt.
//!
//! Each `*_impl` function does the work over plain strings so the crate
//! tests on the host toolchain; the `#[wasm_bindgen]` wrappers only
//! translate errors for JavaScript.

use foxes::connectivity::{contractible_edges, smallest_separating_sets, vertex_connectivity};
use foxes::constructions::{cycle_lex_apex, prism, prism_plus, triangle_expand, wheel};
use foxes::format::{emit_graph6, parse_graph6};
use foxes::graph::{Edge, Graph};
use foxes::trees::{find_fox_certificate, min_contractible_over, TreeMode};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts; the analysis is exponential in the
/// worst case and the browser runs it on the main thread.
const DEMO_ORDER_LIMIT: usize = 24;

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    order: usize,
    size: usize,
    kappa: usize,
    k: usize,
    edges: Vec<[usize; 2]>,
    contractible: Vec<[usize; 2]>,
    separating_sets: Vec<Vec<usize>>,
    is_fox: bool,
    certificate: Option<Vec<[usize; 2]>>,
}

#[derive(Serialize)]
struct DfsHunt {
    graph6: String,
    k: usize,
    dfs_trees: u64,
    minimum: usize,
    tree: Vec<[usize; 2]>,
    root: Option<usize>,
}

fn pairs(edges: &[Edge]) -> Vec<[usize; 2]> {
    edges.iter().map(|e| [e.u(), e.v()]).collect()
}

fn load(graph6: &str) -> foxes::Result<Graph> {
    let g = parse_graph6(graph6.trim())?;
    if g.order() > DEMO_ORDER_LIMIT {
        return Err(foxes::Error::Precondition(
            "the demo handles at most 24 vertices".into(),
        ));
    }
    Ok(g)
}

fn generate_impl(name: &str, param: usize) -> foxes::Result<String> {
    let g = match name {
        "prism" => prism(),
        "prism-plus" => prism_plus(),
        "wheel" => wheel(param.clamp(3, DEMO_ORDER_LIMIT - 1))?,
        "expanded-k4" => triangle_expand(&Graph::complete(4)?)?,
        "expanded-prism" => triangle_expand(&prism())?,
        "lex-apex" => cycle_lex_apex(5, 5)?,
        "complete" => Graph::complete(param.clamp(3, 12))?,
        other => {
            return Err(foxes::Error::Precondition(format!(
                "unknown preset: {other}"
            )))
        }
    };
    Ok(emit_graph6(&g))
}

fn analyze_impl(graph6: &str, k: usize) -> foxes::Result<String> {
    let g = load(graph6)?;
    let kappa = vertex_connectivity(&g);
    let k = if k == 0 { kappa } else { k };
    let (contractible, seps, fox_cert) = if k > 0 && kappa >= k {
        (
            contractible_edges(&g, k)?,
            if kappa == k {
                smallest_separating_sets(&g)
            } else {
                Vec::new()
            },
            find_fox_certificate(&g, k)?,
        )
    } else {
        (Vec::new(), Vec::new(), None)
    };
    let out = Analysis {
        graph6: emit_graph6(&g),
        order: g.order(),
        size: g.edge_count(),
        kappa,
        k,
        edges: pairs(&g.edges()),
        contractible: pairs(&contractible),
        separating_sets: seps.iter().map(|s| s.to_vec()).collect(),
        is_fox: fox_cert.is_some(),
        certificate: fox_cert.map(|c| pairs(c.tree.edges())),
    };
    Ok(serde_json::to_string(&out).expect("serializable payload"))
}

fn min_dfs_impl(graph6: &str, k: usize, cap: u64) -> foxes::Result<String> {
    let g = load(graph6)?;
    let kappa = vertex_connectivity(&g);
    let k = if k == 0 { kappa } else { k };
    if k == 0 || kappa < k {
        return Err(foxes::Error::Precondition(
            "the graph is not k-connected".into(),
        ));
    }
    let cap = cap.clamp(1, 5_000_000);
    let (minimum, witness) = min_contractible_over(&g, k, TreeMode::Dfs, cap)?;
    let count = foxes::trees::visit_dfs_trees(&g, cap, |_| {})?;
    let out = DfsHunt {
        graph6: emit_graph6(&g),
        k,
        dfs_trees: count,
        minimum,
        tree: pairs(witness.edges()),
        root: witness.root(),
    };
    Ok(serde_json::to_string(&out).expect("serializable payload"))
}

fn js<T>(r: foxes::Result<T>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

/// Emit a named preset as graph6. Presets: prism, prism-plus,
/// wheel (param = rim length), expanded-k4, expanded-prism,
/// lex-apex, complete (param = order).
#[wasm_bindgen]
pub fn generate(name: &str, param: usize) -> Result<String, JsError> {
    js(generate_impl(name, param))
}

/// Full contractibility analysis as a JSON string. Pass k = 0 to use
/// the graph's own connectivity.
#[wasm_bindgen]
pub fn analyze(graph6: &str, k: usize) -> Result<String, JsError> {
    js(analyze_impl(graph6, k))
}

/// Minimize k-contractible tree edges over all DFS trees, up to `cap`
/// (tree, root) pairs. JSON string with the witness tree.
#[wasm_bindgen]
pub fn min_dfs(graph6: &str, k: usize, cap: u64) -> Result<String, JsError> {
    js(min_dfs_impl(graph6, k, cap))
}
