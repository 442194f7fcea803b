//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export takes and returns plain strings (graph text in, JSON out) so
//! the same functions can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use wgg_core::approx::feasible_cover;
use wgg_core::decomp::{degeneracy_ordering, forest_cover_positive, forest_to_star_unions, greedy_coloring};
use wgg_core::generate::{GenKind, GenSpec, WeightSpec};
use wgg_core::io::{parse_graph, write_graph, ReportFile};
use wgg_core::{Algorithm, Weight, WeightedGraph};

fn graph_json(g: &WeightedGraph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

fn read(text: &str) -> Result<WeightedGraph, String> {
    parse_graph(text).map_err(|e| e.to_string())
}

/// `kind` is `tree`, `grid`, `regular` or `gnp`. `a` is the vertex count
/// (rows for grids), `b` the second parameter (columns, degree bound, or edge
/// probability in percent). Returns the instance in the text format.
pub fn generate_text(kind: &str, a: usize, b: usize, seed: u64) -> Result<String, String> {
    let kind = match kind {
        "tree" => GenKind::Tree { n: a },
        "grid" => GenKind::Grid { rows: a, cols: b },
        "regular" => GenKind::Regular { n: a, delta: b },
        "gnp" => GenKind::Gnp { n: a, p: b as f64 / 100.0 },
        other => return Err(format!("unknown generator {other:?}")),
    };
    let spec = GenSpec { kind, weights: WeightSpec::default(), seed };
    spec.generate().map(|g| write_graph(&g)).map_err(|e| e.to_string())
}

/// Solves the instance and returns the report plus the graph for drawing.
pub fn solve_json(text: &str, alg: &str, epsilon: &str, seed: u64) -> Result<String, String> {
    let g = read(text)?;
    let alg: Algorithm = alg.parse().map_err(|e: wgg_core::Error| e.to_string())?;
    let eps: Weight = epsilon.parse().map_err(|e: wgg_core::Error| e.to_string())?;
    let report = wgg_core::solve(&g, alg, Some(&eps), seed).map_err(|e| e.to_string())?;
    let rf = ReportFile::new(&g, &report);
    Ok(json!({
        "graph": graph_json(&g),
        "report": rf,
        "meets_guarantee": report.meets_guarantee(),
    })
    .to_string())
}

/// The structural pipeline behind the cover approximation: vertex coloring,
/// forest cover of the positive edges, star unions and feasible sets.
pub fn decompose_json(text: &str) -> Result<String, String> {
    let g = read(text)?;
    let ordering = degeneracy_ordering(&g);
    let coloring = greedy_coloring(&g, &ordering);
    let cover = forest_cover_positive(&g);
    let mut stars = Vec::new();
    for forest in &cover.classes {
        let (blue, red) = forest_to_star_unions(forest).map_err(|e| e.to_string())?;
        stars.push(json!([blue.edges(), red.edges()]));
    }
    let sets: Vec<Value> = feasible_cover(&g)
        .iter()
        .map(|s| {
            json!({
                "edges": s.edges,
                "coalitions": s.partition.coalitions(),
                "weight": s.weight(&g),
            })
        })
        .collect();
    Ok(json!({
        "graph": graph_json(&g),
        "degeneracy": ordering.d,
        "colors": coloring.color,
        "num_colors": coloring.num_colors,
        "forests": cover.classes,
        "star_unions": stars,
        "feasible_sets": sets,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn generate(kind: &str, a: usize, b: usize, seed: u32) -> Result<String, JsValue> {
    generate_text(kind, a, b, seed.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn solve(text: &str, alg: &str, epsilon: &str, seed: u32) -> Result<String, JsValue> {
    solve_json(text, alg, epsilon, seed.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn decompose(text: &str) -> Result<String, JsValue> {
    decompose_json(text).map_err(|e| JsValue::from_str(&e))
}
