use std::fmt::Write;

use serde_json::{json, Value};

use crate::graphs::divisor::{DivisorGraph, Vertex};
use crate::graphs::shape::classify_shape;

fn node_id(v: Vertex) -> String {
    match v {
        Vertex::Prime(p) => format!("p{p}"),
        Vertex::Number(n) => format!("n{n}"),
    }
}

/// Graphviz rendering. Primes are light circles, numbers dark boxes.
pub fn to_dot(g: &DivisorGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", g.kind).unwrap();
    writeln!(out, "  node [style=filled];").unwrap();
    for v in g.vertices() {
        let style = match v {
            Vertex::Prime(_) => "shape=circle, fillcolor=lightblue",
            Vertex::Number(_) => "shape=box, fillcolor=blue, fontcolor=white",
        };
        writeln!(out, "  {} [label=\"{}\", {style}];", node_id(v), v.value()).unwrap();
    }
    for &(a, b) in &g.edges {
        writeln!(
            out,
            "  {} -- {};",
            node_id(g.vertex(a)),
            node_id(g.vertex(b))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// JSON description: vertices, edges as value pairs, statistics and shape.
pub fn to_json(g: &DivisorGraph) -> Value {
    let stats = g.stats();
    let shape = classify_shape(g);
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|&(a, b)| json!([g.vertex(a).value(), g.vertex(b).value()]))
        .collect();
    json!({
        "kind": g.kind.to_string(),
        "primes": g.prime_vertices,
        "numbers": g.number_vertices,
        "edges": edges,
        "stats": {
            "order": stats.order,
            "edge_count": stats.edge_count,
            "components": stats.components,
            "diameter": stats.diameter,
            "degrees": stats.degrees,
            "regular": stats.regular,
        },
        "shape": shape.tag.to_string(),
    })
}
