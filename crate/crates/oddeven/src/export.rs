//! DOT and CSV renderings.

use std::fmt::Write;

use oddeven_core::goldbach::{DegreeProfile, GoldbachGraph};
use oddeven_core::oddeven::AdjacencyExport;
use oddeven_core::{BinaryMatrix, OrientedOddEvenGraph, Sdbg};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// X on the left as boxes, Y on the right as circles.
pub fn sdbg_dot(graph: &Sdbg) -> String {
    let mut out = String::from("digraph sdbg {\n  rankdir=LR;\n");
    for (side, names, shape) in [("X", graph.x_names(), "box"), ("Y", graph.y_names(), "circle")] {
        writeln!(out, "  subgraph cluster_{side} {{\n    label={side};").unwrap();
        for name in names {
            writeln!(out, "    {} [shape={shape}];", quote(name)).unwrap();
        }
        out.push_str("  }\n");
    }
    for (u, v) in graph.arcs() {
        writeln!(out, "  {} -> {};", quote(graph.name(u)), quote(graph.name(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Arcs point from the smaller to the larger vertex.
pub fn odd_even_dot(graph: &OrientedOddEvenGraph) -> String {
    let mut out = String::from("digraph odd_even {\n");
    for &v in graph.vertices() {
        let shape = if v % 4 == 0 { "box" } else { "circle" };
        writeln!(out, "  {v} [shape={shape}];").unwrap();
    }
    for &(a, b) in graph.arcs() {
        writeln!(out, "  {a} -> {b} [label=\"{},{}\"];", (a + b) / 2, (b - a) / 2).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn goldbach_dot(graph: &GoldbachGraph) -> String {
    let mut out = format!("digraph goldbach_{} {{\n", graph.n());
    for v in graph.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for (a, b) in graph.edges() {
        writeln!(out, "  {a} -> {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// 0/1 matrix with a header row of column labels and a label column.
pub fn matrix_csv<R: ToString, C: ToString>(rows: &[R], cols: &[C], matrix: &BinaryMatrix) -> String {
    let mut out = String::new();
    for c in cols {
        out.push(',');
        out.push_str(&c.to_string());
    }
    out.push('\n');
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&r.to_string());
        for &bit in matrix.row(i) {
            out.push_str(if bit { ",1" } else { ",0" });
        }
        out.push('\n');
    }
    out
}

pub fn adjacency_csv(export: &AdjacencyExport) -> String {
    matrix_csv(&export.order, &export.order, &export.matrix)
}

pub fn goldbach_csv(graph: &GoldbachGraph) -> String {
    let order: Vec<u64> = graph.vertices().collect();
    let mut matrix = BinaryMatrix::zeros(order.len(), order.len());
    for (a, b) in graph.edges() {
        let slot = |v: u64| ((v - graph.first_vertex()) / 2) as usize;
        matrix.set(slot(a), slot(b), true);
    }
    matrix_csv(&order, &order, &matrix)
}

pub fn degree_csv(profile: &DegreeProfile) -> String {
    let mut out = String::from("vertex,in_degree,out_degree,degree\n");
    for d in &profile.degrees {
        writeln!(out, "{},{},{},{}", d.vertex, d.in_degree, d.out_degree, d.total()).unwrap();
    }
    out
}
