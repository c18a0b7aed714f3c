//! Graphviz rendering of bipartite graphs.

use std::fmt::Write;

use crate::bigraph::BipartiteGraph;

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// DOT text with part A as the source rank and part B as the sink rank.
/// Vertices appear in declaration order, edges in `(a, b)` index order.
pub fn export_dot(g: &BipartiteGraph) -> String {
    let mut out = String::from("graph G {\n");
    for (name, rank, part) in [("A", "source", g.part_a()), ("B", "sink", g.part_b())] {
        let _ = writeln!(out, "  subgraph part_{name} {{");
        let _ = writeln!(out, "    rank={rank};");
        for v in part {
            let _ = writeln!(out, "    {};", quote(v));
        }
        out.push_str("  }\n");
    }
    for (a, b) in g.edge_labels() {
        let _ = writeln!(out, "  {} -- {};", quote(a), quote(b));
    }
    out.push_str("}\n");
    out
}
