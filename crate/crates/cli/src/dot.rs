use std::fmt::Write as _;

use semforge::graph::Graph;
use semforge::labeling::VertexLabeling;

/// Renders `g` as an undirected DOT graph. Nodes are named by their labels when
/// `f` is given, otherwise `v1 .. vp`. Loops become self-edges.
pub fn export_dot(g: &Graph, f: Option<&VertexLabeling>) -> String {
    let name = |v: usize| match f {
        Some(f) => f.label(v).to_string(),
        None => format!("v{v}"),
    };
    let mut out = String::from("graph G {\n");
    let mut nodes: Vec<(usize, String)> = g.vertices().map(|v| (f.map_or(v, |f| f.label(v)), name(v))).collect();
    nodes.sort();
    for (_, n) in &nodes {
        let _ = writeln!(out, "  \"{n}\";");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", name(u), name(v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use semforge::families;

    #[test]
    fn loop_with_label() {
        let dot = export_dot(&families::loop_graph(), Some(&VertexLabeling::identity(1)));
        assert_eq!(dot, "graph G {\n  \"1\";\n  \"1\" -- \"1\";\n}\n");
    }

    #[test]
    fn two_stars_instance() {
        let c = families::two_lk11_and_lk1n(1).unwrap();
        let dot = export_dot(c.graph(), Some(c.labeling()));
        for l in 1..=6 {
            assert!(dot.contains(&format!("  \"{l}\";\n")));
        }
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
        assert_eq!(edges.len(), 6);
        let loops = edges
            .iter()
            .filter(|l| {
                let names: Vec<&str> = l.split("--").map(str::trim).collect();
                names[0] == names[1].trim_end_matches(';')
            })
            .count();
        assert_eq!(loops, 3);
    }

    #[test]
    fn unlabeled_triangle() {
        let dot = export_dot(&families::cycle(3).unwrap(), None);
        for v in ["v1", "v2", "v3"] {
            assert!(dot.contains(&format!("\"{v}\";")));
        }
        assert!(!dot.contains("\"1\""));
    }
}
