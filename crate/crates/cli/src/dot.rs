//! DOT rendering of a decomposition: each star's edges share a color from
//! a cycled palette, and central edges are drawn bold.

use dstar_core::graph::Graph;
use dstar_core::star::Decomposition;

const PALETTE: &[&str] = &[
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "teal", "goldenrod",
    "navy", "crimson", "olive",
];

pub fn render(g: &Graph, d: &Decomposition) -> String {
    let mut out = String::from("graph decomposition {\n  node [shape=circle];\n");
    for (i, s) in d.stars.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let (u, v) = g.endpoints(s.central).expect("central edge is live");
        out.push_str(&format!(
            "  {u} -- {v} [color=\"{color}\", style=bold, penwidth=2]; // star {i} central\n"
        ));
        for &(w, _) in &s.x {
            out.push_str(&format!("  {} -- {w} [color=\"{color}\"]; // star {i}\n", s.u1));
        }
        for &(w, _) in &s.y {
            out.push_str(&format!("  {} -- {w} [color=\"{color}\"]; // star {i}\n", s.u2));
        }
    }
    out.push_str("}\n");
    out
}
