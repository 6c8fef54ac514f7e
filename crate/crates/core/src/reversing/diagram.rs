use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{ReversingTrace, StepKind};
use crate::words::{Alphabet, Letter, Word};

#[derive(Clone, Copy, Debug)]
struct Vertex {
    x: f64,
    y: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Axis {
    Horizontal,
    Vertical,
}

/// A diagram edge. Horizontal edges point right, vertical edges point down;
/// `None` labels are ε-edges.
#[derive(Clone, Copy, Debug)]
struct Edge {
    from: usize,
    to: usize,
    label: Option<Letter>,
    axis: Axis,
}

/// The current boundary path: edge ids with the direction in which the path
/// traverses them (vertical edges are always traversed upwards).
struct Grid {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    path: Vec<usize>,
}

impl Grid {
    fn vertex(&mut self, x: f64, y: f64) -> usize {
        self.vertices.push(Vertex { x, y });
        self.vertices.len() - 1
    }

    fn edge(&mut self, from: usize, to: usize, label: Option<Letter>, axis: Axis) -> usize {
        self.edges.push(Edge {
            from,
            to,
            label,
            axis,
        });
        self.edges.len() - 1
    }

    /// Vertex where the path enters path edge `i`.
    fn entry(&self, i: usize) -> usize {
        let e = self.edges[self.path[i]];
        match e.axis {
            Axis::Horizontal => e.from,
            Axis::Vertical => e.to,
        }
    }

    fn exit(&self, i: usize) -> usize {
        let e = self.edges[self.path[i]];
        match e.axis {
            Axis::Horizontal => e.to,
            Axis::Vertical => e.from,
        }
    }

    /// Chain of edges along one axis from `a` to `b`, spelling `w` (a single
    /// ε-edge when `w` is empty). Returns edge ids in geometric order.
    fn side(&mut self, a: usize, b: usize, w: &Word, axis: Axis) -> Vec<usize> {
        let (pa, pb) = (self.vertices[a], self.vertices[b]);
        if w.is_empty() {
            return vec![self.edge(a, b, None, axis)];
        }
        let n = w.len();
        let mut ids = Vec::with_capacity(n);
        let mut prev = a;
        for (i, &l) in w.iter().enumerate() {
            let next = if i + 1 == n {
                b
            } else {
                let f = (i + 1) as f64 / n as f64;
                self.vertex(pa.x + (pb.x - pa.x) * f, pa.y + (pb.y - pa.y) * f)
            };
            ids.push(self.edge(prev, next, Some(l), axis));
            prev = next;
        }
        ids
    }
}

/// Reversing diagram of `trace` in DOT. Positive letters are edges pointing
/// right, negative letters edges pointing down; each step closes the factor
/// `u⁻¹v` into a cell whose bottom spells `v'` and whose right side spells
/// `u'`, with ε-edges (dashed) for empty sides.
pub fn export_diagram(trace: &ReversingTrace, alphabet: &Alphabet) -> String {
    let mut g = Grid {
        vertices: Vec::new(),
        edges: Vec::new(),
        path: Vec::new(),
    };
    let (mut x, mut y) = (0.0, 0.0);
    let mut cur = g.vertex(x, y);
    for s in trace.start.letters() {
        if s.inverse {
            y -= 1.0;
            let top = g.vertex(x, y);
            let e = g.edge(top, cur, Some(s.letter), Axis::Vertical);
            g.path.push(e);
            cur = top;
        } else {
            x += 1.0;
            let right = g.vertex(x, y);
            let e = g.edge(cur, right, Some(s.letter), Axis::Horizontal);
            g.path.push(e);
            cur = right;
        }
    }

    for (step, _) in &trace.steps {
        // path positions of the letter edges, skipping ε-edges
        let letter_pos: Vec<usize> = (0..g.path.len())
            .filter(|&i| g.edges[g.path[i]].label.is_some())
            .collect();
        let (k, l) = step.factor_shape();
        let first = letter_pos[step.position];
        let last = letter_pos[step.position + k + l - 1];
        let p = g.entry(first);
        let q = g.exit(last);
        let (vp, up) = match &step.kind {
            StepKind::Delete { .. } => (Word::empty(), Word::empty()),
            StepKind::Replace {
                v_prime, u_prime, ..
            } => (v_prime.clone(), u_prime.clone()),
        };
        let n = g.vertex(g.vertices[q].x, g.vertices[p].y);
        let bottom = g.side(p, n, &vp, Axis::Horizontal);
        let mut right = g.side(q, n, &up, Axis::Vertical);
        // the path climbs the right side from n to q
        right.reverse();
        let mut replacement = bottom;
        replacement.extend(right);
        g.path.splice(first..=last, replacement);
    }

    render(&g, alphabet)
}

fn render(g: &Grid, alphabet: &Alphabet) -> String {
    let min_y = g.vertices.iter().map(|v| v.y).fold(0.0, f64::min);
    let mut s =
        String::from("digraph reversing {\n  node [shape=point];\n  edge [arrowsize=0.6];\n");
    for (i, v) in g.vertices.iter().enumerate() {
        // DOT's y axis points up; the diagram grows downwards
        let _ = writeln!(
            s,
            "  v{i} [pos=\"{:.3},{:.3}!\"];",
            v.x + 0.0,
            0.0 - (v.y - min_y)
        );
    }
    for e in &g.edges {
        match e.label {
            Some(l) => {
                let _ = writeln!(
                    s,
                    "  v{} -> v{} [label=\"{}\"];",
                    e.from,
                    e.to,
                    alphabet.name(l)
                );
            }
            None => {
                let _ = writeln!(s, "  v{} -> v{} [label=\"ε\", style=dashed];", e.from, e.to);
            }
        }
    }
    // rank hints: vertices on a common horizontal line
    let mut rows: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, v) in g.vertices.iter().enumerate() {
        rows.entry((v.y * 1000.0).round() as i64)
            .or_default()
            .push(i);
    }
    for ids in rows.values().filter(|ids| ids.len() > 1) {
        let names: Vec<String> = ids.iter().map(|i| format!("v{i}")).collect();
        let _ = writeln!(s, "  {{ rank=same; {}; }}", names.join("; "));
    }
    s.push_str("}\n");
    s
}

/// Number of closed cells and ε-edges in a diagram, for tests.
#[cfg(test)]
pub(crate) fn summary(dot: &str) -> (usize, usize) {
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    let eps = dot.lines().filter(|l| l.contains("style=dashed")).count();
    (edges, eps)
}
