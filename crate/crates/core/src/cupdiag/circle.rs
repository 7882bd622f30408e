use std::fmt::Write as _;

use serde::Serialize;

use super::diagram::{CupDiagram, End};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The reflected diagram on top.
    Top,
    /// The diagram at the bottom.
    Bottom,
}

impl Side {
    fn flip(self) -> Self {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Vertices in traversal order.
    pub vertices: Vec<usize>,
    pub closed: bool,
    pub dots: usize,
    /// Only meaningful for open components: the two ray ends lie on
    /// different sides.
    pub propagating: bool,
}

/// The glued diagram `ā b` with `a` reflected on top of `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleDiagram {
    pub components: Vec<Component>,
}

impl CircleDiagram {
    pub fn circ(&self) -> usize {
        self.components.iter().filter(|c| c.closed).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "circ", rename_all = "lowercase")]
pub enum IntersectionType {
    Empty,
    /// Homeomorphic to a product of `circ` two-spheres.
    NonEmpty(usize),
}

impl std::fmt::Display for IntersectionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntersectionType::Empty => f.write_str("Empty"),
            IntersectionType::NonEmpty(c) => write!(f, "NonEmpty({c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("diagrams have {0} and {1} vertices")]
pub struct VertexCountMismatch(pub usize, pub usize);

pub fn circle_diagram(a: &CupDiagram, b: &CupDiagram) -> Result<CircleDiagram, VertexCountMismatch> {
    if a.m() != b.m() {
        return Err(VertexCountMismatch(a.m(), b.m()));
    }
    let m = a.m();
    let ends_top = a.ends();
    let ends_bot = b.ends();
    let end = |side: Side, v: usize| match side {
        Side::Top => ends_top[v].expect("validated diagram"),
        Side::Bottom => ends_bot[v].expect("validated diagram"),
    };
    let mut visited = vec![false; m + 1];
    let mut components = Vec::new();

    // Follows cups starting at `v`, leaving through `side`. Returns the
    // vertices, dot count, and the side of the terminating ray if any.
    let walk = |v: usize, side: Side, visited: &mut Vec<bool>| {
        let mut verts = vec![v];
        visited[v] = true;
        let (mut cur, mut side, mut dots) = (v, side, 0);
        loop {
            match end(side, cur) {
                End::Ray { dotted } => {
                    dots += usize::from(dotted);
                    return (verts, dots, Some(side));
                }
                End::Cup { partner, dotted } => {
                    dots += usize::from(dotted);
                    if partner == v {
                        return (verts, dots, None);
                    }
                    cur = partner;
                    verts.push(cur);
                    visited[cur] = true;
                    side = side.flip();
                }
            }
        }
    };

    for v in 1..=m {
        if visited[v] {
            continue;
        }
        let start = [Side::Top, Side::Bottom].into_iter().find(|&s| matches!(end(s, v), End::Ray { .. }));
        if let Some(ray_side) = start {
            let first_dot = matches!(end(ray_side, v), End::Ray { dotted: true });
            let (verts, dots, last) = walk(v, ray_side.flip(), &mut visited);
            let last = last.expect("a path that starts at a ray ends at a ray");
            components.push(Component {
                vertices: verts,
                closed: false,
                dots: dots + usize::from(first_dot),
                propagating: last != ray_side,
            });
        }
    }
    for v in 1..=m {
        if visited[v] {
            continue;
        }
        let (verts, dots, last) = walk(v, Side::Top, &mut visited);
        debug_assert!(last.is_none());
        components.push(Component { vertices: verts, closed: true, dots, propagating: false });
    }
    Ok(CircleDiagram { components })
}

/// Predicts `S_a ∩ S_b` from the circle diagram: empty iff some component
/// carries an odd number of dots or some line segment is not propagating.
pub fn intersection_type(a: &CupDiagram, b: &CupDiagram) -> Result<IntersectionType, VertexCountMismatch> {
    let circle = circle_diagram(a, b)?;
    let bad = circle.components.iter().any(|c| c.dots % 2 == 1 || (!c.closed && !c.propagating));
    Ok(if bad { IntersectionType::Empty } else { IntersectionType::NonEmpty(circle.circ()) })
}

/// Canonical node names: `a`, `b`, …, `z`, `aa`, `ab`, …
pub fn node_name(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

/// Parses a name produced by [`node_name`].
pub fn node_index(name: &str) -> Option<usize> {
    if name.is_empty() || !name.bytes().all(|c| c.is_ascii_lowercase()) {
        return None;
    }
    let mut i = 0usize;
    for c in name.bytes() {
        i = i.checked_mul(26)?.checked_add((c - b'a') as usize + 1)?;
    }
    Some(i - 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub kind: IntersectionType,
}

/// Pairwise intersection types for a family of diagrams. Includes self
/// loops; `edges` lists each unordered pair once with `from <= to`.
#[derive(Debug, Clone, Serialize)]
pub struct IntersectionGraph {
    pub nodes: Vec<String>,
    pub diagrams: Vec<String>,
    pub edges: Vec<Edge>,
}

pub fn intersection_graph(diagrams: &[CupDiagram]) -> Result<IntersectionGraph, VertexCountMismatch> {
    let mut edges = Vec::new();
    for i in 0..diagrams.len() {
        for j in i..diagrams.len() {
            let kind = intersection_type(&diagrams[i], &diagrams[j])?;
            edges.push(Edge { from: i, to: j, kind });
        }
    }
    Ok(IntersectionGraph {
        nodes: (0..diagrams.len()).map(node_name).collect(),
        diagrams: diagrams.iter().map(|d| d.to_string()).collect(),
        edges,
    })
}

impl IntersectionGraph {
    /// Neighbours of `i` along non-empty, non-loop edges.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.from != e.to && e.kind != IntersectionType::Empty)
            .filter_map(|e| match (e.from == i, e.to == i) {
                (true, _) => Some(e.to),
                (_, true) => Some(e.from),
                _ => None,
            })
            .collect();
        out.sort();
        out
    }

    /// Connected components along non-empty intersections.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut idx = 0;
            while idx < comp.len() {
                for nb in self.neighbours(comp[idx]) {
                    if !std::mem::replace(&mut seen[nb], true) {
                        comp.push(nb);
                    }
                }
                idx += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Graphviz rendering; empty intersections are omitted.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph intersections {\n");
        for (name, d) in self.nodes.iter().zip(&self.diagrams) {
            let _ = writeln!(s, "  {name} [label=\"{name}: {d}\"];");
        }
        for e in &self.edges {
            if let IntersectionType::NonEmpty(c) = e.kind {
                let _ = writeln!(s, "  {} -- {} [label=\"{c}\"];", self.nodes[e.from], self.nodes[e.to]);
            }
        }
        s.push_str("}\n");
        s
    }
}
