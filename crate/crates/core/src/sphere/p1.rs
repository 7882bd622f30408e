use std::fmt;

use serde::Serialize;

use crate::cupdiag::CupDiagram;

/// The lines of `C²` that rays are pinned to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FixedLine {
    #[serde(rename = "e")]
    E,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "e+f")]
    EPlusF,
    #[serde(rename = "e-f")]
    EMinusF,
    #[serde(rename = "ie+f")]
    IePlusF,
    #[serde(rename = "ie-f")]
    IeMinusF,
}

impl fmt::Display for FixedLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixedLine::E => "e",
            FixedLine::F => "f",
            FixedLine::EPlusF => "e+f",
            FixedLine::EMinusF => "e-f",
            FixedLine::IePlusF => "ie+f",
            FixedLine::IeMinusF => "ie-f",
        })
    }
}

/// A relation on lines `l_1, …, l_m` in `P¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ProjRelation {
    /// `l_j = l_i^⊥`.
    Perp {
        i: usize,
        j: usize,
    },
    /// `l_i = l_j`.
    Same {
        i: usize,
        j: usize,
    },
    Fixed {
        i: usize,
        line: FixedLine,
    },
}

impl ProjRelation {
    pub fn first_vertex(&self) -> usize {
        match *self {
            ProjRelation::Perp { i, .. } | ProjRelation::Same { i, .. } | ProjRelation::Fixed { i, .. } => i,
        }
    }
}

impl fmt::Display for ProjRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjRelation::Perp { i, j } => write!(f, "l{j} = l{i}^perp"),
            ProjRelation::Same { i, j } => write!(f, "l{i} = l{j}"),
            ProjRelation::Fixed { i, line } => write!(f, "l{i} = span({line})"),
        }
    }
}

/// The relations cutting out the image of `S_a` in `(P¹)^m`.
///
/// Undotted cups give orthogonal lines and dotted cups equal ones. In the
/// equal-row case the single ray gives `span(f)`, or `span(e)` when dotted.
/// Otherwise rays other than the rightmost give `span(e)`, and the rightmost
/// gives `e ± f` when `m - k` is even and `ie ± f` when it is odd, with `+`
/// exactly when the ray is dotted.
pub fn translate_to_p1(a: &CupDiagram) -> Vec<ProjRelation> {
    let (_, k) = a.d_shape();
    let m = a.m();
    let mut out = Vec::new();
    for c in a.cups() {
        out.push(if c.dotted {
            ProjRelation::Same { i: c.left, j: c.right }
        } else {
            ProjRelation::Perp { i: c.left, j: c.right }
        });
    }
    let rightmost = a.rightmost_ray().map(|r| r.at);
    for r in a.rays() {
        let line = if k == m {
            if r.dotted {
                FixedLine::E
            } else {
                FixedLine::F
            }
        } else if Some(r.at) != rightmost {
            FixedLine::E
        } else {
            match ((m - k).is_multiple_of(2), r.dotted) {
                (true, true) => FixedLine::EPlusF,
                (true, false) => FixedLine::EMinusF,
                (false, true) => FixedLine::IePlusF,
                (false, false) => FixedLine::IeMinusF,
            }
        };
        out.push(ProjRelation::Fixed { i: r.at, line });
    }
    out.sort_by_key(ProjRelation::first_vertex);
    out
}
