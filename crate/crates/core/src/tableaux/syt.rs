use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cupdiag::{Cup, CupDiagram, Ray};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SytError {
    #[error("rows must have lengths a >= b")]
    BadShape,
    #[error("entries must be exactly 1..={0}")]
    BadEntries(usize),
    #[error("entries must strictly decrease along rows and down columns")]
    NotDecreasing,
    #[error("diagram carries dots; only undecorated diagrams come from standard tableaux")]
    Decorated,
    #[error("cannot parse tableau: {0}")]
    Syntax(String),
}

/// A two-row standard Young tableau in the decreasing convention: the entry
/// `n` sits in the corner and entries strictly decrease along rows and down
/// columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StandardYoungTableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl StandardYoungTableau {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self, SytError> {
        if bottom.len() > top.len() {
            return Err(SytError::BadShape);
        }
        let n = top.len() + bottom.len();
        let mut all: Vec<usize> = top.iter().chain(&bottom).copied().collect();
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(SytError::BadEntries(n));
        }
        let rows_ok = |r: &[usize]| r.windows(2).all(|w| w[0] > w[1]);
        let cols_ok = bottom.iter().zip(&top).all(|(b, t)| t > b);
        if !rows_ok(&top) || !rows_ok(&bottom) || !cols_ok {
            return Err(SytError::NotDecreasing);
        }
        Ok(Self { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.top.len(), self.bottom.len())
    }

    pub fn size(&self) -> usize {
        self.top.len() + self.bottom.len()
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "{} / {}", row(&self.top), row(&self.bottom))
    }
}

impl std::str::FromStr for StandardYoungTableau {
    type Err = SytError;

    /// Parses `top / bottom` with entries separated by spaces, e.g.
    /// `5 4 3 / 2 1`. The bottom row may be empty or omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split('/');
        let row = |r: Option<&str>| -> Result<Vec<usize>, SytError> {
            r.unwrap_or("")
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| SytError::Syntax(format!("bad entry {x:?}"))))
                .collect()
        };
        let top = row(parts.next())?;
        let bottom = row(parts.next())?;
        if parts.next().is_some() {
            return Err(SytError::Syntax("more than two rows".into()));
        }
        Self::new(top, bottom)
    }
}

/// All standard tableaux of shape `(a, b)`, sorted lexicographically by the
/// top row.
pub fn enumerate_syt(a: usize, b: usize) -> Vec<StandardYoungTableau> {
    fn go(
        v: usize,
        a: usize,
        b: usize,
        top: &mut Vec<usize>,
        bot: &mut Vec<usize>,
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if v == 0 {
            out.push(StandardYoungTableau { top: top.clone(), bottom: bot.clone() });
            return;
        }
        if top.len() < a {
            top.push(v);
            go(v - 1, a, b, top, bot, out);
            top.pop();
        }
        if bot.len() < b && bot.len() < top.len() {
            bot.push(v);
            go(v - 1, a, b, top, bot, out);
            bot.pop();
        }
    }
    if b > a {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(a + b, a, b, &mut Vec::new(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The undecorated cup diagram whose cup left endpoints are the bottom-row
/// entries. Scanning left to right, each bottom-row vertex opens a cup and
/// each top-row vertex closes the nearest open one, or becomes a ray.
pub fn psi(t: &StandardYoungTableau) -> CupDiagram {
    let n = t.size();
    let mut is_left = vec![false; n + 1];
    for &v in &t.bottom {
        is_left[v] = true;
    }
    let mut stack = Vec::new();
    let mut cups = Vec::new();
    let mut rays = Vec::new();
    for (v, &left) in is_left.iter().enumerate().skip(1) {
        if left {
            stack.push(v);
        } else if let Some(l) = stack.pop() {
            cups.push(Cup { left: l, right: v, dotted: false });
        } else {
            rays.push(Ray { at: v, dotted: false });
        }
    }
    CupDiagram::new(n, cups, rays).expect("stack matching is planar and leaves no ray under a cup")
}

pub fn psi_inverse(d: &CupDiagram) -> Result<StandardYoungTableau, SytError> {
    if !d.is_undecorated() {
        return Err(SytError::Decorated);
    }
    let mut bottom: Vec<usize> = d.cups().iter().map(|c| c.left).collect();
    let mut top: Vec<usize> = (1..=d.m()).filter(|v| !bottom.contains(v)).collect();
    bottom.sort_unstable_by(|x, y| y.cmp(x));
    top.sort_unstable_by(|x, y| y.cmp(x));
    StandardYoungTableau::new(top, bottom)
}
