use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("vertex {0} is out of range 1..={1}")]
    OutOfRange(usize, usize),
    #[error("vertex {0} is used more than once")]
    Reused(usize),
    #[error("vertex {0} is not attached to any cup or ray")]
    Unattached(usize),
    #[error("cup ({0},{1}) must have left < right")]
    Backwards(usize, usize),
    #[error("cups ({0},{1}) and ({2},{3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("ray at {0} lies under cup ({1},{2})")]
    RayUnderCup(usize, usize, usize),
    #[error("cup ({0},{1}) cannot carry a dot")]
    IllegalCupDot(usize, usize),
    #[error("ray at {0} cannot carry a dot; only the rightmost ray may")]
    IllegalRayDot(usize),
    #[error("cannot parse diagram token {0:?}")]
    Syntax(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cup {
    #[serde(rename = "from")]
    pub left: usize,
    #[serde(rename = "to")]
    pub right: usize,
    #[serde(rename = "dot")]
    pub dotted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ray {
    pub at: usize,
    #[serde(rename = "dot")]
    pub dotted: bool,
}

/// What a vertex is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Cup { partner: usize, dotted: bool },
    Ray { dotted: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A cup diagram on vertices `1..=m`. Cups are sorted by left endpoint and
/// rays by position; construction validates planarity and the dot rule.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CupDiagram {
    m: usize,
    cups: Vec<Cup>,
    rays: Vec<Ray>,
}

impl CupDiagram {
    pub fn new(m: usize, mut cups: Vec<Cup>, mut rays: Vec<Ray>) -> Result<Self, DiagramError> {
        cups.sort();
        rays.sort();
        let d = Self { m, cups, rays };
        d.validate()?;
        Ok(d)
    }

    /// A diagram whose only job is to be inspected for errors; used by
    /// negative controls that need an invalid dot placement.
    pub fn new_unchecked(m: usize, mut cups: Vec<Cup>, mut rays: Vec<Ray>) -> Self {
        cups.sort();
        rays.sort();
        Self { m, cups, rays }
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let m = self.m;
        let mut seen = vec![false; m + 1];
        let mut mark = |v: usize| -> Result<(), DiagramError> {
            if v == 0 || v > m {
                return Err(DiagramError::OutOfRange(v, m));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(DiagramError::Reused(v));
            }
            Ok(())
        };
        for c in &self.cups {
            if c.left >= c.right {
                return Err(DiagramError::Backwards(c.left, c.right));
            }
            mark(c.left)?;
            mark(c.right)?;
        }
        for r in &self.rays {
            mark(r.at)?;
        }
        if let Some(v) = (1..=m).find(|&v| !seen[v]) {
            return Err(DiagramError::Unattached(v));
        }
        for (i, a) in self.cups.iter().enumerate() {
            for b in &self.cups[i + 1..] {
                // Sorted by left endpoint, so a.left < b.left.
                if b.left < a.right && a.right < b.right {
                    return Err(DiagramError::Crossing(a.left, a.right, b.left, b.right));
                }
            }
            if let Some(r) = self.rays.iter().find(|r| a.left < r.at && r.at < a.right) {
                return Err(DiagramError::RayUnderCup(r.at, a.left, a.right));
            }
        }
        for c in self.cups.iter().filter(|c| c.dotted) {
            if !self.cup_dot_eligible(c) {
                return Err(DiagramError::IllegalCupDot(c.left, c.right));
            }
        }
        let rightmost = self.rays.last().map(|r| r.at);
        for r in self.rays.iter().filter(|r| r.dotted) {
            if Some(r.at) != rightmost {
                return Err(DiagramError::IllegalRayDot(r.at));
            }
        }
        Ok(())
    }

    /// A cup may carry a dot iff it is not nested and no ray lies to its right.
    fn cup_dot_eligible(&self, c: &Cup) -> bool {
        let nested = self.cups.iter().any(|o| o.left < c.left && c.right < o.right);
        let ray_right = self.rays.iter().any(|r| r.at > c.right);
        !nested && !ray_right
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cups(&self) -> &[Cup] {
        &self.cups
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn rightmost_ray(&self) -> Option<Ray> {
        self.rays.last().copied()
    }

    pub fn dots(&self) -> usize {
        self.cups.iter().filter(|c| c.dotted).count() + self.rays.iter().filter(|r| r.dotted).count()
    }

    pub fn parity(&self) -> Parity {
        if self.dots().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_undecorated(&self) -> bool {
        self.dots() == 0
    }

    /// The attachment of each vertex; index 0 is unused.
    pub fn ends(&self) -> Vec<Option<End>> {
        let mut ends = vec![None; self.m + 1];
        for c in &self.cups {
            ends[c.left] = Some(End::Cup { partner: c.right, dotted: c.dotted });
            ends[c.right] = Some(End::Cup { partner: c.left, dotted: c.dotted });
        }
        for r in &self.rays {
            ends[r.at] = Some(End::Ray { dotted: r.dotted });
        }
        ends
    }

    /// Copy with every dot removed.
    pub fn undecorated(&self) -> Self {
        Self {
            m: self.m,
            cups: self.cups.iter().map(|c| Cup { dotted: false, ..*c }).collect(),
            rays: self.rays.iter().map(|r| Ray { dotted: false, ..*r }).collect(),
        }
    }

    /// The diagram shifted right by `offset` vertices, for concatenation.
    pub fn shifted(&self, offset: usize) -> (Vec<Cup>, Vec<Ray>) {
        let cups = self
            .cups
            .iter()
            .map(|c| Cup { left: c.left + offset, right: c.right + offset, dotted: c.dotted })
            .collect();
        let rays = self.rays.iter().map(|r| Ray { at: r.at + offset, dotted: r.dotted }).collect();
        (cups, rays)
    }

    /// Shape `(n-k, k)` of the type D Springer fiber this diagram belongs to,
    /// read off from the cup and ray counts.
    pub fn d_shape(&self) -> (usize, usize) {
        let c = self.cups.len();
        let k = if self.rays.is_empty() { self.m } else { 2 * c + 1 };
        (2 * self.m - k, k)
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = |d: bool| if d { "*" } else { "" };
        let mut first = true;
        for (v, end) in self.ends().iter().enumerate().skip(1) {
            let tok = match end {
                Some(End::Cup { partner, dotted }) if *partner > v => {
                    format!("({v},{partner}){}", star(*dotted))
                }
                Some(End::Ray { dotted }) => format!("|{v}{}", star(*dotted)),
                _ => continue,
            };
            if !first {
                f.write_str(" ")?;
            }
            f.write_str(&tok)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl FromStr for CupDiagram {
    type Err = DiagramError;

    /// Parses the text grammar `(i,j)`, `(i,j)*`, `|i`, `|i*`; whitespace
    /// between tokens is optional. `m` is the largest vertex mentioned.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cups = Vec::new();
        let mut rays = Vec::new();
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let num = |i: &mut usize| -> Option<usize> {
            let start = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().collect::<String>().parse().ok()
        };
        let err = |i: usize| DiagramError::Syntax(chars[i.min(chars.len())..].iter().collect());
        while i < chars.len() {
            let start = i;
            match chars[i] {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '(' => {
                    i += 1;
                    let l = num(&mut i).ok_or_else(|| err(start))?;
                    if chars.get(i) != Some(&',') {
                        return Err(err(start));
                    }
                    i += 1;
                    let r = num(&mut i).ok_or_else(|| err(start))?;
                    if chars.get(i) != Some(&')') {
                        return Err(err(start));
                    }
                    i += 1;
                    let dotted = chars.get(i) == Some(&'*');
                    i += usize::from(dotted);
                    cups.push(Cup { left: l, right: r, dotted });
                }
                '|' => {
                    i += 1;
                    let at = num(&mut i).ok_or_else(|| err(start))?;
                    let dotted = chars.get(i) == Some(&'*');
                    i += usize::from(dotted);
                    rays.push(Ray { at, dotted });
                }
                _ => return Err(err(start)),
            }
        }
        let m = cups.iter().map(|c: &Cup| c.right.max(c.left)).chain(rays.iter().map(|r| r.at)).max().unwrap_or(0);
        Self::new(m, cups, rays)
    }
}

#[derive(Deserialize)]
struct RawDiagram {
    m: usize,
    #[serde(default)]
    cups: Vec<Cup>,
    #[serde(default)]
    rays: Vec<Ray>,
}

impl<'de> Deserialize<'de> for CupDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawDiagram::deserialize(d)?;
        Self::new(raw.m, raw.cups, raw.rays).map_err(serde::de::Error::custom)
    }
}

/// All undecorated cup diagrams on `m` vertices with `c` cups, i.e. planar
/// partial matchings with no ray under a cup.
pub fn enumerate_undecorated(m: usize, c: usize) -> Vec<CupDiagram> {
    fn go(
        v: usize,
        m: usize,
        c: usize,
        stack: &mut Vec<usize>,
        cups: &mut Vec<Cup>,
        rays: &mut Vec<Ray>,
        out: &mut Vec<CupDiagram>,
    ) {
        let remaining = m + 1 - v;
        if v > m {
            if stack.is_empty() && cups.len() == c {
                out.push(CupDiagram::new_unchecked(m, cups.clone(), rays.clone()));
            }
            return;
        }
        // Cups still to open plus cups still to close must fit.
        let to_open = c - cups.len() - stack.len();
        if 2 * to_open + stack.len() > remaining {
            return;
        }
        if stack.is_empty() {
            rays.push(Ray { at: v, dotted: false });
            go(v + 1, m, c, stack, cups, rays, out);
            rays.pop();
        }
        if to_open > 0 {
            stack.push(v);
            go(v + 1, m, c, stack, cups, rays, out);
            stack.pop();
        }
        if let Some(l) = stack.pop() {
            cups.push(Cup { left: l, right: v, dotted: false });
            go(v + 1, m, c, stack, cups, rays, out);
            cups.pop();
            stack.push(l);
        }
    }
    if 2 * c > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(1, m, c, &mut Vec::new(), &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Every decorated cup diagram on `m` vertices with `c` cups.
///
/// Ordered by parity (even first), then by the cup list, then by the sorted
/// list of dotted vertices (a dotted cup counts via its left endpoint).
pub fn enumerate_cup_diagrams(m: usize, c: usize) -> Vec<CupDiagram> {
    let mut out = Vec::new();
    for base in enumerate_undecorated(m, c) {
        let mut slots: Vec<Slot> = base
            .cups
            .iter()
            .enumerate()
            .filter(|(_, cup)| base.cup_dot_eligible(cup))
            .map(|(i, _)| Slot::Cup(i))
            .collect();
        if !base.rays.is_empty() {
            slots.push(Slot::Ray(base.rays.len() - 1));
        }
        for mask in 0u64..(1 << slots.len()) {
            let mut d = base.clone();
            for (bit, slot) in slots.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    match *slot {
                        Slot::Cup(i) => d.cups[i].dotted = true,
                        Slot::Ray(i) => d.rays[i].dotted = true,
                    }
                }
            }
            out.push(d);
        }
    }
    out.sort_by_cached_key(order_key);
    out
}

#[derive(Clone, Copy)]
enum Slot {
    Cup(usize),
    Ray(usize),
}

fn order_key(d: &CupDiagram) -> (Parity, Vec<(usize, usize)>, Vec<usize>) {
    let cups = d.cups.iter().map(|c| (c.left, c.right)).collect();
    let mut dotted: Vec<usize> = d
        .cups
        .iter()
        .filter(|c| c.dotted)
        .map(|c| c.left)
        .chain(d.rays.iter().filter(|r| r.dotted).map(|r| r.at))
        .collect();
    dotted.sort();
    (d.parity(), cups, dotted)
}

/// The diagrams indexing components of the type D fiber of shape `(n-k, k)`:
/// `m = n/2` vertices and `floor(k/2)` cups.
pub fn diagrams_for_shape(a: usize, b: usize) -> Vec<CupDiagram> {
    let m = (a + b) / 2;
    enumerate_cup_diagrams(m, b / 2)
}
