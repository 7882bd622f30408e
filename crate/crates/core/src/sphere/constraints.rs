use std::fmt;
use std::ops::Neg;

use serde::Serialize;

use crate::cupdiag::{CupDiagram, VertexCountMismatch};

/// The two fixed points used for rays, kept symbolic: `p` is the north pole
/// and `q` a point on the equator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    P,
    Q,
    /// The `j`-th free point of a solution, 1-based.
    Free(usize),
}

/// A signed symbol `±base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub negated: bool,
    pub base: Base,
}

impl Neg for Point {
    type Output = Point;

    fn neg(self) -> Point {
        Point { negated: !self.negated, ..self }
    }
}

impl Point {
    pub const P: Point = Point { negated: false, base: Base::P };
    pub const NEG_P: Point = Point { negated: true, base: Base::P };
    pub const Q: Point = Point { negated: false, base: Base::Q };
    pub const NEG_Q: Point = Point { negated: true, base: Base::Q };

    fn signed(self, negate: bool) -> Self {
        if negate {
            -self
        } else {
            self
        }
    }

    /// Exchanges `p` and `q`, keeping the sign.
    pub fn swap_pq(self) -> Self {
        let base = match self.base {
            Base::P => Base::Q,
            Base::Q => Base::P,
            b => b,
        };
        Self { base, ..self }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        match self.base {
            Base::P => f.write_str("p"),
            Base::Q => f.write_str("q"),
            Base::Free(j) => write!(f, "s{j}"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which constants rays are sent to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Dotted ray `p`, undotted rightmost ray `-p`, other rays `q`.
    Standard,
    /// The same with `p` and `q` exchanged.
    Swapped,
}

/// A relation on points `x_1, …, x_m` of the two-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SphereConstraint {
    /// `x_i = x_j`.
    Equal { i: usize, j: usize },
    /// `x_i = -x_j`.
    Negate { i: usize, j: usize },
    /// `x_i = c`.
    Const { i: usize, c: Point },
}

impl fmt::Display for SphereConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereConstraint::Equal { i, j } => write!(f, "x{i} = x{j}"),
            SphereConstraint::Negate { i, j } => write!(f, "x{i} = -x{j}"),
            SphereConstraint::Const { i, c } => write!(f, "x{i} = {c}"),
        }
    }
}

/// The relations cutting out `S_a`: undotted cups antipodal, dotted cups
/// equal, and rays pinned to constants.
pub fn relations_of(a: &CupDiagram, convention: Convention) -> Vec<SphereConstraint> {
    let mut out = Vec::new();
    for c in a.cups() {
        out.push(if c.dotted {
            SphereConstraint::Equal { i: c.left, j: c.right }
        } else {
            SphereConstraint::Negate { i: c.left, j: c.right }
        });
    }
    let rightmost = a.rightmost_ray().map(|r| r.at);
    for r in a.rays() {
        let c = if r.dotted {
            Point::P
        } else if Some(r.at) == rightmost {
            Point::NEG_P
        } else {
            Point::Q
        };
        let c = match convention {
            Convention::Standard => c,
            Convention::Swapped => c.swap_pq(),
        };
        out.push(SphereConstraint::Const { i: r.at, c });
    }
    out.sort_by_key(|c| match *c {
        SphereConstraint::Equal { i, .. } | SphereConstraint::Negate { i, .. } | SphereConstraint::Const { i, .. } => i,
    });
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Solution {
    Inconsistent,
    /// `free` independent sphere coordinates remain; `witness` is one point
    /// per vertex with free classes named `s1, s2, …`.
    Consistent {
        free: usize,
        witness: Vec<Point>,
    },
}

/// Union-find where each node stores its sign relative to its parent.
struct SignedUnionFind {
    parent: Vec<usize>,
    flip: Vec<bool>,
    pinned: Vec<Option<Point>>,
    broken: bool,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), flip: vec![false; n], pinned: vec![None; n], broken: false }
    }

    /// Root of `x` and whether `x = -root`.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (r, f) = self.find(p);
        self.parent[x] = r;
        self.flip[x] ^= f;
        (r, self.flip[x])
    }

    /// Records `x_i = ±x_j`.
    fn relate(&mut self, i: usize, j: usize, negate: bool) {
        let (ri, fi) = self.find(i);
        let (rj, fj) = self.find(j);
        if ri == rj {
            // A cycle forcing x = -x has no solution on the sphere.
            if fi ^ fj != negate {
                self.broken = true;
            }
            return;
        }
        // x_ri = fi·x_i = fi·negate·x_j = fi·negate·fj·x_rj.
        let f = fi ^ negate ^ fj;
        self.parent[ri] = rj;
        self.flip[ri] = f;
        if let Some(c) = self.pinned[ri].take() {
            self.pin_root(rj, c.signed(f));
        }
    }

    fn pin(&mut self, i: usize, c: Point) {
        let (r, f) = self.find(i);
        self.pin_root(r, c.signed(f));
    }

    fn pin_root(&mut self, r: usize, c: Point) {
        match self.pinned[r] {
            Some(old) if old != c => self.broken = true,
            _ => self.pinned[r] = Some(c),
        }
    }
}

fn solve_constraints(m: usize, constraints: &[SphereConstraint]) -> Solution {
    let mut uf = SignedUnionFind::new(m + 1);
    for c in constraints {
        match *c {
            SphereConstraint::Equal { i, j } => uf.relate(i, j, false),
            SphereConstraint::Negate { i, j } => uf.relate(i, j, true),
            SphereConstraint::Const { i, c } => uf.pin(i, c),
        }
    }
    if uf.broken {
        return Solution::Inconsistent;
    }
    // Each free class is named after its first vertex, which gets `+s_j`.
    let mut names: Vec<Option<Point>> = vec![None; m + 1];
    let mut free = 0;
    let mut witness = Vec::with_capacity(m);
    for v in 1..=m {
        let (r, f) = uf.find(v);
        let root_value = match uf.pinned[r] {
            Some(c) => c,
            None => *names[r].get_or_insert_with(|| {
                free += 1;
                Point { negated: false, base: Base::Free(free) }.signed(f)
            }),
        };
        witness.push(root_value.signed(f));
    }
    Solution::Consistent { free, witness }
}

/// Brute-force solution of the relations of `S_a ∩ S_b`.
pub fn solve(a: &CupDiagram, b: &CupDiagram, convention: Convention) -> Result<Solution, VertexCountMismatch> {
    if a.m() != b.m() {
        return Err(VertexCountMismatch(a.m(), b.m()));
    }
    let mut cs = relations_of(a, convention);
    cs.extend(relations_of(b, convention));
    Ok(solve_constraints(a.m(), &cs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> CupDiagram {
        s.parse().unwrap()
    }

    fn show(cs: &[SphereConstraint]) -> Vec<String> {
        cs.iter().map(ToString::to_string).collect()
    }

    fn witness(s: &Solution) -> Vec<String> {
        match s {
            Solution::Consistent { witness, .. } => witness.iter().map(ToString::to_string).collect(),
            Solution::Inconsistent => panic!("inconsistent"),
        }
    }

    #[test]
    fn relation_examples() {
        assert_eq!(show(&relations_of(&d("(1,2) |3 |4"), Convention::Standard)), ["x1 = -x2", "x3 = q", "x4 = -p"]);
        assert_eq!(show(&relations_of(&d("|1*"), Convention::Standard)), ["x1 = p"]);
        assert_eq!(show(&relations_of(&d("|1 |2* (3,4)*"), Convention::Standard)), ["x1 = q", "x2 = p", "x3 = x4"]);
        assert_eq!(show(&relations_of(&d("(1,2) |3 |4"), Convention::Swapped)), ["x1 = -x2", "x3 = p", "x4 = -q"]);
    }

    #[test]
    fn solve_examples() {
        let a = d("(1,2)|3|4");
        let b = d("|1(2,3)|4");
        let c = d("|1|2(3,4)");
        let ab = solve(&a, &b, Convention::Standard).unwrap();
        assert_eq!(witness(&ab), ["q", "-q", "q", "-p"]);
        // The coordinate swap gives the point listed in the worked example.
        assert_eq!(witness(&solve(&a, &b, Convention::Swapped).unwrap()), ["p", "-p", "p", "-q"]);
        assert_eq!(solve(&a, &c, Convention::Standard).unwrap(), Solution::Inconsistent);
        match solve(&a, &a, Convention::Standard).unwrap() {
            Solution::Consistent { free, witness } => {
                assert_eq!(free, 1);
                assert_eq!(witness.iter().map(ToString::to_string).collect::<Vec<_>>(), ["s1", "-s1", "q", "-p"]);
            }
            Solution::Inconsistent => panic!(),
        }
    }

    #[test]
    fn antipodal_cycle_is_inconsistent() {
        // (1,2) undotted glued to (1,2) dotted forces x1 = -x1.
        let s = solve(&d("(1,2)"), &d("(1,2)*"), Convention::Standard).unwrap();
        assert_eq!(s, Solution::Inconsistent);
    }
}
