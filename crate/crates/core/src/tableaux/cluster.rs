use serde::Serialize;

use super::domino::{Domino, DominoTableau, Sign, TableauError};
use super::partition::Flavor;
use super::syt::{psi, psi_inverse, StandardYoungTableau};
use crate::cupdiag::{Cup, CupDiagram, DiagramError, Parity, Ray};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClusterKind {
    Open,
    Closed,
}

/// A building block of a type D two-row tableau: a vertical domino in an odd
/// column followed by horizontal dominoes and, for a closed cluster, a
/// vertical domino in an even column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cluster {
    pub kind: ClusterKind,
    pub left_vertical: usize,
    pub right_vertical: Option<usize>,
    /// Horizontal labels in the top row, left to right.
    pub top: Vec<usize>,
    /// Horizontal labels in the bottom row, left to right.
    pub bottom: Vec<usize>,
    pub left_sign: Option<Sign>,
}

impl Cluster {
    pub fn horizontal_labels(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.top.iter().chain(&self.bottom).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn len(&self) -> usize {
        1 + usize::from(self.right_vertical.is_some()) + self.top.len() + self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn smallest_label(&self) -> usize {
        self.right_vertical
            .into_iter()
            .chain(self.top.iter().copied())
            .chain(self.bottom.iter().copied())
            .chain([self.left_vertical])
            .min()
            .expect("cluster has a vertical")
    }

    /// The horizontal part as a standard tableau on `1..=h`.
    fn standard_part(&self) -> Result<StandardYoungTableau, TableauError> {
        let shift = self.smallest_label() - 1 + usize::from(self.right_vertical.is_some());
        let rel = |v: &Vec<usize>| v.iter().map(|x| x - shift).collect::<Vec<_>>();
        StandardYoungTableau::new(rel(&self.top), rel(&self.bottom))
            .map_err(|e| TableauError::NotClustered(format!("standard part: {e}")))
    }
}

/// Decomposes a type D tableau into clusters numbered right to left, so the
/// first cluster holds the smallest labels.
pub fn clusters(t: &DominoTableau) -> Result<Vec<Cluster>, TableauError> {
    if t.flavor() != Flavor::D {
        return Err(TableauError::WrongFlavor(Flavor::D));
    }
    let mut by_col: Vec<&Domino> = t.dominoes().iter().collect();
    by_col.sort_by_key(|d| (d.column(), d.row()));
    let mut out: Vec<Cluster> = Vec::new();
    let mut open = false;
    let err = |s: &str| TableauError::NotClustered(s.to_string());
    for d in by_col {
        let col = d.column();
        if d.is_vertical() {
            if col % 2 == 1 {
                if open {
                    return Err(err("an open cluster is followed by another cluster"));
                }
                out.push(Cluster {
                    kind: ClusterKind::Open,
                    left_vertical: d.label,
                    right_vertical: None,
                    top: Vec::new(),
                    bottom: Vec::new(),
                    left_sign: d.sign,
                });
                open = true;
            } else {
                let c = out.last_mut().filter(|_| open).ok_or_else(|| err("even-column vertical closes nothing"))?;
                c.kind = ClusterKind::Closed;
                c.right_vertical = Some(d.label);
                open = false;
            }
        } else {
            if col % 2 == 1 {
                return Err(err("horizontal domino starts in an odd column"));
            }
            let c = out.last_mut().filter(|_| open).ok_or_else(|| err("horizontal domino outside a cluster"))?;
            if d.row() == 1 {
                c.top.push(d.label);
            } else {
                c.bottom.push(d.label);
            }
        }
    }
    out.reverse();
    Ok(out)
}

/// Ψ: signed type D tableau to cup diagram. Each cluster becomes a block of
/// consecutive vertices: a closed cluster is its standard part under ψ
/// wrapped in one more cup, an open cluster is its standard part followed by
/// a ray. A minus sign on the left vertical dots the outer cup or the ray.
pub fn big_psi(t: &DominoTableau) -> Result<CupDiagram, TableauError> {
    if !t.is_signed() {
        return Err(TableauError::Unsigned);
    }
    let mut cups = Vec::new();
    let mut rays = Vec::new();
    let mut offset = 0;
    for c in clusters(t)? {
        if c.smallest_label() != offset + 1 {
            return Err(TableauError::NotClustered("cluster labels are not consecutive".into()));
        }
        let inner = psi(&c.standard_part()?);
        let minus = c.left_sign == Some(Sign::Minus);
        match c.kind {
            ClusterKind::Closed => {
                let (cs, rs) = inner.shifted(offset + 1);
                cups.extend(cs);
                rays.extend(rs);
                cups.push(Cup { left: offset + 1, right: offset + inner.m() + 2, dotted: minus });
            }
            ClusterKind::Open => {
                let (cs, rs) = inner.shifted(offset);
                cups.extend(cs);
                rays.extend(rs);
                rays.push(Ray { at: offset + inner.m() + 1, dotted: minus });
            }
        }
        offset += c.len();
    }
    CupDiagram::new(t.m(), cups, rays).map_err(|e| TableauError::NotClustered(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InverseError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("diagram is not in the image of the cluster construction: {0}")]
    Shape(String),
}

/// Ψ⁻¹. Everything up to the rightmost ray is the open cluster; each
/// outermost cup to its right is a closed cluster.
pub fn big_psi_inverse(a: &CupDiagram) -> Result<DominoTableau, InverseError> {
    let m = a.m();
    let mut cups_of = vec![None; m + 2];
    for c in a.cups() {
        cups_of[c.left] = Some(*c);
    }
    let sub = |lo: usize, hi: usize| -> Result<StandardYoungTableau, InverseError> {
        // Undecorated restriction of `a` to vertices lo..=hi, renumbered from 1.
        let cups: Vec<Cup> = a
            .cups()
            .iter()
            .filter(|c| c.left >= lo && c.right <= hi)
            .map(|c| Cup { left: c.left + 1 - lo, right: c.right + 1 - lo, dotted: c.dotted })
            .collect();
        let rays: Vec<Ray> = a
            .rays()
            .iter()
            .filter(|r| r.at >= lo && r.at <= hi)
            .map(|r| Ray { at: r.at + 1 - lo, dotted: r.dotted })
            .collect();
        let d = CupDiagram::new(hi + 1 - lo, cups, rays)?;
        psi_inverse(&d).map_err(|e| InverseError::Shape(e.to_string()))
    };
    let sign = |dotted: bool| Some(if dotted { Sign::Minus } else { Sign::Plus });

    // Blocks in vertex order, i.e. clusters C1, C2, …
    let mut blocks: Vec<(ClusterKind, StandardYoungTableau, usize, Option<Sign>)> = Vec::new();
    let mut v = 1;
    if let Some(r) = a.rightmost_ray() {
        blocks.push((ClusterKind::Open, sub(1, r.at - 1)?, 0, sign(r.dotted)));
        v = r.at + 1;
    }
    while v <= m {
        let c = cups_of[v].ok_or_else(|| InverseError::Shape(format!("vertex {v} is not an outer cup")))?;
        blocks.push((ClusterKind::Closed, sub(c.left + 1, c.right - 1)?, c.left, sign(c.dotted)));
        v = c.right + 1;
    }

    let mut dominoes = Vec::new();
    let mut col = 1;
    for (kind, std, offset, s) in blocks.iter().rev() {
        // The left vertical carries the largest label of the block.
        let shift = *offset;
        dominoes.push(Domino::vertical(offset + std.size() + 1, col).with_sign(*s));
        for (j, x) in std.top().iter().enumerate() {
            dominoes.push(Domino::horizontal(x + shift, 1, col + 1 + 2 * j));
        }
        for (j, x) in std.bottom().iter().enumerate() {
            dominoes.push(Domino::horizontal(x + shift, 2, col + 1 + 2 * j));
        }
        let (w_top, w_bot) = std.shape();
        match kind {
            ClusterKind::Closed => {
                if w_top != w_bot {
                    return Err(InverseError::Shape("a closed cluster has a ray inside".into()));
                }
                dominoes.push(Domino::vertical(*offset, col + 1 + 2 * w_top));
                col += 2 + 2 * w_top;
            }
            ClusterKind::Open => col += 1 + 2 * w_top,
        }
    }
    let shape = a.d_shape();
    DominoTableau::new(shape, Flavor::D, dominoes).map_err(|e| InverseError::Shape(e.to_string()))
}

/// Deletes the vertical domino in column 1 (the one labelled `m`) and shifts
/// the rest one column left, giving a type C tableau of shape `(a-1, b-1)`.
pub fn d_to_c(t: &DominoTableau) -> Result<DominoTableau, TableauError> {
    if t.flavor() != Flavor::D {
        return Err(TableauError::WrongFlavor(Flavor::D));
    }
    let (a, b) = t.shape();
    let first = t.domino(t.m()).ok_or(TableauError::NoLeadingVertical)?;
    if !(first.is_vertical() && first.column() == 1) {
        return Err(TableauError::NoLeadingVertical);
    }
    let rest: Vec<Domino> =
        t.dominoes()[..t.m() - 1].iter().map(|d| Domino { cells: d.cells.map(|(r, c)| (r, c - 1)), ..*d }).collect();
    DominoTableau::new((a - 1, b - 1), Flavor::C, rest)
}

/// Inverse of [`d_to_c`] restricted to one parity: prepends a vertical
/// domino whose sign makes the minus count have the requested parity.
pub fn c_to_d(t: &DominoTableau, parity: Parity) -> Result<DominoTableau, TableauError> {
    if t.flavor() != Flavor::C {
        return Err(TableauError::WrongFlavor(Flavor::C));
    }
    if !t.is_signed() {
        return Err(TableauError::Unsigned);
    }
    let (a, b) = t.shape();
    let want_odd = parity == Parity::Odd;
    let sign = if (t.minus_count() % 2 == 1) == want_odd { Sign::Plus } else { Sign::Minus };
    let mut ds: Vec<Domino> =
        t.dominoes().iter().map(|d| Domino { cells: d.cells.map(|(r, c)| (r, c + 1)), ..*d }).collect();
    ds.push(Domino::vertical(t.m() + 1, 1).with_sign(Some(sign)));
    DominoTableau::new((a + 1, b + 1), Flavor::D, ds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cupdiag::enumerate_cup_diagrams;
    use crate::tableaux::{enumerate_adt, enumerate_signed};

    fn v(l: usize, c: usize, s: Option<Sign>) -> Domino {
        Domino::vertical(l, c).with_sign(s)
    }
    fn h(l: usize, r: usize, c: usize) -> Domino {
        Domino::horizontal(l, r, c)
    }
    const P: Option<Sign> = Some(Sign::Plus);
    const M: Option<Sign> = Some(Sign::Minus);

    /// The 19-domino tableau with four clusters from the worked example.
    fn big_example() -> DominoTableau {
        let ds = vec![
            // C4: vertical 19 (-), horizontals 18 17 / 16 15, vertical 14.
            v(19, 1, M),
            h(18, 1, 2),
            h(17, 1, 4),
            h(16, 2, 2),
            h(15, 2, 4),
            v(14, 6, None),
            // C3: vertical 13 (-), vertical 12.
            v(13, 7, M),
            v(12, 8, None),
            // C2: vertical 11 (+), horizontals 10 8 / 9 7, vertical 6.
            v(11, 9, P),
            h(10, 1, 10),
            h(8, 1, 12),
            h(9, 2, 10),
            h(7, 2, 12),
            v(6, 14, None),
            // C1: vertical 5 (-), horizontals 4 3 1 / 2.
            v(5, 15, M),
            h(4, 1, 16),
            h(3, 1, 18),
            h(1, 1, 20),
            h(2, 2, 16),
        ];
        DominoTableau::new((21, 17), Flavor::D, ds).unwrap()
    }

    #[test]
    fn big_example_clusters_and_psi() {
        let t = big_example();
        let cs = clusters(&t).unwrap();
        let sets: Vec<Vec<usize>> = cs
            .iter()
            .map(|c| {
                let mut s = c.horizontal_labels();
                s.push(c.left_vertical);
                s.extend(c.right_vertical);
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        assert_eq!(
            sets,
            vec![vec![5, 4, 3, 2, 1], vec![11, 10, 9, 8, 7, 6], vec![13, 12], vec![19, 18, 17, 16, 15, 14]]
        );
        assert_eq!(cs[0].kind, ClusterKind::Open);
        assert!(cs[1..].iter().all(|c| c.kind == ClusterKind::Closed));
        let d = big_psi(&t).unwrap();
        assert_eq!(d.to_string(), "|1 (2,3) |4 |5* (6,11) (7,8) (9,10) (12,13)* (14,19)* (15,18) (16,17)");
        assert_eq!(big_psi_inverse(&d).unwrap(), t);
    }

    #[test]
    fn small_examples() {
        let t1 =
            DominoTableau::new((5, 3), Flavor::D, vec![v(4, 1, P), v(3, 2, None), v(2, 3, P), h(1, 1, 4)]).unwrap();
        let cs = clusters(&t1).unwrap();
        assert_eq!((cs[0].kind, cs[0].left_vertical, cs[0].top.clone()), (ClusterKind::Open, 2, vec![1]));
        assert_eq!((cs[1].kind, cs[1].left_vertical, cs[1].right_vertical), (ClusterKind::Closed, 4, Some(3)));
        assert_eq!(big_psi(&t1).unwrap().to_string(), "|1 |2 (3,4)");

        let one = DominoTableau::new((1, 1), Flavor::D, vec![v(1, 1, M)]).unwrap();
        assert_eq!(big_psi(&one).unwrap().to_string(), "|1*");
        assert_eq!(big_psi_inverse(&"|1*".parse().unwrap()).unwrap(), one);
        assert_eq!(big_psi(&one.forget_signs()), Err(TableauError::Unsigned));
    }

    #[test]
    fn psi_on_53_tableaux() {
        let signed = enumerate_signed(5, 3, Flavor::D).unwrap();
        let images: Vec<String> = signed.iter().map(|t| big_psi(t).unwrap().to_string()).collect();
        assert_eq!(
            images,
            [
                "|1 |2 (3,4)",
                "|1 |2* (3,4)",
                "|1 |2 (3,4)*",
                "|1 |2* (3,4)*",
                "|1 (2,3) |4",
                "|1 (2,3) |4*",
                "(1,2) |3 |4",
                "(1,2) |3 |4*",
            ]
        );
        for (t, d) in signed.iter().zip(&images) {
            assert_eq!(t.minus_count(), d.parse::<CupDiagram>().unwrap().dots());
        }
    }

    #[test]
    fn psi_is_a_bijection_for_small_shapes() {
        for (a, b) in [(1, 1), (2, 2), (3, 1), (3, 3), (5, 3), (4, 4), (7, 1), (7, 5), (9, 3)] {
            let diagrams = enumerate_cup_diagrams((a + b) / 2, b / 2);
            let signed = enumerate_signed(a, b, Flavor::D).unwrap();
            assert_eq!(diagrams.len(), signed.len(), "({a},{b})");
            for d in &diagrams {
                assert_eq!(&big_psi(&big_psi_inverse(d).unwrap()).unwrap(), d);
            }
        }
    }

    #[test]
    fn d_to_c_examples() {
        let t1 = &enumerate_adt(5, 3, Flavor::D).unwrap()[0];
        assert_eq!(d_to_c(t1).unwrap().to_string(), "3 2 1 1 / 3 2");
        let one = DominoTableau::new((1, 1), Flavor::D, vec![v(1, 1, M)]).unwrap();
        let empty = d_to_c(&one).unwrap();
        assert_eq!((empty.shape(), empty.m()), ((0, 0), 0));
        assert_eq!(c_to_d(&empty, Parity::Odd).unwrap(), one);

        let odd: Vec<DominoTableau> =
            enumerate_signed(5, 3, Flavor::D).unwrap().into_iter().filter(|t| t.minus_count() % 2 == 1).collect();
        let mut imgs: Vec<DominoTableau> = odd.iter().map(|t| d_to_c(t).unwrap()).collect();
        imgs.sort_by_key(|t| (t.reading_word(), t.sign_word()));
        assert_eq!(imgs, enumerate_signed(4, 2, Flavor::C).unwrap());
        for t in &odd {
            assert_eq!(&c_to_d(&d_to_c(t).unwrap(), Parity::Odd).unwrap(), t);
        }
    }
}
