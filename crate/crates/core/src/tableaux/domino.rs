use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{is_admissible, Flavor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// Two adjacent cells `(row, column)`, 1-based, with the first cell the
/// upper or left one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Domino {
    pub label: usize,
    pub cells: [(usize, usize); 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

impl Domino {
    pub fn vertical(label: usize, col: usize) -> Self {
        Self { label, cells: [(1, col), (2, col)], sign: None }
    }

    pub fn horizontal(label: usize, row: usize, col: usize) -> Self {
        Self { label, cells: [(row, col), (row, col + 1)], sign: None }
    }

    pub fn with_sign(self, sign: Option<Sign>) -> Self {
        Self { sign, ..self }
    }

    pub fn orientation(&self) -> Orientation {
        if self.cells[0].1 == self.cells[1].1 {
            Orientation::Vertical
        } else {
            Orientation::Horizontal
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.orientation() == Orientation::Vertical
    }

    /// Leftmost column.
    pub fn column(&self) -> usize {
        self.cells[0].1.min(self.cells[1].1)
    }

    /// Row of the upper cell.
    pub fn row(&self) -> usize {
        self.cells[0].0.min(self.cells[1].0)
    }

    fn normalized(mut self) -> Self {
        self.cells.sort();
        self
    }

    fn adjacent(&self) -> bool {
        let [(r1, c1), (r2, c2)] = self.cells;
        r1.abs_diff(r2) + c1.abs_diff(c2) == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("shape ({0},{1}) is not admissible of type {2}")]
    Inadmissible(usize, usize, Flavor),
    #[error("shape ({0},{1}) is not a partition with an even number of boxes")]
    BadShape(usize, usize),
    #[error("labels must be exactly 1..={0}, each once")]
    BadLabels(usize),
    #[error("domino {0} does not consist of two adjacent cells inside the shape")]
    BadCells(usize),
    #[error("cell ({0},{1}) is covered twice or not at all")]
    Coverage(usize, usize),
    #[error("labels do not weakly decrease along rows and columns")]
    NotDecreasing,
    #[error("removing dominoes 1..={0} leaves an inadmissible shape")]
    Truncation(usize),
    #[error("domino {0} cannot carry a sign")]
    UnexpectedSign(usize),
    #[error("domino {0} needs a sign since other dominoes are signed")]
    MissingSign(usize),
    #[error("expected a type {0} tableau")]
    WrongFlavor(Flavor),
    #[error("tableau is not a sequence of clusters: {0}")]
    NotClustered(String),
    #[error("tableau has no vertical domino in column 1")]
    NoLeadingVertical,
    #[error("tableau is unsigned")]
    Unsigned,
    #[error("cannot parse tableau: {0}")]
    Syntax(String),
}

/// An admissible domino tableau of a two-row shape, optionally carrying a
/// sign on every signable vertical domino. Signable means odd column in
/// type D and even column in type C. Dominoes are stored by label.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DominoTableau {
    shape: (usize, usize),
    flavor: Flavor,
    dominoes: Vec<Domino>,
}

impl DominoTableau {
    /// Validates the tiling, the decreasing labels, admissible truncations and
    /// the sign rule independently of how the tableau was produced.
    pub fn new(shape: (usize, usize), flavor: Flavor, dominoes: Vec<Domino>) -> Result<Self, TableauError> {
        let mut dominoes: Vec<Domino> = dominoes.into_iter().map(Domino::normalized).collect();
        dominoes.sort_by_key(|d| d.label);
        let t = Self { shape, flavor, dominoes };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), TableauError> {
        let (a, b) = self.shape;
        if b > a || (a + b) % 2 == 1 {
            return Err(TableauError::BadShape(a, b));
        }
        if !is_admissible(a, b, self.flavor) {
            return Err(TableauError::Inadmissible(a, b, self.flavor));
        }
        let m = (a + b) / 2;
        let labels: Vec<usize> = self.dominoes.iter().map(|d| d.label).collect();
        if labels != (1..=m).collect::<Vec<_>>() {
            return Err(TableauError::BadLabels(m));
        }
        let grid = self.grid()?;
        // Labels weakly decrease along rows and down columns.
        for r in 1..=2 {
            let len = if r == 1 { a } else { b };
            for c in 1..len {
                if grid[&(r, c)] < grid[&(r, c + 1)] {
                    return Err(TableauError::NotDecreasing);
                }
            }
        }
        for c in 1..=b {
            if grid[&(1, c)] < grid[&(2, c)] {
                return Err(TableauError::NotDecreasing);
            }
        }
        // Removing the dominoes labelled 1..=i leaves an admissible Young diagram.
        for i in 1..=m {
            let top = (1..=a).filter(|&c| grid[&(1, c)] > i).count();
            let bot = (1..=b).filter(|&c| grid[&(2, c)] > i).count();
            let young = (1..=top).all(|c| grid[&(1, c)] > i) && (1..=bot).all(|c| grid[&(2, c)] > i) && bot <= top;
            if !young || !is_admissible(top, bot, self.flavor) {
                return Err(TableauError::Truncation(i));
            }
        }
        let signable: Vec<bool> = self.dominoes.iter().map(|d| self.signable(d)).collect();
        for (d, &s) in self.dominoes.iter().zip(&signable) {
            if d.sign.is_some() && !s {
                return Err(TableauError::UnexpectedSign(d.label));
            }
        }
        if self.dominoes.iter().any(|d| d.sign.is_some()) {
            if let Some((d, _)) = self.dominoes.iter().zip(&signable).find(|(d, &s)| s && d.sign.is_none()) {
                return Err(TableauError::MissingSign(d.label));
            }
        }
        Ok(())
    }

    /// Label of every cell, checking that the dominoes tile the shape.
    fn grid(&self) -> Result<BTreeMap<(usize, usize), usize>, TableauError> {
        let (a, b) = self.shape;
        let inside = |(r, c): (usize, usize)| (r == 1 && (1..=a).contains(&c)) || (r == 2 && (1..=b).contains(&c));
        let mut grid = BTreeMap::new();
        for d in &self.dominoes {
            if !d.adjacent() || !d.cells.iter().all(|&x| inside(x)) {
                return Err(TableauError::BadCells(d.label));
            }
            for &cell in &d.cells {
                if grid.insert(cell, d.label).is_some() {
                    return Err(TableauError::Coverage(cell.0, cell.1));
                }
            }
        }
        if grid.len() != a + b {
            let missing = (1..=a).map(|c| (1, c)).chain((1..=b).map(|c| (2, c))).find(|x| !grid.contains_key(x));
            let (r, c) = missing.expect("fewer cells than boxes");
            return Err(TableauError::Coverage(r, c));
        }
        Ok(grid)
    }

    pub fn signable(&self, d: &Domino) -> bool {
        let parity = match self.flavor {
            Flavor::D => 1,
            Flavor::C => 0,
        };
        d.is_vertical() && d.column() % 2 == parity
    }

    pub fn shape(&self) -> (usize, usize) {
        self.shape
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of dominoes.
    pub fn m(&self) -> usize {
        self.dominoes.len()
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn domino(&self, label: usize) -> Option<&Domino> {
        self.dominoes.get(label.checked_sub(1)?)
    }

    pub fn is_signed(&self) -> bool {
        self.dominoes.iter().any(|d| d.sign.is_some()) || !self.dominoes.iter().any(|d| self.signable(d))
    }

    pub fn minus_count(&self) -> usize {
        self.dominoes.iter().filter(|d| d.sign == Some(Sign::Minus)).count()
    }

    pub fn forget_signs(&self) -> Self {
        Self {
            shape: self.shape,
            flavor: self.flavor,
            dominoes: self.dominoes.iter().map(|d| d.with_sign(None)).collect(),
        }
    }

    /// Labels of row 1 then row 2, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        let grid = self.grid().expect("validated tableau");
        let (a, b) = self.shape;
        (1..=a).map(|c| grid[&(1, c)]).chain((1..=b).map(|c| grid[&(2, c)])).collect()
    }

    /// Signs of the signable dominoes, left to right.
    pub fn sign_word(&self) -> Vec<Option<Sign>> {
        let mut ds: Vec<&Domino> = self.dominoes.iter().filter(|d| self.signable(d)).collect();
        ds.sort_by_key(|d| d.column());
        ds.iter().map(|d| d.sign).collect()
    }

    /// All ways of signing this tableau's signable dominoes, `+` before `-`
    /// from the left.
    pub fn signings(&self) -> Vec<Self> {
        let mut idx: Vec<usize> = (0..self.dominoes.len()).filter(|&i| self.signable(&self.dominoes[i])).collect();
        idx.sort_by_key(|&i| self.dominoes[i].column());
        let s = idx.len();
        (0u64..1 << s)
            .map(|mask| {
                let mut t = self.clone();
                for (bit, &i) in idx.iter().enumerate() {
                    let minus = mask >> (s - 1 - bit) & 1 == 1;
                    t.dominoes[i].sign = Some(if minus { Sign::Minus } else { Sign::Plus });
                }
                t
            })
            .collect()
    }
}

impl fmt::Display for DominoTableau {
    /// Rows separated by ` / `; each cell shows its label, and the upper cell
    /// of a signed vertical domino also shows the sign.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: BTreeMap<(usize, usize), String> = BTreeMap::new();
        for d in &self.dominoes {
            for (i, &cell) in d.cells.iter().enumerate() {
                let sign = match (i, d.sign) {
                    (0, Some(s)) => s.to_string(),
                    _ => String::new(),
                };
                cells.insert(cell, format!("{}{sign}", d.label));
            }
        }
        let row = |r: usize, len: usize| (1..=len).map(|c| cells[&(r, c)].clone()).collect::<Vec<_>>().join(" ");
        write!(f, "{} / {}", row(1, self.shape.0), row(2, self.shape.1))
    }
}

impl DominoTableau {
    /// Parses the display format, e.g. `4+ 3 2+ 1 1 / 4 3 2`: rows separated
    /// by `/`, one label per cell, and a sign after either cell of a signed
    /// vertical domino.
    pub fn parse(s: &str, flavor: Flavor) -> Result<Self, TableauError> {
        let rows: Vec<&str> = s.split('/').collect();
        if rows.len() > 2 {
            return Err(TableauError::Syntax("more than two rows".into()));
        }
        type Cells = (Vec<(usize, usize)>, Option<Sign>);
        let mut by_label: BTreeMap<usize, Cells> = BTreeMap::new();
        let mut lens = [0, 0];
        for (r, row) in rows.iter().enumerate() {
            for (c, tok) in row.split_whitespace().enumerate() {
                let (num, sign) = match tok.strip_suffix('+').map(|x| (x, Sign::Plus)) {
                    Some((x, s)) => (x, Some(s)),
                    None => match tok.strip_suffix('-') {
                        Some(x) => (x, Some(Sign::Minus)),
                        None => (tok, None),
                    },
                };
                let label: usize = num.parse().map_err(|_| TableauError::Syntax(format!("bad cell {tok:?}")))?;
                let entry = by_label.entry(label).or_default();
                entry.0.push((r + 1, c + 1));
                if sign.is_some() {
                    if entry.1.is_some() {
                        return Err(TableauError::Syntax(format!("domino {label} signed twice")));
                    }
                    entry.1 = sign;
                }
                lens[r] += 1;
            }
        }
        let mut dominoes = Vec::with_capacity(by_label.len());
        for (label, (cells, sign)) in by_label {
            let [x, y]: [(usize, usize); 2] = cells
                .try_into()
                .map_err(|_| TableauError::Syntax(format!("label {label} must occupy exactly two cells")))?;
            dominoes.push(Domino { label, cells: [x, y], sign });
        }
        Self::new((lens[0], lens[1]), flavor, dominoes)
    }
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{self}]", self.flavor)
    }
}

#[derive(Deserialize)]
struct RawTableau {
    shape: (usize, usize),
    flavor: Flavor,
    dominoes: Vec<Domino>,
}

impl<'de> Deserialize<'de> for DominoTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawTableau::deserialize(d)?;
        Self::new(raw.shape, raw.flavor, raw.dominoes).map_err(serde::de::Error::custom)
    }
}

/// All admissible domino tableaux of shape `(a, b)`, unsigned, sorted by
/// reading word.
///
/// Dominoes are placed in the order `m, m-1, …, 1`, each at the outer
/// boundary, keeping every intermediate shape admissible.
pub fn enumerate_adt(a: usize, b: usize, flavor: Flavor) -> Result<Vec<DominoTableau>, TableauError> {
    if b > a || (a + b) % 2 == 1 {
        return Err(TableauError::BadShape(a, b));
    }
    if !is_admissible(a, b, flavor) {
        return Err(TableauError::Inadmissible(a, b, flavor));
    }
    fn go(
        label: usize,
        (p, q): (usize, usize),
        target: (usize, usize),
        flavor: Flavor,
        placed: &mut Vec<Domino>,
        out: &mut Vec<Vec<Domino>>,
    ) {
        if label == 0 {
            out.push(placed.clone());
            return;
        }
        let (a, b) = target;
        let mut moves = Vec::new();
        if p == q && q < b {
            moves.push((Domino::vertical(label, p + 1), (p + 1, q + 1)));
        }
        if p + 2 <= a {
            moves.push((Domino::horizontal(label, 1, p + 1), (p + 2, q)));
        }
        if q + 2 <= b && q + 2 <= p {
            moves.push((Domino::horizontal(label, 2, q + 1), (p, q + 2)));
        }
        for (d, next) in moves {
            if is_admissible(next.0, next.1, flavor) {
                placed.push(d);
                go(label - 1, next, target, flavor, placed, out);
                placed.pop();
            }
        }
    }
    let mut raw = Vec::new();
    go((a + b) / 2, (0, 0), (a, b), flavor, &mut Vec::new(), &mut raw);
    let mut out: Vec<DominoTableau> = raw
        .into_iter()
        .map(|ds| DominoTableau::new((a, b), flavor, ds).expect("generator only builds admissible tableaux"))
        .collect();
    out.sort_by_cached_key(DominoTableau::reading_word);
    Ok(out)
}

/// All signed domino tableaux of shape `(a, b)`.
pub fn enumerate_signed(a: usize, b: usize, flavor: Flavor) -> Result<Vec<DominoTableau>, TableauError> {
    Ok(enumerate_adt(a, b, flavor)?.iter().flat_map(DominoTableau::signings).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for flavor in [Flavor::D, Flavor::C] {
            for (a, b) in [(5, 3), (4, 4), (6, 2), (4, 2)] {
                let Ok(all) = enumerate_signed(a, b, flavor) else {
                    continue;
                };
                for t in all {
                    assert_eq!(DominoTableau::parse(&t.to_string(), flavor).unwrap(), t);
                }
            }
        }
        let t = DominoTableau::parse("4 3 3 1 1 / 4- 2 2", Flavor::D).unwrap();
        assert_eq!(t.to_string(), "4- 3 3 1 1 / 4 2 2");
        assert!(matches!(DominoTableau::parse("4 3 / 4", Flavor::D), Err(TableauError::Syntax(_))));
        assert!(matches!(DominoTableau::parse("1 1 / x", Flavor::D), Err(TableauError::Syntax(_))));
    }

    #[test]
    fn golden_counts() {
        assert_eq!(enumerate_adt(5, 3, Flavor::D).unwrap().len(), 3);
        assert_eq!(enumerate_adt(4, 2, Flavor::C).unwrap().len(), 3);
        assert_eq!(enumerate_adt(1, 1, Flavor::D).unwrap().len(), 1);
        assert_eq!(enumerate_signed(5, 3, Flavor::D).unwrap().len(), 8);
        assert_eq!(enumerate_signed(4, 2, Flavor::C).unwrap().len(), 4);
        let odd = enumerate_signed(5, 3, Flavor::D).unwrap().iter().filter(|t| t.minus_count() % 2 == 1).count();
        assert_eq!(odd, 4);
    }

    #[test]
    fn tableaux_53() {
        let words: Vec<String> = enumerate_adt(5, 3, Flavor::D).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(words, ["4 3 2 1 1 / 4 3 2", "4 3 3 1 1 / 4 2 2", "4 3 3 2 2 / 4 1 1"]);
        let c: Vec<String> = enumerate_adt(4, 2, Flavor::C).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(c, ["3 2 1 1 / 3 2", "3 3 1 1 / 2 2", "3 3 2 2 / 1 1"]);
    }

    #[test]
    fn sign_placement() {
        // Type D signs sit on odd columns, type C signs on even columns.
        let d = enumerate_signed(5, 3, Flavor::D).unwrap();
        assert_eq!(d[0].to_string(), "4+ 3 2+ 1 1 / 4 3 2");
        let c = enumerate_signed(4, 2, Flavor::C).unwrap();
        assert_eq!(c[0].to_string(), "3 2+ 1 1 / 3 2");
        assert_eq!(c[1].to_string(), "3 2- 1 1 / 3 2");
        assert_eq!(c[2].to_string(), "3 3 1 1 / 2 2");
    }

    #[test]
    fn inadmissible_shape_errors() {
        assert_eq!(enumerate_adt(6, 2, Flavor::D), Err(TableauError::Inadmissible(6, 2, Flavor::D)));
        assert_eq!(enumerate_adt(3, 2, Flavor::D), Err(TableauError::BadShape(3, 2)));
    }

    #[test]
    fn validator_catches_violations() {
        let v = |l, c| Domino::vertical(l, c);
        let h = |l, r, c| Domino::horizontal(l, r, c);
        // Row order violated.
        assert_eq!(DominoTableau::new((3, 1), Flavor::D, vec![v(1, 1), h(2, 1, 2)]), Err(TableauError::NotDecreasing));
        assert_eq!(DominoTableau::new((4, 0), Flavor::C, vec![h(2, 1, 1), h(1, 1, 3)]).map(|t| t.m()), Ok(2));
        assert_eq!(
            DominoTableau::new((3, 3), Flavor::D, vec![h(3, 1, 1), h(2, 2, 1), v(1, 3)]),
            Err(TableauError::Truncation(2))
        );
        assert_eq!(
            DominoTableau::new((1, 1), Flavor::D, vec![Domino { label: 1, cells: [(1, 1), (2, 2)], sign: None }]),
            Err(TableauError::BadCells(1))
        );
        assert_eq!(
            DominoTableau::new(
                (3, 1),
                Flavor::D,
                vec![v(2, 1).with_sign(Some(Sign::Plus)), h(1, 1, 2).with_sign(Some(Sign::Minus))]
            ),
            Err(TableauError::UnexpectedSign(1))
        );
        assert_eq!(
            DominoTableau::new((2, 2), Flavor::D, vec![v(2, 1), v(1, 2).with_sign(Some(Sign::Plus))]),
            Err(TableauError::UnexpectedSign(1))
        );
    }

    #[test]
    fn json_round_trip() {
        let t = &enumerate_signed(5, 3, Flavor::D).unwrap()[3];
        let s = serde_json::to_string(t).unwrap();
        let back: DominoTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, t);
        assert!(s.starts_with(r#"{"shape":[5,3],"flavor":"D","dominoes":[{"label":1,"cells":[[1,4],[1,5]]}"#));
    }
}
