//! Helpers shared by the property tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use springer_core::cupdiag::{diagrams_for_shape, CupDiagram};
use springer_core::tableaux::{d_shapes_up_to, DominoTableau, Flavor};

pub type ShapeDiagrams = ((usize, usize), Vec<CupDiagram>);

/// All D shapes with `n ≤ 16` together with their cup diagrams.
pub fn shapes_16() -> &'static [ShapeDiagrams] {
    static CELL: OnceLock<Vec<ShapeDiagrams>> = OnceLock::new();
    CELL.get_or_init(|| d_shapes_up_to(16).into_iter().map(|(a, b)| ((a, b), diagrams_for_shape(a, b))).collect())
}

fn admissible(parts: &[usize], flavor: Flavor) -> bool {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts.iter().filter(|&&p| p > 0) {
        *mult.entry(p).or_default() += 1;
    }
    let bad_parity = match flavor {
        Flavor::D => 0,
        Flavor::C => 1,
    };
    mult.iter().all(|(&p, &k)| p % 2 != bad_parity || k % 2 == 0)
}

/// Re-checks tiling, monotone labels, admissible truncations and the sign
/// placement from the raw cells, without going through the library's
/// validator.
pub fn check_adt(t: &DominoTableau) -> Result<(), String> {
    let (a, b) = t.shape();
    let m = (a + b) / 2;
    let mut grid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut labels = Vec::new();
    for d in t.dominoes() {
        let [(r1, c1), (r2, c2)] = d.cells;
        if r1.abs_diff(r2) + c1.abs_diff(c2) != 1 {
            return Err(format!("domino {} is not two adjacent cells", d.label));
        }
        for cell in d.cells {
            if grid.insert(cell, d.label).is_some() {
                return Err(format!("cell {cell:?} covered twice"));
            }
        }
        labels.push(d.label);
    }
    labels.sort_unstable();
    if labels != (1..=m).collect::<Vec<_>>() {
        return Err(format!("labels {labels:?}"));
    }
    let expected: Vec<(usize, usize)> = (1..=a).map(|c| (1, c)).chain((1..=b).map(|c| (2, c))).collect();
    if grid.keys().copied().collect::<Vec<_>>() != {
        let mut e = expected.clone();
        e.sort_unstable();
        e
    } {
        return Err("cells do not tile the shape".into());
    }
    for (&(r, c), &x) in &grid {
        if let Some(&y) = grid.get(&(r, c + 1)) {
            if y > x {
                return Err(format!("row {r} increases at column {c}"));
            }
        }
        if let Some(&y) = grid.get(&(r + 1, c)) {
            if y > x {
                return Err(format!("column {c} increases"));
            }
        }
    }
    for i in 0..=m {
        let top = (1..=a).take_while(|&c| grid[&(1, c)] > i).count();
        let bottom = (1..=b).take_while(|&c| grid[&(2, c)] > i).count();
        let remaining = grid.values().filter(|&&x| x > i).count();
        if top + bottom != remaining || bottom > top {
            return Err(format!("labels above {i} do not form a Young diagram"));
        }
        if !admissible(&[top, bottom], t.flavor()) {
            return Err(format!("deleting 1..{i} leaves inadmissible ({top},{bottom})"));
        }
    }
    let sign_parity = match t.flavor() {
        Flavor::D => 1,
        Flavor::C => 0,
    };
    for d in t.dominoes() {
        let wants = d.is_vertical() && d.column() % 2 == sign_parity;
        if t.is_signed() && wants != d.sign.is_some() {
            return Err(format!("sign placement on domino {}", d.label));
        }
        if !t.is_signed() && d.sign.is_some() {
            return Err(format!("unsigned tableau carries a sign on {}", d.label));
        }
    }
    Ok(())
}
