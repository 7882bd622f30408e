use std::fmt;

use serde::{Deserialize, Serialize};

/// Which classical group the tableau or form belongs to. Type D corresponds
/// to `ε = +1` (orthogonal) and type C to `ε = -1` (symplectic).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    D,
    C,
}

impl Flavor {
    pub fn epsilon(self) -> i8 {
        match self {
            Flavor::D => 1,
            Flavor::C => -1,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::D => "D",
            Flavor::C => "C",
        })
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "D" | "d" => Ok(Flavor::D),
            "C" | "c" => Ok(Flavor::C),
            _ => Err(format!("unknown flavor {s:?}; expected D or C")),
        }
    }
}

/// A partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn two_row(a: usize, b: usize) -> Self {
        Self::new(vec![a, b])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(λ₁, λ₂)` padded with zeros, or `None` with more than two rows.
    pub fn rows(&self) -> Option<(usize, usize)> {
        match self.parts[..] {
            [] => Some((0, 0)),
            [a] => Some((a, 0)),
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    pub fn conjugate(&self) -> Self {
        let len = self.parts.first().copied().unwrap_or(0);
        Self::new((1..=len).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Type D: every even part has even multiplicity. Type C: every odd part
    /// has even multiplicity.
    pub fn is_admissible(&self, flavor: Flavor) -> bool {
        let bad_parity = match flavor {
            Flavor::D => 0,
            Flavor::C => 1,
        };
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if p % 2 == bad_parity && mult % 2 == 1 {
                return false;
            }
            i += mult;
        }
        true
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn is_admissible(a: usize, b: usize, flavor: Flavor) -> bool {
    Partition::two_row(a, b).is_admissible(flavor)
}

/// All type D admissible two-row shapes `(n-k, k)` with `k ≥ 1` and even
/// `n ≤ max_n`, ordered by `n` then `k`.
pub fn d_shapes_up_to(max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in (2..=max_n).step_by(2) {
        for k in 1..=n / 2 {
            if is_admissible(n - k, k, Flavor::D) {
                out.push((n - k, k));
            }
        }
    }
    out
}
