use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::ambient::Ambient;
use super::projline::ProjLine;
use crate::exact::{GaussianRational as Q, LinalgError, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlagError {
    #[error("space {0} has dimension {1}, expected {0}")]
    WrongDim(usize, usize),
    #[error("space {0} does not contain space {1}")]
    NotNested(usize, usize),
    #[error("spaces live in dimension {0}, ambient has {1}")]
    AmbientMismatch(usize, usize),
    #[error("F_{0} ∩ F_{1}^⊥ has dimension {2}, expected 1")]
    Degenerate(usize, usize, usize),
    #[error("C kills the complement at step {0}")]
    CollapsedLine(usize),
    #[error("lifting step {0}: z^-1 F ∩ F^⊥ has dimension {1}, expected 2")]
    LiftDim(usize, usize),
    #[error("lifting step {0}: C is not invertible on the lifting space")]
    LiftSingular(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A chain `F_1 ⊂ F_2 ⊂ … ⊂ F_ℓ` with `dim F_i = i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flag {
    spaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(spaces: Vec<Subspace>) -> Result<Self, FlagError> {
        for (idx, s) in spaces.iter().enumerate() {
            if s.dim() != idx + 1 {
                return Err(FlagError::WrongDim(idx + 1, s.dim()));
            }
            if idx > 0 {
                if s.ambient_dim() != spaces[0].ambient_dim() {
                    return Err(FlagError::AmbientMismatch(s.ambient_dim(), spaces[0].ambient_dim()));
                }
                if !spaces[idx - 1].is_subspace_of(s)? {
                    return Err(FlagError::NotNested(idx + 1, idx));
                }
            }
        }
        Ok(Self { spaces })
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// `F_i` with `F_0 = 0`.
    pub fn get(&self, i: usize, ambient_dim: usize) -> Subspace {
        if i == 0 {
            Subspace::zero(ambient_dim)
        } else {
            self.spaces[i - 1].clone()
        }
    }

    pub fn last(&self) -> Option<&Subspace> {
        self.spaces.last()
    }

    /// Whether `z F_i ⊆ F_{i-1}` for all `i`.
    pub fn is_compatible(&self, z: &Matrix) -> Result<bool, FlagError> {
        let Some(first) = self.spaces.first() else {
            return Ok(true);
        };
        let n = first.ambient_dim();
        for i in 1..=self.len() {
            if !self.spaces[i - 1].image(z)?.is_subspace_of(&self.get(i - 1, n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Drops the last space.
    pub fn pi(&self) -> Flag {
        let mut spaces = self.spaces.clone();
        spaces.pop();
        Flag { spaces }
    }
}

/// `(C(F_1), C(F_2 ∩ F_1^⊥), …, C(F_m ∩ F_{m-1}^⊥))`.
pub fn phi(flag: &Flag, ambient: &Ambient) -> Result<Vec<ProjLine>, FlagError> {
    let n = ambient.dim();
    let mut out = Vec::with_capacity(flag.len());
    for i in 1..=flag.len() {
        let line = flag.get(i, n).intersect(&flag.get(i - 1, n).perp_hermitian())?;
        if line.dim() != 1 {
            return Err(FlagError::Degenerate(i, i - 1, line.dim()));
        }
        let [a, b]: [Q; 2] = ambient.apply_c(&line.basis()[0])?.try_into().expect("C maps to C^2");
        out.push(ProjLine::new(a, b).map_err(|_| FlagError::CollapsedLine(i))?);
    }
    Ok(out)
}

/// Rebuilds the flag with the given `φ`-image. At each step the new vector
/// is the unique line of `z^{-1}F_{i-1} ∩ F_{i-1}^⊥` that `C` maps onto
/// `lines[i]`.
pub fn phi_inverse(lines: &[ProjLine], ambient: &Ambient) -> Result<Flag, FlagError> {
    let n = ambient.dim();
    let mut cur = Subspace::zero(n);
    let mut spaces = Vec::with_capacity(lines.len());
    for (idx, line) in lines.iter().enumerate() {
        let step = idx + 1;
        let w = cur.preimage(ambient.z())?.intersect(&cur.perp_hermitian())?;
        if w.dim() != 2 {
            return Err(FlagError::LiftDim(step, w.dim()));
        }
        let (w1, w2) = (&w.basis()[0], &w.basis()[1]);
        let cw = Matrix::from_columns(&[ambient.apply_c(w1)?, ambient.apply_c(w2)?], 2)?;
        let st = cw.solve(&line.coords())?.ok_or(FlagError::LiftSingular(step))?;
        if cw.rank() != 2 {
            return Err(FlagError::LiftSingular(step));
        }
        let v: Vec<Q> = w1.iter().zip(w2).map(|(x, y)| &(&st[0] * x) + &(&st[1] * y)).collect();
        debug_assert!(!v.iter().all(Zero::is_zero));
        cur = cur.with_vector(&v)?;
        spaces.push(cur.clone());
    }
    Flag::new(spaces)
}

/// Machine format for flags: each space as its echelon basis of scalar
/// strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlagJson {
    pub n_half: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<(usize, usize)>,
    pub spaces: Vec<Vec<Vec<Q>>>,
}

impl FlagJson {
    pub fn from_flag(flag: &Flag, ambient: &Ambient, shape: Option<(usize, usize)>) -> Self {
        Self { n_half: ambient.n_half(), shape, spaces: flag.spaces().iter().map(|s| s.basis().to_vec()).collect() }
    }

    pub fn to_flag(&self) -> Result<Flag, FlagError> {
        let n = 2 * self.n_half;
        let spaces = self.spaces.iter().map(|vs| Subspace::span(n, vs)).collect::<Result<Vec<_>, _>>()?;
        Flag::new(spaces)
    }
}
