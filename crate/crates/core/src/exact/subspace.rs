use std::fmt;

use num_traits::{One, Zero};

use super::matrix::{dot, Matrix};
use super::{GaussianRational as Q, LinalgError};

/// A linear subspace of `Q(i)^n`, stored as the nonzero rows of a reduced
/// row-echelon basis. The representation is canonical, so `==` is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_matrix(&Matrix::identity(ambient_dim))
    }

    /// The span of `vectors`, which may be linearly dependent.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Q>]) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(vectors.to_vec(), ambient_dim)?;
        Ok(Self::from_matrix(&m))
    }

    /// Span of the standard basis vectors with the given (0-based) indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Q>> = indices.iter().map(|&i| unit(ambient_dim, i)).collect();
        Self::span(ambient_dim, &vs).expect("unit vectors have ambient length")
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self { ambient_dim: m.cols(), basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check(&self, other_dim: usize) -> Result<(), LinalgError> {
        if self.ambient_dim == other_dim {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: other_dim })
        }
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Q]) -> Result<Option<Vec<Q>>, LinalgError> {
        self.check(v.len())?;
        let coords: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= &(c * x);
                }
            }
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[Q]) -> Result<bool, LinalgError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, LinalgError> {
        other.check(self.ambient_dim)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other.ambient_dim)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &rows)
    }

    /// `self + span(v)`.
    pub fn with_vector(&self, v: &[Q]) -> Result<Self, LinalgError> {
        self.check(v.len())?;
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Self::span(self.ambient_dim, &rows)
    }

    /// Solves `Σ sᵢaᵢ = Σ tⱼbⱼ` and maps the `s`-part of the solution space
    /// back into the ambient space.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        let (p, q) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(self.ambient_dim, p + q);
        for (j, a) in self.basis.iter().enumerate() {
            for (i, x) in a.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        for (j, b) in other.basis.iter().enumerate() {
            for (i, x) in b.iter().enumerate() {
                m[(i, p + j)] = -x;
            }
        }
        let vs: Vec<Vec<Q>> = m.kernel().iter().map(|sol| self.combine(&sol[..p])).collect();
        Self::span(self.ambient_dim, &vs)
    }

    /// `Σ cᵢ bᵢ` over the echelon basis.
    pub fn combine(&self, coeffs: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.ambient_dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }

    /// Orthogonal complement for `⟨u,v⟩ = Σ uⱼ conj(vⱼ)`.
    pub fn perp_hermitian(&self) -> Self {
        let rows: Vec<Vec<Q>> = self.basis.iter().map(|b| b.iter().map(Q::conj).collect()).collect();
        self.annihilated_by(rows)
    }

    /// `{v : vᵀ G u = 0 for all u ∈ self}` for a bilinear form with Gram `G`.
    pub fn perp_form(&self, gram: &Matrix) -> Result<Self, LinalgError> {
        if gram.rows() != self.ambient_dim || gram.cols() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: gram.rows() });
        }
        let rows = self.basis.iter().map(|u| gram.mul_vec(u)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.annihilated_by(rows))
    }

    /// `{v : Mv ∈ self}`.
    pub fn preimage(&self, m: &Matrix) -> Result<Self, LinalgError> {
        if m.rows() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: m.rows() });
        }
        // Rows h with h·u = 0 on self cut out self; v is in the preimage iff
        // h·(Mv) = 0 for each of them.
        let ann = Self::from_rows_kernel(self.ambient_dim, &self.basis);
        let mut rows = Vec::with_capacity(ann.len());
        for h in &ann {
            rows.push((0..m.cols()).map(|j| dot(h, &m.column(j))).collect());
        }
        let k = Matrix::from_rows(rows, m.cols())?.kernel();
        Self::span(m.cols(), &k)
    }

    /// `M(self)`.
    pub fn image(&self, m: &Matrix) -> Result<Self, LinalgError> {
        let vs = self.basis.iter().map(|b| m.mul_vec(b)).collect::<Result<Vec<_>, _>>()?;
        Self::span(m.rows(), &vs)
    }

    fn annihilated_by(&self, rows: Vec<Vec<Q>>) -> Self {
        let k = Self::from_rows_kernel(self.ambient_dim, &rows);
        Self::span(self.ambient_dim, &k).expect("kernel vectors have ambient length")
    }

    fn from_rows_kernel(n: usize, rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
        if rows.is_empty() {
            return (0..n).map(|i| unit(n, i)).collect();
        }
        Matrix::from_rows(rows.to_vec(), n).expect("rows have ambient length").kernel()
    }

    /// Extends the echelon basis of `self` to a basis of `sup ⊇ self`. Returns
    /// the added vectors, taken from the echelon basis of `sup`.
    pub fn complement_in(&self, sup: &Self) -> Result<Vec<Vec<Q>>, LinalgError> {
        self.check(sup.ambient_dim)?;
        let mut cur = self.clone();
        let mut added = Vec::new();
        for b in &sup.basis {
            if !cur.contains(b)? {
                cur = cur.with_vector(b)?;
                added.push(b.clone());
            }
        }
        if cur.dim() != sup.dim() {
            return Err(LinalgError::NotContained);
        }
        Ok(added)
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span")?;
        f.debug_list().entries(&self.basis).finish()
    }
}

impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}
