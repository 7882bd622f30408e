use num_traits::{One, Zero};

use crate::exact::{GaussianRational as Q, LinalgError, Matrix, Subspace};

/// `C^{2N}` with ordered basis `e_1..e_N, f_1..f_N`, the nilpotent `z` with
/// two Jordan blocks of size `N`, and the map `C: C^{2N} → C²` sending every
/// `e_i` to `e` and every `f_i` to `f`.
#[derive(Debug, Clone)]
pub struct Ambient {
    n_half: usize,
    z: Matrix,
    c: Matrix,
}

impl Ambient {
    pub fn new(n_half: usize) -> Self {
        let dim = 2 * n_half;
        let mut z = Matrix::zeros(dim, dim);
        for j in 1..n_half {
            z[(j - 1, j)] = Q::one();
            z[(n_half + j - 1, n_half + j)] = Q::one();
        }
        let mut c = Matrix::zeros(2, dim);
        for j in 0..n_half {
            c[(0, j)] = Q::one();
            c[(1, n_half + j)] = Q::one();
        }
        Self { n_half, z, c }
    }

    /// The ambient used for `m` lines and forms on `E_{a,b}`: big enough that
    /// every flag lies in `im z` and that `E_{a,b}` fits.
    pub fn for_shape(m: usize, a: usize) -> Self {
        Self::new((m + 1).max(a))
    }

    pub fn n_half(&self) -> usize {
        self.n_half
    }

    pub fn dim(&self) -> usize {
        2 * self.n_half
    }

    pub fn z(&self) -> &Matrix {
        &self.z
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    /// Index of `e_i` (1-based `i`) in the basis.
    pub fn e_index(&self, i: usize) -> usize {
        assert!((1..=self.n_half).contains(&i), "e_{i} outside ambient");
        i - 1
    }

    /// Index of `f_j` (1-based `j`) in the basis.
    pub fn f_index(&self, j: usize) -> usize {
        assert!((1..=self.n_half).contains(&j), "f_{j} outside ambient");
        self.n_half + j - 1
    }

    pub fn e(&self, i: usize) -> Vec<Q> {
        crate::exact::unit(self.dim(), self.e_index(i))
    }

    pub fn f(&self, j: usize) -> Vec<Q> {
        crate::exact::unit(self.dim(), self.f_index(j))
    }

    /// `Σ c_i e_i + Σ d_j f_j` from sparse coefficient lists.
    pub fn vector(&self, es: &[(usize, Q)], fs: &[(usize, Q)]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (i, c) in es {
            v[self.e_index(*i)] = c.clone();
        }
        for (j, c) in fs {
            v[self.f_index(*j)] = c.clone();
        }
        v
    }

    /// `E_{a,b} = span(e_1..e_a, f_1..f_b)`.
    pub fn e_space(&self, a: usize, b: usize) -> Subspace {
        let idx: Vec<usize> = (1..=a).map(|i| self.e_index(i)).chain((1..=b).map(|j| self.f_index(j))).collect();
        Subspace::coordinate(self.dim(), &idx)
    }

    pub fn apply_z(&self, v: &[Q]) -> Result<Vec<Q>, LinalgError> {
        self.z.mul_vec(v)
    }

    pub fn apply_c(&self, v: &[Q]) -> Result<Vec<Q>, LinalgError> {
        self.c.mul_vec(v)
    }

    /// `z^{-m}(0) = span(e_1..e_m, f_1..f_m)`.
    pub fn z_power_kernel(&self, m: u32) -> Result<Subspace, LinalgError> {
        let zm = self.z.pow(m)?;
        Subspace::span(self.dim(), &zm.kernel())
    }
}
