use num_traits::Zero;

use super::ambient::Ambient;
use crate::exact::{dot, GaussianRational as Q, LinalgError, Matrix, Subspace};
use crate::tableaux::{is_admissible, Flavor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("shape ({0},{1}) is not admissible of type {2}")]
    Inadmissible(usize, usize, Flavor),
    #[error("E_({0},{1}) does not fit in an ambient with N = {2}")]
    TooSmall(usize, usize, usize),
    #[error("form is not {0}")]
    Symmetry(&'static str),
    #[error("form is degenerate")]
    Degenerate,
    #[error("z is not skew for the form")]
    NotSkew,
    #[error("subspace is not contained in E_({0},{1})")]
    NotContained(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A bilinear form on `E_{a,b} = span(e_1..e_a, f_1..f_b)`. The Gram matrix
/// is indexed by E-coordinates: `e_1..e_a` then `f_1..f_b`.
#[derive(Debug, Clone)]
pub struct FormSpec {
    flavor: Flavor,
    shape: (usize, usize),
    ambient: Ambient,
    gram: Matrix,
    /// Ambient indices of the E-coordinates.
    coords: Vec<usize>,
}

fn sgn(e: usize) -> Q {
    Q::sign(e as i64)
}

/// Gram matrix of the standard form of the given flavor on `E_{a,b}`.
pub fn standard_gram(flavor: Flavor, a: usize, b: usize) -> Matrix {
    let d = a + b;
    let mut g = Matrix::zeros(d, d);
    let ei = |i: usize| i - 1;
    let fj = |j: usize| a + j - 1;
    match (flavor, a == b) {
        (Flavor::D, true) => {
            for j in 1..=b {
                let jp = b + 1 - j;
                g[(ei(jp), fj(j))] = sgn(j - 1);
                g[(fj(j), ei(jp))] = sgn(j - 1);
            }
        }
        (Flavor::D, false) => {
            for i in 1..=a {
                g[(ei(i), ei(a + 1 - i))] = sgn(i - 1);
            }
            for j in 1..=b {
                g[(fj(j), fj(b + 1 - j))] = sgn(j);
            }
        }
        (Flavor::C, true) => {
            for j in 1..=b {
                let jp = b + 1 - j;
                g[(fj(j), ei(jp))] = sgn(j - 1);
                g[(ei(jp), fj(j))] = -sgn(j - 1);
            }
        }
        (Flavor::C, false) => {
            for i in 1..=a {
                let ip = a + 1 - i;
                if i < ip {
                    g[(ei(i), ei(ip))] = sgn(i);
                    g[(ei(ip), ei(i))] = -sgn(i);
                }
            }
            for j in 1..=b {
                let jp = b + 1 - j;
                if j < jp {
                    g[(fj(j), fj(jp))] = sgn(j - 1);
                    g[(fj(jp), fj(j))] = -sgn(j - 1);
                }
            }
        }
    }
    g
}

impl FormSpec {
    /// The form on `E_{a,b}` inside `ambient`, checked to be (anti)symmetric,
    /// nondegenerate, and to make `z` skew.
    pub fn for_shape(flavor: Flavor, (a, b): (usize, usize), ambient: &Ambient) -> Result<Self, FormError> {
        if !is_admissible(a, b, flavor) || b > a {
            return Err(FormError::Inadmissible(a, b, flavor));
        }
        let form = Self::with_gram(flavor, (a, b), ambient, standard_gram(flavor, a, b))?;
        form.check()?;
        Ok(form)
    }

    /// Same as [`FormSpec::for_shape`] without the admissibility and form
    /// checks. Used to build deliberately broken forms.
    pub fn with_gram(
        flavor: Flavor,
        (a, b): (usize, usize),
        ambient: &Ambient,
        gram: Matrix,
    ) -> Result<Self, FormError> {
        if a > ambient.n_half() || b > ambient.n_half() {
            return Err(FormError::TooSmall(a, b, ambient.n_half()));
        }
        let coords = (1..=a).map(|i| ambient.e_index(i)).chain((1..=b).map(|j| ambient.f_index(j))).collect();
        Ok(Self { flavor, shape: (a, b), ambient: ambient.clone(), gram, coords })
    }

    fn check(&self) -> Result<(), FormError> {
        let g = &self.gram;
        let t = g.transpose();
        match self.flavor {
            Flavor::D if t != *g => return Err(FormError::Symmetry("symmetric")),
            Flavor::C if t != g.neg() => return Err(FormError::Symmetry("antisymmetric")),
            _ => {}
        }
        if g.rank() != g.rows() {
            return Err(FormError::Degenerate);
        }
        // β(zv, w) + β(v, zw) = 0 ⇔ zᵀG + Gz = 0 on E.
        let z = self.z_on_e();
        if !z.transpose().mul(g)?.add(&g.mul(&z)?)?.is_zero() {
            return Err(FormError::NotSkew);
        }
        Ok(())
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn shape(&self) -> (usize, usize) {
        self.shape
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn e_space(&self) -> Subspace {
        self.ambient.e_space(self.shape.0, self.shape.1)
    }

    /// The restriction of `z` to `E`, in E-coordinates.
    pub fn z_on_e(&self) -> Matrix {
        let (a, b) = self.shape;
        let mut z = Matrix::zeros(a + b, a + b);
        for i in 1..a {
            z[(i - 1, i)] = num_traits::One::one();
        }
        for j in 1..b {
            z[(a + j - 1, a + j)] = num_traits::One::one();
        }
        z
    }

    /// E-coordinates of an ambient vector, or `None` if it leaves `E`.
    pub fn to_e(&self, v: &[Q]) -> Option<Vec<Q>> {
        let inside = v.iter().enumerate().all(|(idx, x)| x.is_zero() || self.coords.contains(&idx));
        inside.then(|| self.coords.iter().map(|&i| v[i].clone()).collect())
    }

    pub fn from_e(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.ambient.dim()];
        for (x, &i) in v.iter().zip(&self.coords) {
            out[i] = x.clone();
        }
        out
    }

    /// A subspace of `E`, re-expressed in E-coordinates.
    pub fn restrict(&self, u: &Subspace) -> Result<Subspace, FormError> {
        let (a, b) = self.shape;
        let vs = u
            .basis()
            .iter()
            .map(|v| self.to_e(v).ok_or(FormError::NotContained(a, b)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(self.dim(), &vs)?)
    }

    /// `β(u, v)` for ambient vectors in `E`.
    pub fn pair(&self, u: &[Q], v: &[Q]) -> Result<Q, FormError> {
        let (a, b) = self.shape;
        let ue = self.to_e(u).ok_or(FormError::NotContained(a, b))?;
        let ve = self.to_e(v).ok_or(FormError::NotContained(a, b))?;
        Ok(dot(&ue, &self.gram.mul_vec(&ve)?))
    }

    /// Whether `β` vanishes on `U × U`; errors if `U ⊄ E`.
    pub fn isotropic(&self, u: &Subspace) -> Result<bool, FormError> {
        let ue = self.restrict(u)?;
        let gu: Vec<Vec<Q>> = ue.basis().iter().map(|w| self.gram.mul_vec(w)).collect::<Result<_, _>>()?;
        Ok(ue.basis().iter().all(|v| gu.iter().all(|w| dot(v, w).is_zero())))
    }

    /// `U^⊥` inside `E`, all in E-coordinates.
    pub fn perp_e(&self, u_e: &Subspace) -> Result<Subspace, FormError> {
        Ok(u_e.perp_form(&self.gram.transpose())?)
    }
}
