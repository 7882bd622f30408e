use num_traits::Zero;
use rand::Rng;

use super::ambient::Ambient;
use super::form::{FormError, FormSpec};
use crate::exact::{GaussianRational as Q, LinalgError, Matrix, Subspace};
use crate::tableaux::Flavor;

/// One random instance of the isotropy-propagation statement: `V` is an
/// isotropic subspace of the smaller space `E_{a-2,b-2}` and `U` a subspace
/// of `z^{-1}(V)`, so `zU ⊆ V` is isotropic.
#[derive(Debug, Clone)]
pub struct PropagationInstance {
    pub big: FormSpec,
    pub small: FormSpec,
    pub v: Subspace,
    pub u: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PropagationError {
    #[error("shape {0:?} is too small: the statement needs a smaller form of shape (a-2, b-2)")]
    TooSmall((usize, usize)),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn small_scalar<R: Rng>(rng: &mut R) -> Q {
    let re = rng.random_range(-3..=3);
    let im = if rng.random_bool(0.3) { rng.random_range(-2..=2) } else { 0 };
    Q::from_ratios(re, 1, im, 1)
}

fn random_vector<R: Rng>(rng: &mut R, d: usize) -> Vec<Q> {
    loop {
        let v: Vec<Q> = (0..d).map(|_| small_scalar(rng)).collect();
        if !v.iter().all(Zero::is_zero) {
            return v;
        }
    }
}

/// A random isometry of `form`, built from reflections in the symmetric
/// case and transvections in the antisymmetric one.
pub fn random_isometry<R: Rng>(form: &FormSpec, rng: &mut R, steps: usize) -> Result<Matrix, LinalgError> {
    let d = form.dim();
    let g = form.gram();
    let mut out = Matrix::identity(d);
    let mut done = 0;
    while done < steps && d > 0 {
        let v = random_vector(rng, d);
        let vt = Matrix::from_rows(vec![v.clone()], d)?;
        let col = Matrix::from_columns(std::slice::from_ref(&v), d)?;
        let step = match form.flavor() {
            Flavor::D => {
                let q = crate::exact::dot(&v, &g.mul_vec(&v)?);
                if q.is_zero() {
                    continue;
                }
                // x ↦ x - 2 β(x,v)/β(v,v) v
                let scale = -(Q::from_int(2) / q);
                let r = col.mul(&vt.mul(g)?)?;
                Matrix::identity(d).add(&scale_matrix(&r, &scale))?
            }
            Flavor::C => {
                // x ↦ x + c β(x,v) v
                let c = small_scalar(rng);
                let r = col.mul(&vt.mul(&g.transpose())?)?;
                Matrix::identity(d).add(&scale_matrix(&r, &c))?
            }
        };
        out = step.mul(&out)?;
        done += 1;
    }
    Ok(out)
}

fn scale_matrix(m: &Matrix, s: &Q) -> Matrix {
    let rows = m.to_rows().into_iter().map(|r| r.into_iter().map(|x| &x * s).collect()).collect();
    Matrix::from_rows(rows, m.cols()).expect("same shape")
}

/// A random subspace of `s` of random dimension.
fn random_subspace<R: Rng>(s: &Subspace, rng: &mut R) -> Subspace {
    let d = s.dim();
    let want = rng.random_range(0..=d);
    let vs: Vec<Vec<Q>> = (0..want).map(|_| s.combine(&random_vector(rng, d))).collect();
    Subspace::span(s.ambient_dim(), &vs).expect("vectors of the ambient dimension")
}

impl PropagationInstance {
    /// Draws an instance for the form of `flavor` on `E_{a,b}`.
    pub fn random<R: Rng>(flavor: Flavor, (a, b): (usize, usize), rng: &mut R) -> Result<Self, PropagationError> {
        if b < 2 {
            return Err(PropagationError::TooSmall((a, b)));
        }
        let ambient = Ambient::new(a);
        let big = FormSpec::for_shape(flavor, (a, b), &ambient)?;
        let small =
            FormSpec::for_shape(flavor, (a - 2, b - 2), &ambient).map_err(|_| PropagationError::TooSmall((a, b)))?;
        let (sa, sb) = small.shape();
        // span(e_1..e_{sa/2}, f_1..f_{sb/2}) is isotropic for all four forms.
        let mut v0 = Vec::new();
        for i in 0..sa / 2 {
            v0.push(crate::exact::unit(sa + sb, i));
        }
        for j in 0..sb / 2 {
            v0.push(crate::exact::unit(sa + sb, sa + j));
        }
        let g = random_isometry(&small, rng, 3)?;
        let moved: Vec<Vec<Q>> = v0.iter().map(|v| g.mul_vec(v)).collect::<Result<_, _>>()?;
        let moved = Subspace::span(sa + sb, &moved)?;
        let v_e = random_subspace(&moved, rng);
        let v_amb: Vec<Vec<Q>> = v_e.basis().iter().map(|w| small.from_e(w)).collect();
        let v = Subspace::span(ambient.dim(), &v_amb)?;
        let u = random_subspace(&v.preimage(ambient.z())?, rng);
        Ok(Self { big, small, v, u })
    }

    /// Whether the hypotheses hold: `zU ⊆ V ⊆ E_{a-2,b-2}` with `V` isotropic.
    pub fn hypotheses(&self) -> Result<bool, PropagationError> {
        let zu = self.u.image(self.big.ambient().z())?;
        Ok(zu.is_subspace_of(&self.v)?
            && self.v.is_subspace_of(&self.small.e_space())?
            && self.small.isotropic(&self.v)?)
    }

    /// Whether the conclusion holds: `U ⊆ E_{a,b}` and isotropic.
    pub fn conclusion(&self) -> Result<bool, PropagationError> {
        if !self.u.is_subspace_of(&self.big.e_space())? {
            return Ok(false);
        }
        Ok(self.big.isotropic(&self.u)?)
    }
}

/// Checks `gᵀ G g = G`.
pub fn is_isometry(form: &FormSpec, g: &Matrix) -> Result<bool, LinalgError> {
    Ok(g.transpose().mul(form.gram())?.mul(g)? == *form.gram())
}
