use super::form::{FormError, FormSpec};
use crate::exact::{LinalgError, Matrix, Subspace};
use crate::tableaux::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JordanError {
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("subspace is not stable under the endomorphism")]
    NotStable,
    #[error("subspace is not isotropic")]
    NotIsotropic,
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Jordan block sizes of a nilpotent matrix, read off from
/// `d_i = dim ker M^i`: there are `d_i - d_{i-1}` blocks of size at least `i`.
pub fn jordan_type(m: &Matrix) -> Result<Partition, JordanError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() }.into());
    }
    let n = m.rows();
    let mut at_least = Vec::new();
    let mut power = Matrix::identity(n);
    let mut prev = 0;
    for _ in 0..n {
        power = power.mul(m)?;
        let d = n - power.rank();
        if d == prev {
            break;
        }
        at_least.push(d - prev);
        prev = d;
    }
    if prev != n {
        return Err(JordanError::NotNilpotent);
    }
    Ok(Partition::new(at_least).conjugate())
}

/// The endomorphism of `U^⊥ / U` induced by `x`, with `U` and `x` in
/// E-coordinates of `form`. The basis of the quotient is the extension of
/// `U`'s echelon basis by echelon vectors of `U^⊥`.
pub fn induced_map(x: &Matrix, u: &Subspace, form: &FormSpec) -> Result<Matrix, JordanError> {
    if !u.image(x)?.is_subspace_of(u)? {
        return Err(JordanError::NotStable);
    }
    let perp = form.perp_e(u)?;
    if !u.is_subspace_of(&perp)? {
        return Err(JordanError::NotIsotropic);
    }
    let ext = u.complement_in(&perp)?;
    let mut cols: Vec<_> = u.basis().to_vec();
    cols.extend(ext.iter().cloned());
    let basis = Matrix::from_columns(&cols, form.dim())?;
    let k = u.dim();
    let q = ext.len();
    let mut out = Matrix::zeros(q, q);
    for (j, w) in ext.iter().enumerate() {
        let xw = x.mul_vec(w)?;
        let c = basis.solve(&xw)?.ok_or(JordanError::NotStable)?;
        for i in 0..q {
            out[(i, j)] = c[k + i].clone();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::springer::Ambient;
    use crate::tableaux::Flavor;

    #[test]
    fn jordan_examples() {
        let amb = Ambient::new(5);
        let f = FormSpec::for_shape(Flavor::D, (5, 3), &amb).unwrap();
        assert_eq!(jordan_type(&f.z_on_e()).unwrap(), Partition::two_row(5, 3));
        assert_eq!(jordan_type(&Matrix::zeros(2, 2)).unwrap(), Partition::two_row(1, 1));
        let g = FormSpec::for_shape(Flavor::D, (3, 3), &amb).unwrap();
        assert_eq!(jordan_type(&g.z_on_e()).unwrap(), Partition::two_row(3, 3));
        assert_eq!(jordan_type(&Matrix::identity(2)), Err(JordanError::NotNilpotent));
        assert_eq!(jordan_type(&Matrix::zeros(0, 0)).unwrap(), Partition::new(vec![]));
    }

    #[test]
    fn induced_examples() {
        let amb = Ambient::new(5);
        let f = FormSpec::for_shape(Flavor::D, (5, 3), &amb).unwrap();
        let x = f.z_on_e();
        let e = |i: usize| crate::exact::unit(8, i - 1);
        let fv = |j: usize| crate::exact::unit(8, 5 + j - 1);
        let jt = |u: Subspace| jordan_type(&induced_map(&x, &u, &f).unwrap()).unwrap();
        assert_eq!(jt(Subspace::zero(8)), Partition::two_row(5, 3));
        assert_eq!(jt(Subspace::span(8, &[e(1)]).unwrap()), Partition::two_row(3, 3));
        assert_eq!(jt(Subspace::span(8, &[fv(1)]).unwrap()), Partition::two_row(5, 1));
        assert_eq!(jt(Subspace::span(8, &[e(1), fv(1)]).unwrap()), Partition::two_row(3, 1));
        assert_eq!(induced_map(&x, &Subspace::span(8, &[e(2)]).unwrap(), &f), Err(JordanError::NotStable));
    }
}
