use super::flag::Flag;
use super::form::FormSpec;
use super::jordan::{induced_map, jordan_type, JordanError};
use crate::exact::Subspace;
use crate::tableaux::{Domino, DominoTableau, Partition, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaltensteinError {
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error("Jordan type {0} has more than two rows")]
    TooManyRows(Partition),
    #[error("flag has length {0}, a full isotropic flag of this form has length {1}")]
    WrongLength(usize, usize),
    #[error("Jordan types {0} and {1} do not differ by one domino")]
    NotADomino(Partition, Partition),
    #[error("resulting tableau is not admissible: {0}")]
    Tableau(#[from] TableauError),
}

fn rows(p: &Partition) -> Result<(usize, usize), SpaltensteinError> {
    p.rows().ok_or_else(|| SpaltensteinError::TooManyRows(p.clone()))
}

/// `J(x^{(i)})` for `i = 0, …, ℓ`, where `x^{(i)}` is the map induced by `z`
/// on `F_i^⊥ / F_i`.
pub fn jordan_sequence(flag: &Flag, form: &FormSpec) -> Result<Vec<Partition>, SpaltensteinError> {
    let x = form.z_on_e();
    let mut out = Vec::with_capacity(flag.len() + 1);
    for i in 0..=flag.len() {
        let u = if i == 0 {
            Subspace::zero(form.dim())
        } else {
            form.restrict(&flag.spaces()[i - 1]).map_err(JordanError::from)?
        };
        out.push(jordan_type(&induced_map(&x, &u, form)?)?);
    }
    Ok(out)
}

/// The domino tableau recording how `J(x^{(i)})` grows: domino `i + 1` fills
/// the difference between `J(x^{(i+1)})` and `J(x^{(i)})`.
pub fn spaltenstein(flag: &Flag, form: &FormSpec) -> Result<DominoTableau, SpaltensteinError> {
    let ell = form.dim() / 2;
    if flag.len() != ell {
        return Err(SpaltensteinError::WrongLength(flag.len(), ell));
    }
    let seq = jordan_sequence(flag, form)?;
    let mut dominoes = Vec::with_capacity(ell);
    for i in 0..ell {
        let (big, small) = (&seq[i], &seq[i + 1]);
        let (p, q) = rows(small)?;
        let d = match rows(big)? {
            (a, b) if a == p + 2 && b == q => Domino::horizontal(i + 1, 1, p + 1),
            (a, b) if a == p && b == q + 2 && q + 2 <= p => Domino::horizontal(i + 1, 2, q + 1),
            (a, b) if a == p + 1 && b == q + 1 && p == q => Domino::vertical(i + 1, p + 1),
            _ => return Err(SpaltensteinError::NotADomino(big.clone(), small.clone())),
        };
        dominoes.push(d);
    }
    if !seq[ell].parts().is_empty() {
        return Err(SpaltensteinError::NotADomino(seq[ell].clone(), Partition::new(vec![])));
    }
    Ok(DominoTableau::new(form.shape(), form.flavor(), dominoes)?)
}
