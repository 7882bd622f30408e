use serde::Serialize;

use super::constraints::{solve, Convention, Solution};
use crate::cupdiag::{intersection_type, CupDiagram, IntersectionType, VertexCountMismatch};

/// Agreement between the circle-diagram rule and the constraint solver for
/// one pair of diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub a: String,
    pub b: String,
    pub predicted: IntersectionType,
    pub standard: Solution,
    pub swapped: Solution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("predictor and solver disagree on {a} vs {b}: predicted {predicted}, solver says {standard:?} / {swapped:?}")]
pub struct Mismatch {
    pub a: String,
    pub b: String,
    pub predicted: IntersectionType,
    pub standard: Solution,
    pub swapped: Solution,
}

fn as_type(s: &Solution) -> IntersectionType {
    match s {
        Solution::Inconsistent => IntersectionType::Empty,
        Solution::Consistent { free, .. } => IntersectionType::NonEmpty(*free),
    }
}

/// Checks that the solver agrees with [`intersection_type`] on emptiness and
/// on the number of free sphere coordinates, under both ray conventions.
pub fn oracle_cross_check(a: &CupDiagram, b: &CupDiagram) -> Result<Result<CrossCheck, Mismatch>, VertexCountMismatch> {
    let predicted = intersection_type(a, b)?;
    let standard = solve(a, b, Convention::Standard)?;
    let swapped = solve(a, b, Convention::Swapped)?;
    let agree = as_type(&standard) == predicted && as_type(&swapped) == predicted;
    let (a, b) = (a.to_string(), b.to_string());
    Ok(if agree {
        Ok(CrossCheck { a, b, predicted, standard, swapped })
    } else {
        Err(Mismatch { a, b, predicted, standard, swapped })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cupdiag::enumerate_cup_diagrams;

    #[test]
    fn all_b53_pairs_agree() {
        let all = enumerate_cup_diagrams(4, 1);
        let mut pairs = 0;
        for (i, a) in all.iter().enumerate() {
            for b in &all[i..] {
                oracle_cross_check(a, b).unwrap().unwrap();
                pairs += 1;
            }
        }
        assert_eq!(pairs, 36);
    }

    #[test]
    fn cross_parity_is_empty() {
        let a: CupDiagram = "(1,2)|3|4".parse().unwrap();
        let e: CupDiagram = "(1,2)|3|4*".parse().unwrap();
        let r = oracle_cross_check(&a, &e).unwrap().unwrap();
        assert_eq!(r.predicted, IntersectionType::Empty);
        assert_eq!(r.standard, Solution::Inconsistent);
    }
}
