use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::GaussianRational as Q;
use crate::sphere::FixedLine;

/// A point `(α : β)` of `P¹`, normalized so the first nonzero coordinate
/// is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjLine {
    alpha: Q,
    beta: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("(0 : 0) is not a point of P1")]
pub struct ZeroVector;

impl ProjLine {
    pub fn new(alpha: Q, beta: Q) -> Result<Self, ZeroVector> {
        if !alpha.is_zero() {
            let beta = &beta / &alpha;
            Ok(Self { alpha: Q::one(), beta })
        } else if !beta.is_zero() {
            Ok(Self { alpha: Q::zero(), beta: Q::one() })
        } else {
            Err(ZeroVector)
        }
    }

    /// `(1 : μ)`.
    pub fn affine(mu: Q) -> Self {
        Self { alpha: Q::one(), beta: mu }
    }

    pub fn alpha(&self) -> &Q {
        &self.alpha
    }

    pub fn beta(&self) -> &Q {
        &self.beta
    }

    pub fn coords(&self) -> [Q; 2] {
        [self.alpha.clone(), self.beta.clone()]
    }

    /// Orthogonal complement for the standard Hermitian product.
    pub fn perp(&self) -> Self {
        Self::new(-self.beta.conj(), self.alpha.conj()).expect("nonzero")
    }

    pub fn fixed(line: FixedLine) -> Self {
        let one = Q::one();
        let i = Q::i();
        match line {
            FixedLine::E => Self::affine(Q::zero()),
            FixedLine::F => Self { alpha: Q::zero(), beta: one },
            FixedLine::EPlusF => Self::affine(one),
            FixedLine::EMinusF => Self::affine(-one),
            // span(ie + f) = (i : 1) = (1 : -i).
            FixedLine::IePlusF => Self::affine(-i),
            FixedLine::IeMinusF => Self::affine(i),
        }
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.alpha, self.beta)
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjLine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjLine {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[Q; 2]>::deserialize(d)?;
        Self::new(a, b).map_err(serde::de::Error::custom)
    }
}
