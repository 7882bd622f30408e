//! Components of two-row Springer fibers of types C and D: tableaux, cup
//! diagrams, sphere models and exact flag geometry.

pub mod cupdiag;
pub mod exact;
pub mod sphere;
pub mod springer;
pub mod tableaux;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/cup-diagrams.md")]
    mod cup_diagrams {}
    #[doc = include_str!("../../../book/src/sphere-model.md")]
    mod sphere_model {}
    #[doc = include_str!("../../../book/src/flags-and-forms.md")]
    mod flags_and_forms {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
