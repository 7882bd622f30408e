//! The sphere model: relations defining each component inside a product of
//! two-spheres, a constraint solver used as an independent oracle for
//! intersections, and the translation of the relations to lines in `P¹`.

mod constraints;
mod oracle;
mod p1;

pub use constraints::{relations_of, solve, Base, Convention, Point, Solution, SphereConstraint};
pub use oracle::{oracle_cross_check, CrossCheck, Mismatch};
pub use p1::{translate_to_p1, FixedLine, ProjRelation};
