//! Partitions, standard and domino tableaux, and the bijections with cup
//! diagrams.

mod cluster;
mod domino;
mod partition;
mod syt;

pub use cluster::{big_psi, big_psi_inverse, c_to_d, clusters, d_to_c, Cluster, ClusterKind, InverseError};
pub use domino::{enumerate_adt, enumerate_signed, Domino, DominoTableau, Orientation, Sign, TableauError};
pub use partition::{d_shapes_up_to, is_admissible, Flavor, Partition};
pub use syt::{enumerate_syt, psi, psi_inverse, StandardYoungTableau, SytError};
