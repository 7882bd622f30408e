//! Exact models of Springer fibers and the maps between them.

mod ambient;
mod flag;
mod form;
mod jordan;
mod projline;
mod propagation;
mod sample;
mod spaltenstein;
mod verify;

pub use ambient::Ambient;
pub use flag::{phi, phi_inverse, Flag, FlagError, FlagJson};
pub use form::{standard_gram, FormError, FormSpec};
pub use jordan::{induced_map, jordan_type, JordanError};
pub use projline::{ProjLine, ZeroVector};
pub use propagation::{is_isometry, random_isometry, PropagationError, PropagationInstance};
pub use sample::{sample_rng, sample_t_a, satisfies};
pub use spaltenstein::{jordan_sequence, spaltenstein, SpaltensteinError};
pub use verify::{
    verify_component, verify_type_c, Check, ComponentReport, SampleReport, Tamper, Verifier, VerifyError,
};
