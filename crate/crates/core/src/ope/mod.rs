//! Symbolic OPEs for affine currents tensored with lattice vertex superalgebras.

pub mod coeff;
pub mod engine;
pub mod field;
pub mod freefield;
pub mod verify;

pub use coeff::Coeff;
pub use engine::{ContractionTable, SingularPart, SkewVerdict};
pub use field::{AffineSym, Field, FieldNames, Mono, TermKey, Word};
pub use freefield::FreeFields;
pub use verify::{verify_all, verify_fst_homomorphism, verify_hminus_heisenberg, verify_jalpha_heisenberg, OpeReport};
