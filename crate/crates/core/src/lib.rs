//! Exact computations around the Kazama–Suzuki and Feigin–Semikhatov–Tipunin
//! coset constructions.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] builds finite root systems with the normalised form
//!   (long roots have norm 2).
//! * [`lattice`] holds integral lattices with 2-cocycles, the fermionic
//!   lattices `L⁺`/`L⁻`, the kernel sublattice `K`, discriminant groups and
//!   norm-bounded enumeration.
//! * [`bilinear`] has the level-dependent Gram matrices `g`, `g*`, `G`, `G*`
//!   and the weight correspondences between the affine and the
//!   superconformal side.
//! * [`ope`] is a symbolic OPE engine for affine currents tensored with
//!   lattice vertex operators.
//! * [`charflow`] implements truncated q-series, the branching character
//!   formulas and character-level spectral flow.
//!
//! All arithmetic is exact; rationals are [`Q`] (arbitrary precision).

pub mod bilinear;
pub mod charflow;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod ope;
pub mod rational;
pub mod rootsys;

pub use error::{Error, Result};
pub use rational::Q;
