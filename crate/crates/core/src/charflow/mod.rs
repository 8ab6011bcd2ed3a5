//! Truncated q-series, formal characters, the branching transforms between the
//! affine and superconformal sides, and character-level spectral flow.

mod character;
mod checks;
mod eta;
mod flow;
mod qseries;
mod seed;
mod tail;
mod transforms;

pub use character::{
    common_certified_order, compare_characters, lowest_floor, AfCharacter, CharWeight, FormalCharacter, ScCharacter, Side,
    StringFunction, WeightDiff,
};
pub use checks::{cflemma_check, roundtrip_check, CflemmaReport, RoundtripReport, SMember};
pub use eta::eta_power;
pub use flow::{af_flow_vector, flow_diagnostics, sc_flow_shift, spectral_flow_af, spectral_flow_sc, FlowDiagnostics};
pub use qseries::{add_bound, min_bound, QSeries};
pub use seed::{emit_character, validate_sc_character, validate_seed, Rat, SeedDoc, SeedString, SeedTerm};
pub use tail::{Quadratic, TailBound};
pub use transforms::{defermionize_character, delta_character, eta_exponent, fermionize_character};
