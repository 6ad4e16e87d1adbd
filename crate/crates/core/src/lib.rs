//! Exact computations in highest-weight modules of the N=2 superconformal
//! algebra: canonical basis words, normal-ordered mode actions, singular
//! vector searches, and the admissible-level classification data, all over
//! arbitrary-precision rationals.

// Error variants carry exact rationals, so Result is wide; errors are cold.
#![allow(clippy::result_large_err)]

pub mod algebra;
pub mod character;
pub mod commands;
pub mod error;
pub mod linalg;
pub mod pbw;
pub mod rat;
pub mod report;
pub mod singular;
pub mod spectrum;
pub mod verma;

pub use algebra::{bracket, AlgebraElement, Grade, Mode, ModeKind, Parity};
pub use error::EngineError;
pub use pbw::PbwWord;
pub use rat::Rat;
pub use verma::{HighestWeight, Module, ModuleElement};
