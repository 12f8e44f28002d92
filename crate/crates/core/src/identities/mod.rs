//! Distinguished elements of refined pre-Bloch groups and checks of their identities.

pub mod elements;
pub mod sum;
pub mod verify;

pub use elements::{c_const, c_tilde, constant, d_const, psi, psi1, psi2, relator_classical, relator_refined, Constant};
pub use sum::SymbolSum;
pub use verify::{Identity, Params, SuiteResult, Verdict, Verifier};
