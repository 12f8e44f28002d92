//! Exact integer linear algebra and finitely presented abelian groups.

pub mod group;
pub mod lattice;
pub mod matrix;
pub mod odd;
pub mod snf;

pub use group::{GroupElement, GroupHom, Kernel, PresentedGroup};
pub use lattice::{integer_kernel, Hnf};
pub use matrix::IntMatrix;
pub use odd::{OddElement, OddLocalized};
pub use snf::{smith, Smith};
