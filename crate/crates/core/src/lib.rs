//! Computations with refined pre-Bloch groups of finite and global fields.

pub mod crossratio;
pub mod error;
pub mod exactalg;
pub mod fields;
pub mod groupring;
pub mod identities;
pub mod partition;
pub mod prebloch;
pub mod specialize;

pub use error::{Error, Result};
