//! Integral and dyadic group rings of square-class groups.

pub mod class;
pub mod dyadic;
pub mod ring;
pub mod rho;

pub use class::{FieldKind, SquareClass};
pub use dyadic::Dyadic;
pub use ring::GroupRingElement;
pub use rho::Rho;
