//! Refined and classical pre-Bloch groups of finite fields and their quotients.

pub mod presentation;
pub mod tower;

pub use presentation::{Flavor, PreBlochPresentation};
pub use tower::{NodeName, Tower, TowerNode};
