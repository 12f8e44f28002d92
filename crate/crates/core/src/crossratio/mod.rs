//! The refined cross ratio and images of `H₃` of finite cyclic subgroups of `SL₂`.

pub mod point;
pub mod recipe;

pub use point::{ProjPoint, SL2Elem};
pub use recipe::{
    admissible_pairs, all_points, cyclic_h3_image, refined_cross_ratio, sample_pairs, torus_element, ORDER_LIMIT,
};
