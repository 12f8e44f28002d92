//! Specialization of refined pre-Bloch groups of Q and F_q(t) at a place.

pub mod cases;
pub mod global;
pub mod map;
pub mod witness;

pub use cases::{classify, fuzz_relations, relation_image, Classification, FuzzReport, RelationCase};
pub use global::{candidate_places, global_image, global_image_at, GlobalEntry, GlobalImage};
pub use map::{check_surjectivity, residue_tower, SpecializationMap, MAX_RESIDUE};
pub use witness::{order3_sum, rank_bound, witness_matrix, WitnessReport, D_POINT};
