//! Exact combinatorial parameters: independence number (the subrank),
//! clique cover number (the rank) and strong-power capacity bounds.

pub mod capacity;
pub mod clique_cover;
pub mod independence;

pub use capacity::{asymp_leq_certificate, capacity_lower_bound, AsympWitness, CapacityEstimate};
pub use clique_cover::{
    clique_cover_number, CliqueCover, DEFAULT_CLIQUE_COVER_LIMIT, MAX_CLIQUE_COVER_LIMIT,
};
pub use independence::{independence_number, IndependentSet, DEFAULT_INDEPENDENCE_LIMIT};
