//! Plat presentations of links and the moves that relate them.
//!
//! * [`braid`]: braid words, relations, the exact word problem.
//! * [`plat`]: plats and their moves (stabilization, double cosets, flips).
//! * [`invariants`]: plat closures as diagrams and the bracket oracle.
//! * [`foliation`]: the combinatorial tiling model of spanning discs.
//! * [`simplifier`]: monotone search back to the standard plat.

pub mod braid;
pub mod foliation;
pub mod invariants;
pub mod plat;
pub mod simplifier;
