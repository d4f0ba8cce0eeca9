//! Decategorified bordered sutured invariants computed from combinatorial Heegaard diagrams.
//!
//! The crate works over several coefficient rings through the [`rings::Ring`] trait:
//! the integers [`Z`], group rings [`ZH`] and [`ZG`], cyclotomic group rings [`FG`]
//! and the split rational group ring [`QHElem`].

pub mod alexander;
pub mod bsda;
pub mod cli;
pub mod corpus;
pub mod diagram;
pub mod exterior;
pub mod fixtures;
pub mod homology;
pub mod rings;
pub mod selftest;

pub use rings::{CycloElem, GroupDescriptor, HWeight, Matrix, QHElem, Ring, FG, Z, ZG, ZH};
