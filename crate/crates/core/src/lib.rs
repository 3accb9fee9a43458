//! Exact tooling for reconstructing pair-colorings from their homogeneous sets.
//!
//! A coloring assigns 0 or 1 to every pair of a finite ground set. Its
//! homogeneous family is the set of subsets of size at least three on which
//! it is constant. This crate decides, for concrete colorings, whether that
//! family determines the coloring up to complementation, enumerates every
//! coloring sharing the family, and runs exhaustive campaigns over small
//! ground sets.

pub mod canon;
pub mod cli;
pub mod cliques;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod io;
pub mod reconstruct;
pub mod rng;
pub mod survey;

pub use canon::{canonical_form, canonical_graph};
pub use cliques::maximal_homogeneous;
pub use coloring::{pair_index, triple_index, Color, Coloring, TripleFamily, VertexSet};
pub use error::{Error, Result};
pub use generators::{generate, GeneratorSpec};
pub use reconstruct::{
    build_constraints, check_criterio_equiv, classify, critical_pairs, e_property,
    extend_reconstructible, extend_unreconstructible, four_suffices_certificate,
    is_reconstructible, r_value, reconstructions, solve_all, ConstraintSystem,
    ReconstructionReport,
};
