//! Computational toolkit for Hecke-Kiselman monoids.
//!
//! A finite simple oriented graph presents a monoid on idempotent
//! generators: unconnected vertices commute, and each arrow `i -> j` imposes
//! `x_i x_j x_i = x_j x_i x_j = x_i x_j`. This crate materializes the
//! structure theory of these monoids at desk scale, with exact arithmetic
//! throughout:
//!
//! - [`graph`]: the presentation data and its analysis — strongly connected
//!   components, the polynomial-identity criterion, the cyclic core, and
//!   enumeration of acyclic full subgraphs.
//! - [`rewrite`]: relation sets, bounded normalization and word equality,
//!   and exhaustive enumeration of the finite (acyclic) monoids.
//! - [`cycle`]: everything specific to the monoid of an oriented cycle —
//!   canonical subset idempotents, the exact integral affine representation,
//!   support computation, and ideal-chain level classification.
//! - [`rep`]: semigroups of matrix type over a cyclic semigroup, sandwich
//!   matrices, and the induced matrix representations over exact rationals.
//! - [`catalog`]: a machine-readable catalog of irreducible-representation
//!   descriptors for any graph passing the PI criterion.

pub mod catalog;
pub mod cycle;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod rep;
pub mod rewrite;
pub mod word;

pub use catalog::{catalog, component_descriptors, one_dim_rep, CatalogReport, Phi, RepDescriptor};
pub use cycle::{
    affine_action, all_idempotents, classify_level, infiniteness_witness, level_generator_word,
    subset_idempotent, AffineMap, IdealLevel, Level, SubsetIdempotent,
};
pub use graph::{Component, ComponentKind, OrientedGraph};
pub use matrix::{Rational, RationalMatrix};
pub use rep::{
    verify_homomorphism, ExtendedRep, MatrixTypeData, MatrixTypeElement, Representation,
    SandwichEntry,
};
pub use rewrite::{
    are_equal, enumerate_monoid, equality_chain, idempotents_acyclic, normalize, relations,
    EqualityVerdict, Normalized, RelationSet, DEFAULT_BUDGET,
};
pub use word::Word;
