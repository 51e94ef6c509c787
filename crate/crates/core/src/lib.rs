//! Endofunctors on the simplex category and the edgewise subdivisions they
//! induce on simplicial sets.
//!
//! Every endofunctor of `Δ` is a concatenation of the identity, the order
//! reversal and the constant functor at `[0]`, and precomposition with it
//! preserves weak equivalences exactly when the constant functor is absent.
//! This crate makes all of that computable: [`word`] evaluates and decomposes
//! endofunctors, [`simplicial`] builds the subdivided simplicial sets lazily,
//! and [`homology`] audits them with exact integral homology.
//!
//! ```
//! use edgewise::simplicial::{skeleton, subdivide};
//! use edgewise::word::Word;
//!
//! let g = skeleton(&subdivide(&Word::segal(), 2));
//! assert_eq!(g.counts(), (6, 9, 4));
//! ```

pub mod duality;
pub mod error;
pub mod exec;
pub mod homology;
pub mod ordinal;
pub mod selftest;
pub mod simplicial;
pub mod word;

pub use error::{Error, Result};
pub use exec::Exec;
pub use ordinal::{IntervalMap, OrdinalMap};
pub use word::{Letter, Word};
