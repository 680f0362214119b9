//! Exact lattice-polytope geometry, mixed volumes, and semi-interlaced
//! polytope families.

pub mod apps;
pub mod cli;
pub mod error;
pub(crate) mod hull;
pub mod lattice;
pub mod lemma;
pub mod mixed;
pub mod polytope;
pub mod random;
pub mod semi;

pub use error::{Error, Result};
