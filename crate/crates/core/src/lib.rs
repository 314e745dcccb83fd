//! Exact-arithmetic Study-type determinants over ring towers.
//!
//! The library builds regular representations of twisted group algebras
//! over exact coefficient rings (rationals, cyclotomic fields, sparse
//! polynomial rings), composes them through ring towers, and uses them
//! to compute and verify Study-type determinants, the classical
//! quaternionic Study determinant, and group determinants with their
//! character-based factorizations.
//!
//! Everything is exact: no floating point anywhere, every identity is
//! checked by coefficient equality in canonical form.

pub mod error;
pub mod fixtures;
pub mod groupdet;
pub mod io;
pub mod matrix;
pub mod regrep;
pub mod report;
pub mod rings;
pub mod rng;
pub mod sdet;
pub mod suites;
pub mod tga;

pub use error::{Error, Result};
