//! Periodic Dedekind sums, periodic Bernoulli functions and the identities
//! relating them to generalized Eisenstein series.
//!
//! Exact quantities live in [`exact::Cyclotomic`]; the [`analytic`] layer works in
//! double precision and is used for the infinite-series identities.

pub mod analytic;
pub mod arith;
pub mod bernoulli;
pub mod catalog;
pub mod dedekind;
pub mod error;
pub mod exact;
pub mod sequences;

pub use error::{Error, Result};
