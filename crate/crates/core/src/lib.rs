//! Set-theoretical solutions of the pentagon equation
//! `s23 s13 s12 = s12 s23` on finite sets and finite groups.
//!
//! - [`algebra`]: Cayley tables, groups, subgroups, cosets, exact
//!   factorizations and self-maps.
//! - [`pentagon`]: pair maps `s(x, y) = (x·y, x∗y)` and exhaustive checks
//!   of every identity they can satisfy.
//! - [`theta`]: solutions on a group as `(xy, θ_x(y))`, their kernels and
//!   the correspondence with normal subgroups plus coset representatives.
//! - [`constructions`]: the named solution families.
//! - [`enumeration`]: brute-force and structural enumeration, equivalence
//!   classes and filters.
//! - [`format`]: text documents for tables and reports.

pub mod algebra;
pub mod constructions;
pub mod corpus;
pub mod enumeration;
mod error;
pub mod format;
pub mod pentagon;
pub mod theta;

pub use error::{Error, Result};
