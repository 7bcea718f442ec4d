//! Exact computer algebra for symplectic groups over monoid algebras.
//!
//! The crate has three layers. `ring` implements coefficient rings
//! (integers, rationals, prime fields) and sparse elements of monoid
//! algebras R[M] with rational exponent support. `geometry` implements
//! rational polyhedral cones and the monoid constructions built on them
//! (interior monoids, c-divisibility, pyramid splits, polarized triples).
//! `symplectic` and `factor` implement the elementary symplectic
//! generators, scaling conjugation, and constructive factorization of
//! symplectic matrices into generator words. `lab` packages mechanical
//! checks of the algebraic identities the rest of the crate relies on,
//! and `jsonio` fixes the serialization formats shared by the CLI and
//! the Python bindings.
//!
//! All arithmetic is exact; nothing in the crate uses floating point.

pub mod error;
pub mod factor;
pub mod geometry;
pub mod jsonio;
pub mod lab;
pub mod ring;
pub mod rng;
pub mod symplectic;

pub use error::{Error, Result};
