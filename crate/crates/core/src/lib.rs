//! Exact construction and verification of smash products, smash coproducts
//! and smash biproducts of finite-dimensional (co)algebras over ℚ and GF(p).
//!
//! Structures are stored as structure constants ([`structures`]); every
//! check returns a [`report::Report`] naming each axiom and, on failure, a
//! basis-level witness.

#![allow(clippy::needless_range_loop)]

pub mod biproduct;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod cosmash;
pub mod field;
pub mod format;
pub mod hopfmod;
pub mod linalg;
pub mod report;
pub mod smash;
pub mod structures;
