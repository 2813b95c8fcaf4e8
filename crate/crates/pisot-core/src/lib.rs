//! Exact arithmetic for Pisot number searches.
//!
//! Everything in this crate computes over the integers or rationals: polynomial
//! arithmetic and resultants, Sturm chains, unit-disk root counting, certified
//! complex root enclosures, a complete branch-and-bound enumerator for Pisot
//! numbers in a rational interval, and exact tests for small additive relations
//! among the conjugates of a Pisot number. No verdict anywhere depends on an
//! unverified floating-point value.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required). IO, file
//! formats and parallel orchestration live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dyadic;
pub mod enumerate;
pub mod error;
pub mod interval;
pub mod pisot;
pub mod plan;
pub mod poly;
pub mod relations;
pub mod resultant;
pub mod roots;
pub mod sturm;
pub mod unitdisk;

pub use error::Error;
pub use poly::IntPoly;
