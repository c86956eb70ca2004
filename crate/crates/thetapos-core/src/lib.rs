//! Exact-arithmetic Θ-positivity.
//!
//! Classification of Θ-positive structures from Dynkin-diagram data,
//! combinatorics of the Θ-Weyl group, and a rational matrix model of
//! SO(3,q) carrying the positive unipotent semigroup, its braid coordinate
//! changes, the Bruhat strata of the nonnegative semigroup, positivity of
//! flags and the Θ-principal sl₂.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod flags;
pub mod linalg;
pub mod rootsys;
pub mod semigroup;
pub mod somodel;
pub mod weyl;

pub use error::Error;
pub use linalg::{Matrix, Rat};
