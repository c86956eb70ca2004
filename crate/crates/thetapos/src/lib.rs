//! File formats, catalog loading, seeded sampling and the command-line
//! frontend over `thetapos-core`.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod sample;

pub use thetapos_core as core;
