//! Dimension bounds for combinatorial (neural) codes.
//!
//! A code on `n` neurons determines a simplicial complex. This crate computes
//! the reduced homology of every induced subcomplex over a prime field,
//! assembles the multigraded Betti table of the Stanley–Reisner ring through
//! Hochster's formula, and reads off the Leray, Helly and homological
//! dimensions of the code from that table. Each dimension also has a direct
//! topological route, used as a cross-check.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, report
//! emitters and the command-line tool live in the `codedim` crate.
#![no_std]

extern crate alloc;

mod error;

pub mod betti;
pub mod code;
pub mod complex;
pub mod dimensions;
pub mod field;
pub mod generators;
pub mod homology;
pub mod vertex_set;

pub use betti::{
    hochster_column, hochster_table, hochster_table_guarded, BettiKey, BettiTable, RValue,
};
pub use code::Code;
pub use complex::SimplicialComplex;
pub use dimensions::{full_report, full_report_guarded, DimensionReport, Witness};
pub use error::{Error, Result};
pub use field::{FieldMatrix, PrimeField};
pub use homology::{reduced_homology, unreduced_homology, HomologyProfile};
pub use vertex_set::VertexSet;

/// Widest ambient vertex set a [`VertexSet`] can represent.
pub const MAX_VERTICES: usize = 32;

/// Default guard on the ambient vertex count for the exponential sweeps.
pub const DEFAULT_MAX_N: usize = 24;
