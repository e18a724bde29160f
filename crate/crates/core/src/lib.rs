//! Finite quasigroups and soft quasigroups.
//!
//! The crate validates Latin-square operation tables, derives the six
//! parastrophic operations, enumerates subquasigroups and normal
//! congruences, classifies soft sets over a quasigroup, and builds coset
//! families, quotients and order/mean metrics. Every predicate is decided by
//! exhaustive search, so results are exact at desk-scale orders.

pub mod cli;
pub mod congruence;
pub mod cosets;
pub mod fixtures;
pub mod iso;
pub mod quasigroup;
pub mod softquasigroup;
pub mod softset;
pub mod subalgebra;
pub mod subset;
pub mod table;

pub use quasigroup::{
    validate, LatinDefect, LatinViolation, LineKind, Nuclei, OperationKind, Permutation,
    PropertyReport, Quasigroup, Side,
};
pub use subset::SubsetMask;
pub use table::{emit_table, parse_table, CayleyTable, TableError};
