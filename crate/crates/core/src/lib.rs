//! Twisted cohomology of simplicial complexes with rank-one local coefficients, Novikov
//! numbers, jump loci and cup-length lower bounds for closed one-forms.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod cocycle;
pub mod complex;
pub mod corpus;
pub mod cut;
pub mod error;
pub mod invariants;
pub mod novikov;

pub use error::{AlgebraError, Error, Result};
