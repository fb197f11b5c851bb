//! Exact-arithmetic computation of the minimal dimensions of the
//! classifying spaces for the families of finite and of virtually cyclic
//! subgroups, over a concrete zoo of virtually poly-Z and locally
//! virtually cyclic groups.
//!
//! The crate is organized in four layers:
//!
//! * [`matrix`], [`poly`], [`lattice`], [`abelian`] - exact integer linear
//!   algebra: Hermite and Smith normal forms, kernels, characteristic
//!   polynomials, cyclotomic factorization, fixed lattices and exterior
//!   powers. Everything is arbitrary precision; no floating point.
//! * [`group`] - the supported group zoo as a validated tagged union with
//!   structural invariants (virtual cohomological dimension, center rank).
//! * [`engine`] - the case dispatcher producing dimension reports with
//!   machine-checkable witnesses.
//! * [`cohomology`] - an independent verification layer: integral
//!   cohomology of `Z^n x| Z` mapping-torus groups through the Wang
//!   sequence, plus non-vanishing certificates for the maximal case.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so the whole API is safe to call concurrently.

pub mod abelian;
pub mod cohomology;
pub mod engine;
pub mod error;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod poly;
mod serde_impl;

#[doc(hidden)]
pub mod testsupport;

pub use abelian::AbelianGroup;
pub use cohomology::{CohomologyTable, MvCertificate, WangEntry};
pub use engine::{CaseTag, DimReport, DimValue, Witness, WitnessData};
pub use error::{Error, Result};
pub use group::{center_rank, validate_spec, vcd_of, GroupSpec, LocalKind, ValidationReport, Violation};
pub use lattice::Lattice;
pub use matrix::{Hnf, IntMatrix, MatrixOrder, Snf};
pub use poly::{cyclotomic_poly, CyclotomicFactorization, IntPoly};
