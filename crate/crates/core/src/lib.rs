//! Exact structure-constant engine for finite-dimensional algebraic quantum
//! hypergroups.
//!
//! A quantum hypergroup here is a finite-dimensional algebra given by
//! structure constants over the Gaussian rationals, together with a
//! coassociative comultiplication (not assumed multiplicative), a counit and
//! a faithful left integral. From that data the crate derives the antipode,
//! the right integral, the modular element, the modular automorphisms and the
//! scaling constant, builds the dual and the bidual, and verifies every
//! structural identity with exact arithmetic - there is no tolerance
//! parameter anywhere.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the command
//! line front-end live in the companion `qhg` crate.
//!
//! Module map:
//! - [`scalar`]: Gaussian rationals (pairs of arbitrary-precision fractions).
//! - [`linalg`]: dense exact vectors, matrices, tensor squares; fraction-free
//!   elimination, kernels, inverses, Kronecker products, exact PSD test.
//! - [`algebra`]: structure-constant algebras with optional `*`-involution.
//! - [`hypergroup`]: axiom verification and the derivation pipeline.
//! - [`dual`]: the dual hypergroup, pairing, module actions, biduality.
//! - [`group`]: finite groups from Cayley tables, subgroups, double cosets.
//! - [`constructions`]: double-coset hypergroups, group algebras, group-like
//!   projection compressions and the four-dimensional presentation fixture.
//! - [`checks`]: the named exact checks shared by the verifiers and reports.

#![cfg_attr(not(test), no_std)]
// Bases are indexed sets; loops over `0..n` with explicit indices mirror the
// tensor calculus and stay.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod algebra;
pub mod checks;
pub mod constructions;
pub mod dual;
pub mod group;
pub mod hypergroup;
pub mod linalg;
pub mod report;
pub mod scalar;

pub use algebra::StructureAlgebra;
pub use dual::DualPackage;
pub use group::FiniteGroup;
pub use hypergroup::{HypergroupData, QuantumHypergroup};
pub use linalg::{Matrix, Tensor2, Vector};
pub use report::{CheckRecord, CheckReport, CheckStatus};
pub use scalar::Scalar;
