//! Numerical semigroup invariants centred on the reduced type.
//!
//! A numerical semigroup `H` is an additively closed subset of the
//! non-negative integers that contains 0 and has finite complement. Besides
//! the classical invariants (conductor, genus, Apéry sets, pseudo-Frobenius
//! numbers, type) this crate computes the *reduced type*
//! `s(H) = |[c - e, c - 1] \ H|` and the predicates built around it:
//! maximal/minimal reduced type, almost Gorenstein, pseudo-symmetric,
//! far-flung Gorenstein, and finiteness of the maximal Cohen-Macaulay and
//! reflexive module categories of `k[[H]]`.
//!
//! The [`construct`] module provides gluings and duals, [`rohrbach`] the
//! Rohrbach numbers used in multiplicity bounds, and [`enumerate`] / [`suites`]
//! an exhaustive genus-bounded sweep that checks every implication the
//! library relies on.

pub mod classify;
pub mod construct;
pub mod enumerate;
mod error;
pub mod par;
pub mod rohrbach;
pub mod semigroup;
pub mod suites;
pub mod valuation;

pub use classify::{classify, InvariantReport, RefFiniteness};
pub use construct::{dual, glue, GluingSpec};
pub use enumerate::{enumerate_by_genus, Execution};
pub use error::{Error, Result};
pub use rohrbach::{n_of_set, rohrbach_number, RohrbachWitness};
pub use semigroup::{build_semigroup, NumericalSemigroup};
pub use suites::{probe_open_questions, run_suite, SweepResult, SUITES};
pub use valuation::{length_between, ValuationSet};
