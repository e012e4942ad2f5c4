//! Exact invariants of rational cuspidal plane curves.
//!
//! - [`exactpoly`]: integer polynomials and truncated power series.
//! - [`singularity`]: Newton pairs, splice data, multiplicity sequences, semigroups.
//! - [`distribution`]: the curve pipeline computing `Δ`, `N(t)`, `D(t)`, `R(t)` and reports.
//! - [`families`]: closed-form constructors for the classified curve families.
//! - [`criteria`]: semicontinuity, the Orevkov inequality, positive distribution and the one-pair search.
//! - [`cli`]: argument parsing and rendering behind the `cuspidal` binary.

pub mod cli;
pub mod criteria;
pub mod distribution;
pub mod error;
pub mod exactpoly;
pub mod families;
pub mod singularity;

pub use error::{Error, Result};
