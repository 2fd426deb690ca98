//! Exact kinship calculus on the infinite complete binary tree.
//!
//! Every vertex of the tree is named by a word over `{L, R}` — the turns
//! taken on the path down from the root. Besides the usual parent (delete
//! the last letter) each vertex has a second, *distant* parent, obtained by
//! cancelling a generalized inverse letter instead. This crate implements
//! that calculus exactly, with no floating point anywhere:
//!
//! - [`string`] — canonical run-length words, children, the four parent
//!   operators (`left`/`right` and `close`/`distant`), reversal, and the
//!   length metrics;
//! - [`metrics`] — the dyadic order value that sorts vertices left to
//!   right, the breadth-first position, closed forms for both, and the
//!   alternating-lexicographic comparator;
//! - [`cf`] — the companion tree of continued fractions, its children and
//!   parent rules, the order-preserving bijection onto words, and the
//!   simplest-rational-in-an-interval solver;
//! - [`trees`] — Stern-Brocot and Calkin-Wilf value maps and level rows.
//!
//! All values are immutable and all operations are pure functions, so the
//! whole crate is safe for unrestricted concurrent use. The crate is
//! `no_std` (with `alloc`); IO, file formats and the command-line front end
//! live in the companion `lrtree-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cf;
pub mod dyadic;
pub mod error;
pub mod fraction;
pub mod metrics;
pub mod string;
pub mod trees;

pub use cf::{Boundary, CfParent, ContinuedFraction};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use metrics::ExtPosition;
pub use string::{GenString, Letter, Word};

pub use num_bigint::{BigInt, BigUint};
