//! Exact length and depth of real algebraic groups.
//!
//! The length l(G) and depth λ(G) of a connected real algebraic group are the
//! longest and shortest lengths of unrefinable chains of connected subgroups
//! from G down to the trivial group. This crate evaluates both, produces chain
//! certificates that can be re-verified edge by edge, and ships a brute-force
//! search over a catalog of maximal connected subgroups as a cross-check.

pub mod rootdata;
pub mod realforms;
pub mod length;
pub mod depth;
pub mod catalog;
pub mod chain;
pub mod oracle;
pub mod tables;
pub mod cli;

pub use realforms::{parse, parse_simple, RealForm, RealFormError, ReductiveDescriptor};
pub use rootdata::{Family, SimpleRootSystem};
