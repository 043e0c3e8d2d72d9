//! A miniature computer-algebra workbench, exact everywhere.
//!
//! - [`poly`]: multivariate polynomials over Q under lex order
//! - [`groebner`]: Buchberger's algorithm, normal forms, reduced bases,
//!   elimination
//! - [`solve`]: certified isolation of real system solutions into boxes via
//!   Sturm counting and interval arithmetic
//! - [`permgroup`]: permutations, orbits, stabilizers, group order
//! - [`repl`]: the session language (Singular-style polynomial statements,
//!   GAP-style group statements) and the script runner
//!
//! All values are immutable after construction and safe to share across
//! threads; results are deterministic.

pub mod error;
pub mod groebner;
pub mod interval;
pub mod permgroup;
pub mod poly;
pub mod rational;
pub mod repl;
pub mod solve;
pub mod sturm;

pub use error::{Error, Result};
pub use rational::Rational;
