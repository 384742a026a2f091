//! Deterministic search for r-power divisors.
//!
//! Given N >= 2 and r >= 1, finds every integer p >= 2 with p^r | N. The
//! search brute-forces a short head segment and then sweeps dyadic ranges
//! of candidate divisors with a lattice-based interval search: each
//! window [P-H, P+H] is reduced to finding the integer roots of a single
//! small-coefficient polynomial produced by exact LLL reduction.
//!
//! All arithmetic is exact (GMP integers); no floating point enters any
//! decision. Every real-valued inequality from the underlying analysis is
//! checked in power-cleared integer form.
//!
//! Modules:
//! - [`poly`]: big-integer and dense integer-polynomial arithmetic
//! - [`lattice`]: all-integer LLL reduction with verification
//! - [`coppersmith`]: single-interval divisor search
//! - [`rootfind`]: deterministic integer root finding and polynomial GCD
//! - [`scheduler`]: head + dyadic-range orchestration
//! - [`oracle`]: independent brute-force references for tests and checks
//! - [`instances`]: deterministic worst-shape benchmark instances

pub mod coppersmith;
pub mod error;
pub mod instances;
pub mod lattice;
pub mod oracle;
pub mod poly;
pub mod rootfind;
pub mod scheduler;

pub use error::{Error, Result};
