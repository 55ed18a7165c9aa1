//! Bit-packed Boolean functions and the machinery to build and certify
//! bent and highly nonlinear resilient functions.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`); file
//! formats, JSON and the command-line tool live in `bentkit-tools`.
//!
//! Variable convention: a function of `n` variables stores `f(x)` at table
//! index `i = sum_j x_j * 2^(n-j)`, so `x_n` varies fastest and `x_1` is the
//! most significant index bit. Walsh coefficients, ANF coefficients and the
//! vectors passed to [`BooleanFunction::translate`] use the same encoding.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod anf;
pub mod constructions;
pub mod corpus;
mod error;
pub mod function;
pub mod galois;
pub mod oracle;
pub mod walsh;

pub use analysis::AnalysisProfile;
pub use anf::AnfPolynomial;
pub use error::{Error, Result};
pub use function::{BooleanFunction, Combine};
pub use walsh::{walsh_transform, WalshSpectrum};

/// Largest supported variable count (2^26-bit tables, 8 MiB).
pub const MAX_VARS: u32 = 26;

#[inline]
pub(crate) fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}
