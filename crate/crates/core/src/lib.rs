//! Exact arithmetic for element-type probabilities in finite classical groups.
//!
//! Everything here is computed over arbitrary-precision rationals: truncated
//! Laurent series in `q^{-1}`, bivariate series in `(u, q^{-1})`, polynomial
//! counts of irreducible polynomials, partition centralizer polynomials,
//! product-form transforms, cycle-index assembly for GL/U/Sp/O±, coefficient
//! stabilization scans, and a brute-force matrix-enumeration oracle over
//! small finite fields.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI, and file formats live in
//! the companion `cgprob` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod counts;
pub mod field;
pub mod genfun;
pub mod oracle;
pub mod partitions;
pub mod qpoly;
pub mod rational;
pub mod series;
pub mod stabilization;
pub mod transforms;

pub use counts::CharParity;
pub use genfun::{finite_prob, finite_prob_exact, limit_prob, orth_probs, parity_check};
pub use partitions::{GroupKind, LambdaSpec, Partition};
pub use qpoly::QPolynomial;
pub use rational::{Int, Rational};
pub use series::{BiSeries, LaurentSeries};
