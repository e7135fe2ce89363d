//! Exact symbolic Bergman projections of polynomial functions.
//!
//! Everything in this crate is computed in exact arithmetic over the
//! Gaussian rationals: sparse multivariate polynomials in complex
//! (`z`, `z̄`) or real coordinates, ellipsoids and Reinhardt domains,
//! the Fischer-map construction of the Bergman projection together with
//! its orthogonal-decomposition certificate, the polyharmonic analogue,
//! closed-form moment oracles for independent verification, and
//! transport of projections through polynomial biholomorphisms.
//!
//! The crate is `no_std` (allocation required). IO, JSON formats, and
//! the command-line front end live in the companion `bergman-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod domains;
mod error;
pub mod fischer;
pub mod linalg;
pub mod moments;
pub mod multiindex;
pub mod poly;
pub mod polyharmonic;
pub mod scalar;
pub mod transport;

pub use error::Error;
