//! Exact computational commutative algebra over `Q` and `F_p`.
//!
//! The crate computes reduced Gröbner bases, Hilbert functions, dimensions
//! and degrees of homogeneous ideals, evaluates global bounds on Hilbert
//! functions, constructs regular sequences of controlled degree and searches
//! for Nullstellensatz certificates `g = a_1 f_1 + ... + a_s f_s` by exact
//! linear algebra.
//!
//! Everything here is `no_std` with `alloc` and performs no IO. File
//! handling, the command-line front end and JSON reports live in the
//! `hilbound` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod macaulay;
pub mod monomial;
pub mod nullstellensatz;
pub mod parse;
pub mod poly;
pub mod random;
pub mod regseq;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::Polynomial;
pub use ring::{MonomialOrder, Ring};
pub use scalar::{Coeff, Field};
