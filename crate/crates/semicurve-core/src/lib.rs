//! Numerical semigroups, Feng–Rao order bounds, Weierstrass obstructions and
//! deformations of monomial curves, computed in exact arithmetic.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod curve;
pub mod deform;
mod error;
pub mod ffscan;
pub mod linalg;
pub mod obstruction;
pub mod order_bound;
pub mod poly;
pub mod semigroup;
pub mod t1;

pub use error::{Error, Result};
pub use semigroup::{NumericalSemigroup, SemigroupProfile};
