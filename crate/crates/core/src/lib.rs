//! Exact computation of MacPherson's local Euler obstruction for
//! hypersurface germs, together with the constructible-function,
//! Lagrangian-cycle and Behrend-function calculus built on it.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`); IO,
//! document formats and the command line live in the companion crate.

#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

pub mod behrend;
pub mod constructible;
pub mod error;
pub mod euler;
pub mod gcd;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linear;
pub mod nash;
pub mod poly;
pub mod sample;

pub use error::{Error, Result};
pub use groebner::Budget;
pub use ideal::Ideal;
pub use poly::{Context, MonomialOrder, Polynomial, Q};
