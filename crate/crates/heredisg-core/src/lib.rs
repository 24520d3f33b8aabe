//! Exact computational engine for the representation theory of hereditary
//! path algebras over a prime field.
//!
//! The crate computes Hom/Ext spaces, Auslander-Reiten translates, stable
//! categories presented as finite linear categories, repetitive-category
//! windows, and the shifted-module calculus of the bounded derived category.
//! All arithmetic is exact over `F_p` and every randomized routine takes an
//! explicit seed, so results are reproducible bit for bit.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `heredisg` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ar;
pub mod derived;
mod error;
pub mod fincat;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod repetitive;
pub mod samples;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
