//! Automorphism groups and conjugating sets of rational maps on the projective line, over the
//! rationals and over finite fields.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod field;
pub mod group;
pub mod poly;
pub mod projline;
pub mod qq;
pub mod solver;

pub use error::{Error, Result};
