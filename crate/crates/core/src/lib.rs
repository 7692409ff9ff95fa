#![no_std]

extern crate alloc;

pub mod algebra;
pub mod dual;
pub mod error;
pub mod hyper;
pub mod limits;
pub mod racah;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};
