//! Degenerations of the Racah system: Wilson by substitution, Hahn and
//! Jacobi by limits, Krawtchouk and Meixner directly.

pub mod hahn;
pub mod jacobi;
pub mod krawtchouk;
pub mod wilson;
