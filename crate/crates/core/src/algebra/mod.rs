//! Symbolic coefficients, multivariate difference operators and the
//! polynomial tools used to test them.

mod expr;
mod multipoly;
mod operator;
mod sample;

pub use expr::{product, sum, Env, Expr, Leaf, LimitEval, Node, Signature};
pub use multipoly::{interpolate_tensor, MultiPoly, PartialDiffOperator};
pub use operator::{is_zero_expr, is_zero_operator, shifted, zero_witness, DiffOperator, Shift, ZeroWitness};
pub use sample::{Sampler, SAMPLE_BOUND};
