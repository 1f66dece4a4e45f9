//! Exact scalars and dense matrices over commutative rings.

mod matrix;
mod rational;

pub use matrix::{det_bareiss, det_cofactor, inverse, mat_mul, mat_pow_signed, Matrix, Ring};
pub use rational::{rat, Rational};
