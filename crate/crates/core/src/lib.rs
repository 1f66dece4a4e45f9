//! Exact remainders of Laurent polynomials modulo `prod (x - a)`, expressed
//! as Schur-function determinants, and the generalized Giambelli identities
//! for Schur functions with integer (possibly negative) indices.
//!
//! All arithmetic is exact over the rationals. Identities in indeterminate
//! letters are checked at random rational specializations by [`verify`].

pub mod alphabet;
pub mod companion;
pub mod division;
pub mod error;
pub mod exact;
pub mod laurent;
pub mod parse;
pub mod schur;
pub mod verify;

pub use alphabet::{Alphabet, DiffArgument, Generator};
pub use error::{Error, Result};
pub use exact::{Matrix, Rational};
pub use laurent::LaurentPoly;
pub use schur::IndexVector;
