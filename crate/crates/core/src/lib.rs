//! Exact realization of the induced module `W` of the degenerate affine
//! Hecke algebra inside the symmetric group algebra, the intertwiner `J`
//! computed by brute force, and the closed forms for its eigenvalues.
//!
//! Conventions used throughout:
//! * permutations compose as functions, `(s p)(k) = s(p(k))`;
//! * `u = z - w` is the single indeterminate of every rational function;
//! * the `x_p` action fixes `z = 0`, `w = -u` unless told otherwise.

pub mod arith;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod tableau;
pub mod repr;
pub mod points;
pub mod fusion;
pub mod intertwiner;
pub mod formulas;
pub mod verify;
pub mod algebra;

pub use arith::{Coeff, Poly, RatFunc, Rational};
pub use error::{Error, Result};
