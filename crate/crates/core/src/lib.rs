//! Exact-arithmetic construction of theta-Lau products of finite-dimensional
//! associative algebras, with derivation-space solvers and a verification
//! harness for the characterization results that describe those spaces.
//!
//! All computation happens over arbitrary-precision rationals; subspaces are
//! canonicalized by reduced row echelon form, so every comparison in the crate
//! is exact with zero tolerance.

pub mod algebra;
pub mod lau;
pub mod linalg;
pub mod sampling;
pub mod scalar;
pub mod solver;
pub mod theorems;
pub mod zoo;

pub use algebra::{Algebra, Character, Element};
pub use lau::LauContext;
pub use linalg::{AffineSet, Matrix, Subspace};
pub use scalar::Scalar;
pub use solver::{LinearMap, MapSpace};
