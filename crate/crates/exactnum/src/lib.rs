//! Exact arithmetic substrate: scalar fields (arbitrary-precision rationals,
//! and prime fields for exhaustive enumeration in tests) together with the
//! exact linear algebra used for every dimension count.
//!
//! All values are immutable once built and every operation is a pure
//! function, so independent computations may run in parallel freely.

pub mod matrix;
pub mod scalar;
pub mod sparse;

pub use matrix::{kernel_basis, quotient_dim, rank, Matrix, ShapeError, SparseMatrix};
pub use scalar::{Fp, ParseScalarError, Scalar, Q};
pub use sparse::{Echelon, SparseVec};
