//! Graded vector spaces with involutions and bilinear forms, suspension and
//! dualisation, and the Koszul sign engine shared by every other crate.
//!
//! Degrees are cohomological: the suspension `Σ` lowers degrees by one, so
//! `Σk` is concentrated in degree `-1`.

pub mod random;
pub mod signs;
pub mod space;
pub mod tensor_power;

use thiserror::Error;

pub use signs::{koszul, parity_sign, reversal_sign, rotation_sign, Sign};
pub use space::{BasisElement, BilinearForm, GradedSpace, InvolutiveGradedSpace, Symmetry};
pub use tensor_power::{
    apply_rotation, apply_tensor_involution, desuspended_dual, rotate_word, rotation_matrix, tensor_involution,
    word_at, word_count, word_degree, word_index,
};

/// Errors raised when building graded objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("{what} has shape {rows}x{cols}, expected {expected}x{expected}")]
    Shape { what: &'static str, expected: usize, rows: usize, cols: usize },
    #[error("involution mixes degrees: entry ({row}, {col}) is nonzero")]
    InvolutionNotHomogeneous { row: String, col: String },
    #[error("involution does not square to the identity")]
    NotAnInvolution,
    #[error("form pairs `{left}` with `{right}` but a degree-{degree} form only pairs degrees summing to {}", -degree)]
    FormNotHomogeneous { left: String, right: String, degree: i64 },
    #[error("form is not symmetric on (`{left}`, `{right}`)")]
    FormNotSymmetric { left: String, right: String },
    #[error("rotation of the empty word")]
    EmptyWord,
}
