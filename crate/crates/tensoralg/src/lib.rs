//! The weight-truncated tensor algebra on `W = Σ⁻¹V*`, its graded
//! derivations with the commutator bracket and the involution
//! `ξ*(x) = ξ(x*)*`, and cyclic/dihedral coinvariants of tensor powers.

pub mod algebra;
pub mod basis;
pub mod coinvariants;
pub mod derivation;
pub mod random;
pub mod tensor;

use thiserror::Error;

pub use algebra::TensorAlgebra;
pub use basis::DerivationBasis;
pub use coinvariants::{cyclic_class, CoinvariantSpace, Group};
pub use derivation::Derivation;
pub use tensor::{word, Tensor, Word};

/// Errors raised by tensor-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("truncation weight must be at least 1")]
    ZeroTruncation,
    #[error("at most 255 generators are supported, got {0}")]
    TooManyGenerators(usize),
    #[error("expected one image per generator ({expected}), got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("word of weight {weight} exceeds the truncation weight {max}")]
    WeightTooLarge { weight: usize, max: usize },
    #[error("word refers to an unknown generator")]
    UnknownGenerator,
    #[error("image of generator {generator} has a weight-{weight} term of degree shift {got}, expected {expected}")]
    NotHomogeneous { generator: usize, weight: usize, expected: i64, got: i64 },
    #[error("derivations live in different truncations ({left} vs {right})")]
    TruncationMismatch { left: usize, right: usize },
    #[error("derivation degrees differ ({left} vs {right})")]
    DegreeMismatch { left: i64, right: i64 },
    #[error("component of weight {weight} lies outside the chosen basis")]
    OutsideBasis { weight: usize },
    #[error("division by two is impossible in characteristic two")]
    CharacteristicTwo,
}
