//! Maurer–Cartan theory of (involutive, cyclic, cyclic involutive)
//! A∞-structures over truncated polynomial rings `R`.
//!
//! The governing Lie algebra is `g = Der_flavor(T̂≥1Σ⁻¹V*)` with the
//! differential `[m,-]`; deformations over `R` are Maurer–Cartan elements
//! of `g ⊗ R₊`, equivalences are the gauge action of `exp(g⁰ ⊗ R₊)`, which
//! is identified with the group of `R`-linear automorphisms reducing to
//! the identity.  Everything is computed exactly on the tensor algebra
//! truncated at the structure's weight `N` (a quotient by an ideal that
//! every derivation of weight `≥ 1` preserves).

pub mod element;
pub mod group;
pub mod mc;
pub mod moduli;
pub mod ring;

use ainfty::AInftyError;
use tensoralg::TensorError;
use thiserror::Error;

pub use element::{RDerivation, RTensor};
pub use group::RAutomorphism;
pub use mc::{DeformationContext, McVerdict, McWitness};
pub use moduli::{cocycle_basis, flavored_cochains, infinitesimal_moduli, Moduli};
pub use ring::{CoefficientRing, Monomial};

/// Errors of the deformation layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformError {
    #[error(transparent)]
    Structure(#[from] AInftyError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("coefficient ring: {0}")]
    Ring(String),
    #[error("the structure fails the {check} check required by the {flavor} flavor")]
    FailedCheck { check: &'static str, flavor: &'static str },
    #[error("element leaves the {flavor} subalgebra at coefficient {monomial}: {reason}")]
    FlavorViolation { flavor: &'static str, monomial: String, reason: String },
    #[error("element has a constant coefficient; only R₊ coefficients are nilpotent")]
    NotNilpotent,
    #[error("expected an element of degree {expected}, got {got}")]
    WrongDegree { expected: i64, got: i64 },
    #[error("not a Maurer–Cartan element: {0}")]
    NotMaurerCartan(McWitness),
    #[error("the reduction of the automorphism is not the identity on generator {generator}")]
    ReductionNotIdentity { generator: String },
    #[error("the field characteristic {0} is too small for the series involved")]
    SmallCharacteristic(u64),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("invalid argument: {0}")]
    Argument(String),
}
