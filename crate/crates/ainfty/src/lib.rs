//! A∞-structures on a graded space `V`, stored as degree-one derivations
//! `m` of the truncated tensor algebra on `Σ⁻¹V*`, together with their
//! involutive and cyclic refinements, validation reports, import from
//! differential graded algebras, and morphism checks.

pub mod cyclic;
pub mod dga;
pub mod flavor;
pub mod hat;
pub mod morphism;
pub mod random;
pub mod report;
pub mod samples;
pub mod structure;

use graded::GradedError;
use tensoralg::TensorError;
use thiserror::Error;

pub use cyclic::{cyclic_derivation_basis, is_cyclic_derivation, omega};
pub use flavor::flavored_subspace;
pub use dga::{from_dga, from_hat, DgaTable, HatEntry};
pub use hat::HatTable;
pub use morphism::AInftyMorphism;
pub use report::{CheckReport, Verdict, Witness};
pub use structure::{AInftyStructure, Flags, Flavor};

/// Errors raised while building or checking structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AInftyError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("structure derivation must have degree 1, got {0}")]
    NotDegreeOne(i64),
    #[error("structure derivation has a nonzero weight-0 component")]
    WeightZeroComponent,
    #[error("a bilinear form on the base space is required")]
    MissingForm,
    #[error("the construction needs a graded-symmetric form, not a strictly symmetric one")]
    StrictForm,
    #[error("the bilinear form is degenerate")]
    DegenerateForm,
    #[error("schema error: {0}")]
    Schema(String),
    #[error("structures live in different truncations ({left} vs {right})")]
    TruncationMismatch { left: usize, right: usize },
    #[error("basis change is not invertible")]
    NotInvertible,
    #[error("basis change mixes degrees")]
    NotHomogeneous,
    #[error("the field has too small a characteristic for this construction")]
    SmallCharacteristic,
}
