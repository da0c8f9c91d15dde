//! Cochain complexes attached to an A∞-structure and their cohomology:
//! Hochschild (with its involutive eigen-summands), cyclic, dihedral and
//! skew-dihedral, and the complex of cyclic derivations, all truncated at a
//! weight `N`.  Also the chain isomorphism between cyclic cochains and
//! cyclic derivations and the bracket it transports.
//!
//! Truncating at weight `N` is the quotient by the subcomplex of weights
//! above `N` (the differential never lowers weight), so every dimension
//! reported is exact for that quotient; a per-degree probe at `N + 1`
//! says whether the answer has settled.

pub mod blocks;
pub mod complex;
pub mod cyclic;
pub mod derivations;
pub mod iso;
pub mod theory;

use ainfty::AInftyError;
use tensoralg::TensorError;
use thiserror::Error;

pub use complex::{filtration_piece, CochainComplex, CochainSpace, CohomologyRow, CohomologyTable, Stability};
pub use cyclic::{cyclic_complex, dihedral_complexes};
pub use derivations::{cyclic_derivation_complexes, hochschild_complex, hochschild_pm_complexes};
pub use iso::{cc_bracket, cc_der_isomorphism, f_map, DegreeLine, IsoReport, SignedPartLine, WeightLine};
pub use blocks::Part;
pub use theory::{build, cohomology_dims, Theory};

/// Errors raised while assembling complexes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomError {
    #[error(transparent)]
    Structure(#[from] AInftyError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("m∘m does not vanish through weight {through}; the truncated complex would not square to zero (lower the truncation or extend the structure)")]
    NotSquareZero { through: usize },
    #[error("the structure fails the {check} check required for this complex")]
    FailedCheck { check: &'static str },
    #[error("the bilinear form is degenerate; radical vector ({})", radical.join(", "))]
    DegenerateForm { radical: Vec<String> },
    #[error("the form is not invariant under the involution")]
    FormNotInvariant,
    #[error("d∘d is nonzero from degree {degree}")]
    DifferentialSquare { degree: i64 },
    #[error("the induced differential does not kill the relation {relation} in degree {degree}")]
    IllDefined { degree: i64, relation: String },
    #[error("image of {what} leaves the subspace at weight {weight}")]
    LeavesSubspace { what: String, weight: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
}
