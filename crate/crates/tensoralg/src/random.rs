//! Random derivations for property tests and randomized validation.

use exactnum::{Scalar, SparseVec};
use rand::Rng;

use crate::algebra::TensorAlgebra;
use crate::basis::DerivationBasis;
use crate::derivation::Derivation;

/// A random degree-`h` derivation with components in `weights`, each basis
/// coefficient nonzero with probability `density` and drawn from `-3..=3`.
pub fn random_derivation<F: Scalar, R: Rng>(
    rng: &mut R,
    alg: &TensorAlgebra<F>,
    degree: i64,
    weights: impl IntoIterator<Item = usize>,
    density: f64,
) -> Derivation<F> {
    let basis = DerivationBasis::new(alg, degree, weights);
    let mut pairs = Vec::new();
    for i in 0..basis.len() {
        if rng.gen_bool(density) {
            pairs.push((i, F::from_i64(rng.gen_range(-3..=3))));
        }
    }
    let coords = SparseVec::from_pairs(pairs);
    basis.derivation(alg, &coords)
}
