//! The element `ω` of `Σ⁻¹V* ⊗ Σ⁻¹V*` determined by the form, and the
//! subspace of cyclic derivations `{ξ : ξ(ω) = 0}`.
//!
//! A derivation satisfies the hat-map cyclic identity exactly when it kills
//! `ω = Σ_{a,b} ⟨e_a,e_b⟩ (-1)^{|e_a|} w_a ⊗ w_b`; both formulations are
//! implemented and cross-checked in tests.

use std::collections::HashMap;

use exactnum::{Echelon, Scalar, SparseVec};
use graded::{parity_sign, InvolutiveGradedSpace, Symmetry};
use tensoralg::{word, Derivation, DerivationBasis, Tensor, TensorAlgebra, Word};

use crate::AInftyError;

/// `ω = Σ Ω_ab w_a⊗w_b` with `Ω_ab = ⟨e_a,e_b⟩(-1)^{|e_a|}`, of degree
/// `d + 2` for a form of degree `d`.
pub fn omega<F: Scalar>(base: &InvolutiveGradedSpace<F>) -> Result<Tensor<F>, AInftyError> {
    let form = base.form().ok_or(AInftyError::MissingForm)?;
    if form.symmetry == Symmetry::Strict {
        return Err(AInftyError::StrictForm);
    }
    let n = base.dim();
    let mut t = Tensor::zero();
    for a in 0..n {
        for b in 0..n {
            let g = form.pair(a, b);
            if !g.is_zero() {
                let c = if parity_sign(base.degree(a)) < 0 { -g.clone() } else { g.clone() };
                t.add_term(word(&[a, b]), c);
            }
        }
    }
    Ok(t)
}

/// Whether `ξ(ω) = 0`, evaluated in the algebra truncated one weight above
/// the derivation's own truncation so that no component is cut off.
pub fn is_cyclic_derivation<F: Scalar>(alg: &TensorAlgebra<F>, om: &Tensor<F>, xi: &Derivation<F>) -> Result<bool, AInftyError> {
    let big = alg.with_max_weight(alg.max_weight() + 1)?;
    Ok(big.apply(&xi.retruncate(big.max_weight()), om).is_zero())
}

/// Coordinates (in the elementary basis of degree-`h`, weight-`n`
/// derivations) of a basis of the cyclic ones.
pub fn cyclic_subspace<F: Scalar>(
    alg: &TensorAlgebra<F>,
    base: &InvolutiveGradedSpace<F>,
    degree: i64,
    weight: usize,
) -> Result<(DerivationBasis, Vec<SparseVec<F>>), AInftyError> {
    let om = omega(base)?;
    if !base.form().expect("omega checked the form").is_nondegenerate() {
        return Err(AInftyError::DegenerateForm);
    }
    let basis = DerivationBasis::new(alg, degree, [weight]);
    let big = alg.with_max_weight(alg.max_weight().max(weight + 1))?;
    let mut rows: HashMap<Word, Vec<(usize, F)>> = HashMap::new();
    for (i, (k, w)) in basis.elements().iter().enumerate() {
        let xi = Derivation::elementary(&big, degree, *k, w.clone(), F::one())?;
        for (u, c) in big.apply(&xi, &om).terms() {
            rows.entry(u.clone()).or_default().push((i, c.clone()));
        }
    }
    let mut keys: Vec<&Word> = rows.keys().collect();
    keys.sort();
    let vecs: Vec<SparseVec<F>> = keys.iter().map(|k| SparseVec::from_pairs(rows[*k].clone())).collect();
    let ech = Echelon::from_vectors(basis.len(), &vecs);
    let kernel = ech.null_space();
    Ok((basis, kernel))
}

/// A basis of the cyclic derivations of degree `h` and weight `n`.
pub fn cyclic_derivation_basis<F: Scalar>(
    alg: &TensorAlgebra<F>,
    base: &InvolutiveGradedSpace<F>,
    degree: i64,
    weight: usize,
) -> Result<Vec<Derivation<F>>, AInftyError> {
    let (basis, kernel) = cyclic_subspace(alg, base, degree, weight)?;
    Ok(kernel.iter().map(|v| basis.derivation(alg, v)).collect())
}
