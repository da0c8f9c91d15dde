//! Coordinates on spaces of homogeneous derivations.

use std::collections::HashMap;

use exactnum::{Scalar, SparseVec};

use crate::algebra::TensorAlgebra;
use crate::derivation::Derivation;
use crate::tensor::{Tensor, Word};
use crate::TensorError;

/// The basis of degree-`h` derivations with components in a chosen set of
/// weights: elementary derivations `w_k ↦ word`, ordered by weight, then
/// generator, then word.
#[derive(Clone, Debug)]
pub struct DerivationBasis {
    degree: i64,
    max_weight: usize,
    elements: Vec<(usize, Word)>,
    index: HashMap<(usize, Word), usize>,
}

impl DerivationBasis {
    pub fn new<F: Scalar>(alg: &TensorAlgebra<F>, degree: i64, weights: impl IntoIterator<Item = usize>) -> Self {
        let mut elements = Vec::new();
        let mut ws: Vec<usize> = weights.into_iter().filter(|&n| n <= alg.max_weight()).collect();
        ws.sort_unstable();
        ws.dedup();
        for n in ws {
            let words = alg.words(n);
            for k in 0..alg.dim() {
                let target = alg.degree(k) + degree;
                for w in &words {
                    if alg.word_degree(w) == target {
                        elements.push((k, w.clone()));
                    }
                }
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        DerivationBasis { degree, max_weight: alg.max_weight(), elements, index }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[(usize, Word)] {
        &self.elements
    }

    /// Output weight of the `i`-th basis derivation.
    pub fn weight_of(&self, i: usize) -> usize {
        self.elements[i].1.len()
    }

    pub fn position(&self, k: usize, w: &Word) -> Option<usize> {
        self.index.get(&(k, w.clone())).copied()
    }

    /// The `i`-th basis derivation.
    pub fn element<F: Scalar>(&self, alg: &TensorAlgebra<F>, i: usize) -> Derivation<F> {
        let (k, w) = &self.elements[i];
        Derivation::elementary(alg, self.degree, *k, w.clone(), F::one()).expect("basis element is homogeneous")
    }

    /// Coordinates of `xi`; fails if `xi` has a component outside the basis.
    pub fn coordinates<F: Scalar>(&self, xi: &Derivation<F>) -> Result<SparseVec<F>, TensorError> {
        if xi.is_zero() {
            return Ok(SparseVec::new());
        }
        if xi.degree() != self.degree {
            return Err(TensorError::DegreeMismatch { left: xi.degree(), right: self.degree });
        }
        let mut pairs = Vec::new();
        for (k, t) in xi.images().iter().enumerate() {
            for (w, c) in t.terms() {
                let i = self.position(k, w).ok_or(TensorError::OutsideBasis { weight: w.len() })?;
                pairs.push((i, c.clone()));
            }
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    /// Coordinates, silently dropping components outside the basis (used
    /// to project onto a range of weights).
    pub fn coordinates_projected<F: Scalar>(&self, xi: &Derivation<F>) -> SparseVec<F> {
        let mut pairs = Vec::new();
        for (k, t) in xi.images().iter().enumerate() {
            for (w, c) in t.terms() {
                if let Some(i) = self.position(k, w) {
                    pairs.push((i, c.clone()));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// The derivation with the given coordinates.
    pub fn derivation<F: Scalar>(&self, alg: &TensorAlgebra<F>, v: &SparseVec<F>) -> Derivation<F> {
        debug_assert_eq!(alg.max_weight(), self.max_weight);
        let mut images = vec![Tensor::zero(); alg.dim()];
        for (i, c) in v.entries() {
            let (k, w) = &self.elements[*i];
            images[*k].add_term(w.clone(), c.clone());
        }
        Derivation::new(alg, self.degree, images).expect("basis combination is homogeneous")
    }
}
