//! Elements of `T̂⊗R` and `Der⊗R`, stored as finite sums `Σ ε^α x_α` over
//! the monomials of the coefficient ring.  Zero coefficients are never
//! stored, so structural equality is equality of elements.

use std::collections::BTreeMap;

use exactnum::Scalar;
use tensoralg::{Derivation, Tensor, TensorAlgebra, TensorError};

use crate::ring::{CoefficientRing, Monomial};

/// An element of `R ⊗ T̂Σ⁻¹V*` (truncated).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RTensor<F: Scalar> {
    terms: BTreeMap<Monomial, Tensor<F>>,
}

impl<F: Scalar> RTensor<F> {
    pub fn zero() -> Self {
        RTensor { terms: BTreeMap::new() }
    }

    pub fn term(m: Monomial, t: Tensor<F>) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &t, &F::one());
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Tensor<F>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Tensor<F> {
        self.terms.get(m).cloned().unwrap_or_else(Tensor::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c · ε^m t`.
    pub fn add_term(&mut self, m: Monomial, t: &Tensor<F>, c: &F) {
        if t.is_zero() || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Tensor::zero);
        entry.add_assign_scaled(t, c);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
        let mut out = self.clone();
        for (m, t) in &other.terms {
            out.add_term(m.clone(), t, c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::zero().add_scaled(self, c)
    }

    /// Product in `R ⊗ T` (the coefficients are even, so no signs).
    pub fn multiply(&self, other: &Self, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> Self {
        let mut out = Self::zero();
        for (a, s) in &self.terms {
            for (b, t) in &other.terms {
                if let Some(ab) = ring.multiply(a, b) {
                    out.add_term(ab, &alg.multiply(s, t), &F::one());
                }
            }
        }
        out
    }

    /// Apply a map of tensors coefficient-wise.
    pub fn map(&self, f: impl Fn(&Tensor<F>) -> Tensor<F>) -> Self {
        let mut out = Self::zero();
        for (m, t) in &self.terms {
            out.add_term(m.clone(), &f(t), &F::one());
        }
        out
    }
}

/// An element `Σ ε^α ξ_α` of `Der ⊗ R`, homogeneous of degree `h`.
/// Derivations with nonzero constant coefficient are allowed (an
/// `R`-linear structure `m + η` is one); elements of `Der ⊗ R₊` have none.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RDerivation<F: Scalar> {
    degree: i64,
    terms: BTreeMap<Monomial, Derivation<F>>,
}

impl<F: Scalar> RDerivation<F> {
    pub fn zero(degree: i64) -> Self {
        RDerivation { degree, terms: BTreeMap::new() }
    }

    /// `ε^m ξ`.
    pub fn term(m: Monomial, xi: Derivation<F>) -> Self {
        let mut out = Self::zero(xi.degree());
        out.add_term(m, &xi, &F::one()).expect("same degree");
        out
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Derivation<F>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Derivation<F>> {
        self.terms.get(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// No constant coefficient: the element lies in `Der ⊗ R₊`.
    pub fn is_nilpotent(&self) -> bool {
        self.terms.keys().all(|m| !m.is_constant())
    }

    /// Largest total degree of a monomial present.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// `self += c · ε^m ξ`.
    pub fn add_term(&mut self, m: Monomial, xi: &Derivation<F>, c: &F) -> Result<(), TensorError> {
        if xi.is_zero() || c.is_zero() {
            return Ok(());
        }
        if xi.degree() != self.degree {
            return Err(TensorError::DegreeMismatch { left: self.degree, right: xi.degree() });
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old.add_scaled(xi, c)?,
            None => xi.scale(c),
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
        Ok(())
    }

    pub fn add_scaled(&self, other: &Self, c: &F) -> Result<Self, TensorError> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        let mut out = if self.is_zero() { Self::zero(other.degree) } else { self.clone() };
        if other.degree != out.degree {
            return Err(TensorError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        for (m, xi) in &other.terms {
            out.add_term(m.clone(), xi, c)?;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self, TensorError> {
        self.add_scaled(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.add_scaled(other, &-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::zero(self.degree).add_scaled(self, c).expect("same degree")
    }

    /// The part with non-constant coefficients.
    pub fn ideal_part(&self) -> Self {
        RDerivation {
            degree: self.degree,
            terms: self.terms.iter().filter(|(m, _)| !m.is_constant()).map(|(m, x)| (m.clone(), x.clone())).collect(),
        }
    }

    /// Evaluation at the augmentation `R → k`.
    pub fn constant_part(&self, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> Derivation<F> {
        self.terms.get(&ring.one()).cloned().unwrap_or_else(|| Derivation::zero(alg, self.degree))
    }

    /// Apply by the `R`-linear Leibniz rule.
    pub fn apply(&self, t: &RTensor<F>, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> RTensor<F> {
        let mut out = RTensor::zero();
        for (b, xi) in &self.terms {
            for (a, x) in t.terms() {
                if let Some(ab) = ring.multiply(a, b) {
                    out.add_term(ab, &alg.apply(xi, x), &F::one());
                }
            }
        }
        out
    }

    /// The graded commutator, `[ε^α ξ, ε^β η] = ε^{α+β}[ξ,η]`.
    pub fn bracket(&self, other: &Self, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> Result<Self, TensorError> {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, xi) in &self.terms {
            for (b, eta) in &other.terms {
                if let Some(ab) = ring.multiply(a, b) {
                    out.add_term(ab, &alg.commutator(xi, eta)?, &F::one())?;
                }
            }
        }
        Ok(out)
    }

    /// Rebuild from images of the generators, given as an `R`-tensor each.
    pub fn from_images(alg: &TensorAlgebra<F>, degree: i64, images: &[RTensor<F>]) -> Result<Self, TensorError> {
        let mut per_monomial: BTreeMap<Monomial, Vec<Tensor<F>>> = BTreeMap::new();
        for (k, img) in images.iter().enumerate() {
            for (m, t) in img.terms() {
                per_monomial.entry(m.clone()).or_insert_with(|| vec![Tensor::zero(); alg.dim()])[k] = t.clone();
            }
        }
        let mut out = Self::zero(degree);
        for (m, imgs) in per_monomial {
            out.add_term(m, &Derivation::new(alg, degree, imgs)?, &F::one())?;
        }
        Ok(out)
    }

    /// Images of the generators as `R`-tensors.
    pub fn images(&self, alg: &TensorAlgebra<F>) -> Vec<RTensor<F>> {
        (0..alg.dim())
            .map(|k| {
                let mut t = RTensor::zero();
                for (m, xi) in &self.terms {
                    t.add_term(m.clone(), xi.image(k), &F::one());
                }
                t
            })
            .collect()
    }
}
