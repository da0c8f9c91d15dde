//! `R`-linear automorphisms of the truncated tensor algebra reducing to the
//! identity, and their correspondence with degree-0 derivations:
//! `exp(y) = Σ yⁿ/n!`, `log φ = Σ (-1)^{n+1}/n (φ - id)ⁿ`.  The
//! Baker–Campbell–Hausdorff product is `x•y = log(exp x ∘ exp y)`, so the
//! group law `e^x e^y = e^{x•y}` holds by construction; the gauge group
//! acts on the left, `e^{y₁}·(e^{y₂}·ξ) = e^{y₁•y₂}·ξ`.

use exactnum::Scalar;
use tensoralg::{Tensor, TensorAlgebra};

use crate::element::{RDerivation, RTensor};
use crate::mc::{inverse_factorial, DeformationContext};
use crate::ring::CoefficientRing;
use crate::DeformError;

/// An `R`-linear algebra endomorphism, given by the images of the
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RAutomorphism<F: Scalar> {
    images: Vec<RTensor<F>>,
}

impl<F: Scalar> RAutomorphism<F> {
    pub fn identity(ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> Self {
        RAutomorphism { images: (0..alg.dim()).map(|k| RTensor::term(ring.one(), alg.generator(k))).collect() }
    }

    pub fn from_images(images: Vec<RTensor<F>>) -> Self {
        RAutomorphism { images }
    }

    pub fn images(&self) -> &[RTensor<F>] {
        &self.images
    }

    /// Apply to an `R`-tensor: every letter is replaced by its image.
    pub fn apply(&self, t: &RTensor<F>, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> RTensor<F> {
        let mut out = RTensor::zero();
        for (mono, x) in t.terms() {
            for (w, c) in x.terms() {
                let mut prod = RTensor::term(mono.clone(), Tensor::scalar(F::one()));
                for &a in w.iter() {
                    prod = prod.multiply(&self.images[a as usize], ring, alg);
                    if prod.is_zero() {
                        break;
                    }
                }
                out = out.add_scaled(&prod, c);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> Self {
        RAutomorphism { images: other.images.iter().map(|t| self.apply(t, ring, alg)).collect() }
    }

    /// The first generator (index) on which the reduction differs from the
    /// identity.
    pub fn reduction_defect(&self, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> Option<usize> {
        (0..alg.dim()).find(|&k| self.images[k].coefficient(&ring.one()) != alg.generator(k))
    }

    /// `φ(x*) = φ(x)*`, checked on generators (both sides are
    /// anti-automorphisms, so this suffices).
    pub fn commutes_with_involution(&self, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> bool {
        (0..alg.dim()).all(|k| {
            let lhs = self.apply(&RTensor::term(ring.one(), alg.star_generator(k)), ring, alg);
            lhs == self.images[k].map(|t| alg.star(t))
        })
    }

    /// `φ(ω) = ω` through weight `N`.
    pub fn preserves(&self, om: &Tensor<F>, ring: &CoefficientRing, alg: &TensorAlgebra<F>) -> bool {
        let om = RTensor::term(ring.one(), om.clone());
        self.apply(&om, ring, alg) == om
    }
}

impl<F: Scalar> DeformationContext<F> {
    fn require_gauge_element(&self, y: &RDerivation<F>) -> Result<(), DeformError> {
        if !y.is_zero() && y.degree() != 0 {
            return Err(DeformError::WrongDegree { expected: 0, got: y.degree() });
        }
        if !y.is_nilpotent() {
            return Err(DeformError::NotNilpotent);
        }
        Ok(())
    }

    /// `exp(y) = id + Σ_{n≥1} yⁿ/n!` for a degree-0 `y ∈ Der⊗R₊`.
    pub fn exp(&self, y: &RDerivation<F>) -> Result<RAutomorphism<F>, DeformError> {
        self.require_gauge_element(y)?;
        let (ring, alg) = (self.ring(), self.algebra());
        let mut images = Vec::with_capacity(alg.dim());
        for k in 0..alg.dim() {
            let mut term = RTensor::term(ring.one(), alg.generator(k));
            let mut sum = term.clone();
            let mut n = 1;
            loop {
                term = y.apply(&term, ring, alg);
                if term.is_zero() {
                    break;
                }
                sum = sum.add_scaled(&term, &inverse_factorial(n)?);
                n += 1;
            }
            images.push(sum);
        }
        Ok(RAutomorphism { images })
    }

    /// `log φ = Σ_{n≥1} (-1)^{n+1}/n (φ - id)ⁿ` on generators, for `φ`
    /// reducing to the identity.
    pub fn log(&self, phi: &RAutomorphism<F>) -> Result<RDerivation<F>, DeformError> {
        let (ring, alg) = (self.ring(), self.algebra());
        if phi.images.len() != alg.dim() {
            return Err(DeformError::Argument("automorphism has the wrong number of generator images".into()));
        }
        if let Some(k) = phi.reduction_defect(ring, alg) {
            return Err(DeformError::ReductionNotIdentity { generator: self.structure().word_label(&[k as u8]) });
        }
        let mut images = Vec::with_capacity(alg.dim());
        for k in 0..alg.dim() {
            let gen = RTensor::term(ring.one(), alg.generator(k));
            let mut x = phi.images[k].sub(&gen);
            let mut sum = RTensor::zero();
            let mut n: i64 = 1;
            while !x.is_zero() {
                let c = F::ratio(if n % 2 == 1 { 1 } else { -1 }, n).ok_or(DeformError::SmallCharacteristic(F::characteristic()))?;
                sum = sum.add_scaled(&x, &c);
                x = phi.apply(&x, ring, alg).sub(&x);
                n += 1;
            }
            images.push(sum);
        }
        Ok(RDerivation::from_images(alg, 0, &images)?)
    }

    /// `exp(y)⁻¹ = exp(-y)`.
    pub fn exp_inverse(&self, y: &RDerivation<F>) -> Result<RAutomorphism<F>, DeformError> {
        self.exp(&y.scale(&-F::one()))
    }

    /// `x•y = log(exp x ∘ exp y)`.
    pub fn bch(&self, x: &RDerivation<F>, y: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        let (ring, alg) = (self.ring(), self.algebra());
        let prod = self.exp(x)?.compose(&self.exp(y)?, ring, alg);
        self.log(&prod)
    }

    /// The closed form `x + y + ½[x,y] + 1/12([x,[x,y]] - [y,[x,y]])`, exact
    /// when products of four elements of `R₊` vanish.
    pub fn bch_closed_form(&self, x: &RDerivation<F>, y: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        self.require_gauge_element(x)?;
        self.require_gauge_element(y)?;
        if self.ring().nilpotency_order() > 4 {
            return Err(DeformError::Argument(format!(
                "the closed form stops at brackets of length 3; {} has nilpotency order {}",
                self.ring(),
                self.ring().nilpotency_order()
            )));
        }
        let small = |n, d| F::ratio(n, d).ok_or(DeformError::SmallCharacteristic(F::characteristic()));
        let xy = self.bracket(x, y)?;
        let xxy = self.bracket(x, &xy)?;
        let yxy = self.bracket(y, &xy)?;
        Ok(x.add(y)?.add_scaled(&xy, &small(1, 2)?)?.add_scaled(&xxy, &small(1, 12)?)?.add_scaled(&yxy, &small(-1, 12)?)?)
    }

    /// `φ ∘ D ∘ φ⁻¹` on generators, for an `R`-linear derivation `D`.
    pub fn conjugate(&self, phi: &RAutomorphism<F>, phi_inv: &RAutomorphism<F>, d: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        let (ring, alg) = (self.ring(), self.algebra());
        let images: Vec<RTensor<F>> = phi_inv.images.iter().map(|t| phi.apply(&d.apply(t, ring, alg), ring, alg)).collect();
        Ok(RDerivation::from_images(alg, d.degree(), &images)?)
    }

    /// The gauge action seen through automorphisms:
    /// `exp(y) ∘ (m + ξ) ∘ exp(-y) - m`.
    pub fn gauge_by_automorphism(&self, y: &RDerivation<F>, xi: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        let conj = self.conjugate(&self.exp(y)?, &self.exp_inverse(y)?, &self.deformed_structure(xi)?)?;
        Ok(conj.sub(self.m())?)
    }
}
