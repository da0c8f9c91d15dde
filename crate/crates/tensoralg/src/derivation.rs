//! Graded derivations of the truncated tensor algebra.
//!
//! A derivation of degree `h` is determined by its values on generators;
//! on words it acts by the graded Leibniz rule
//! `ξ(xy) = ξ(x) y + (-1)^{h|x|} x ξ(y)`.  Its weight-`n` component `ξ_n`
//! sends each generator to words of weight `n`.

use exactnum::Scalar;

use crate::algebra::TensorAlgebra;
use crate::tensor::{Tensor, Word};
use crate::TensorError;

/// A homogeneous derivation of degree `h`, stored by its images of the
/// generators (each a sum of words of weight `0..=N`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation<F: Scalar> {
    degree: i64,
    max_weight: usize,
    images: Vec<Tensor<F>>,
}

impl<F: Scalar> Derivation<F> {
    /// Validate and build: one image per generator, words of weight at most
    /// `N`, each image homogeneous of degree `|w_k| + h`.
    pub fn new(alg: &TensorAlgebra<F>, degree: i64, images: Vec<Tensor<F>>) -> Result<Self, TensorError> {
        if images.len() != alg.dim() {
            return Err(TensorError::ImageCount { expected: alg.dim(), got: images.len() });
        }
        for (k, t) in images.iter().enumerate() {
            for (w, _) in t.terms() {
                if w.len() > alg.max_weight() {
                    return Err(TensorError::WeightTooLarge { weight: w.len(), max: alg.max_weight() });
                }
                if w.iter().any(|&a| a as usize >= alg.dim()) {
                    return Err(TensorError::UnknownGenerator);
                }
                let d = alg.word_degree(w) - alg.degree(k);
                if d != degree {
                    return Err(TensorError::NotHomogeneous { generator: k, weight: w.len(), expected: degree, got: d });
                }
            }
        }
        Ok(Derivation { degree, max_weight: alg.max_weight(), images })
    }

    pub fn zero(alg: &TensorAlgebra<F>, degree: i64) -> Self {
        Derivation { degree, max_weight: alg.max_weight(), images: vec![Tensor::zero(); alg.dim()] }
    }

    /// `w_k ↦ c · word`, for basis enumeration.
    pub fn elementary(alg: &TensorAlgebra<F>, degree: i64, k: usize, w: Word, c: F) -> Result<Self, TensorError> {
        let mut images = vec![Tensor::zero(); alg.dim()];
        images[k] = Tensor::term(w, c);
        Self::new(alg, degree, images)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn image(&self, k: usize) -> &Tensor<F> {
        &self.images[k]
    }

    pub fn images(&self) -> &[Tensor<F>] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|t| t.is_zero())
    }

    /// Weights `n` for which the component `ξ_n` is nonzero.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.images.iter().flat_map(|t| t.weights()).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// The weight-`n` component `ξ_n`.
    pub fn component(&self, n: usize) -> Self {
        self.map_images(|t| t.weight_part(n))
    }

    /// The part of weight at least `n`.
    pub fn at_least(&self, n: usize) -> Self {
        self.map_images(|t| t.at_least(n))
    }

    fn map_images(&self, f: impl Fn(&Tensor<F>) -> Tensor<F>) -> Self {
        Derivation { degree: self.degree, max_weight: self.max_weight, images: self.images.iter().map(f).collect() }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), TensorError> {
        if self.max_weight != other.max_weight || self.images.len() != other.images.len() {
            return Err(TensorError::TruncationMismatch { left: self.max_weight, right: other.max_weight });
        }
        Ok(())
    }

    /// `self + c·other`; both must have the same degree unless one of them
    /// vanishes.
    pub fn add_scaled(&self, other: &Self, c: &F) -> Result<Self, TensorError> {
        self.check_compatible(other)?;
        if other.is_zero() || c.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.scale(c));
        }
        if self.degree != other.degree {
            return Err(TensorError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut images = self.images.clone();
        for (t, o) in images.iter_mut().zip(&other.images) {
            t.add_assign_scaled(o, c);
        }
        Ok(Derivation { degree: self.degree, max_weight: self.max_weight, images })
    }

    pub fn add(&self, other: &Self) -> Result<Self, TensorError> {
        self.add_scaled(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.add_scaled(other, &(-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map_images(|t| t.scale(c))
    }

    /// Drop output words above weight `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Derivation {
            degree: self.degree,
            max_weight: n.min(self.max_weight),
            images: self.images.iter().map(|t| t.truncate(n)).collect(),
        }
    }

    /// The same derivation viewed in a tensor algebra with a different
    /// truncation (higher components are dropped when truncating down).
    pub fn retruncate(&self, max_weight: usize) -> Self {
        Derivation {
            degree: self.degree,
            max_weight,
            images: self.images.iter().map(|t| t.truncate(max_weight)).collect(),
        }
    }
}

impl<F: Scalar> TensorAlgebra<F> {
    fn check(&self, xi: &Derivation<F>) -> Result<(), TensorError> {
        if xi.max_weight != self.max_weight() || xi.images.len() != self.dim() {
            return Err(TensorError::TruncationMismatch { left: xi.max_weight, right: self.max_weight() });
        }
        Ok(())
    }

    /// Apply a derivation to a tensor by the graded Leibniz rule, inserting
    /// `ξ(w_a)` at each position with sign `(-1)^{h · |prefix|}` and
    /// dropping words of weight above `N`.
    pub fn apply(&self, xi: &Derivation<F>, t: &Tensor<F>) -> Tensor<F> {
        let n_max = self.max_weight();
        let odd = xi.degree.rem_euclid(2) == 1;
        let mut out = Tensor::zero();
        for (w, c) in t.terms() {
            let mut prefix_deg = 0i64;
            for (p, &a) in w.iter().enumerate() {
                let img = &xi.images[a as usize];
                if !img.is_zero() {
                    let negate = odd && prefix_deg.rem_euclid(2) == 1;
                    for (u, x) in img.terms() {
                        let len = w.len() - 1 + u.len();
                        if len > n_max {
                            continue;
                        }
                        let mut nw = Word::with_capacity(len);
                        nw.extend_from_slice(&w[..p]);
                        nw.extend_from_slice(u);
                        nw.extend_from_slice(&w[p + 1..]);
                        let coef = x.clone() * c.clone();
                        out.add_term(nw, if negate { -coef } else { coef });
                    }
                }
                prefix_deg += self.degree(a as usize);
            }
        }
        out
    }

    /// The graded commutator `[ξ,η] = ξ∘η - (-1)^{|ξ||η|} η∘ξ`, computed on
    /// generators.
    pub fn commutator(&self, xi: &Derivation<F>, eta: &Derivation<F>) -> Result<Derivation<F>, TensorError> {
        self.check(xi)?;
        self.check(eta)?;
        let sign = F::sign(xi.degree * eta.degree);
        let images = (0..self.dim())
            .map(|k| {
                let mut t = self.apply(xi, &eta.images[k]);
                t.add_assign_scaled(&self.apply(eta, &xi.images[k]), &(-sign.clone()));
                t
            })
            .collect();
        Ok(Derivation { degree: xi.degree + eta.degree, max_weight: self.max_weight(), images })
    }

    /// `ξ∘ξ` on generators; for odd `ξ` this is half of `[ξ,ξ]`.
    pub fn square(&self, xi: &Derivation<F>) -> Result<Vec<Tensor<F>>, TensorError> {
        self.check(xi)?;
        Ok(xi.images.iter().map(|t| self.apply(xi, t)).collect())
    }

    /// The involution on derivations, `ξ*(x) = ξ(x*)*`.
    pub fn derivation_involution(&self, xi: &Derivation<F>) -> Result<Derivation<F>, TensorError> {
        self.check(xi)?;
        let images = (0..self.dim())
            .map(|k| self.star(&self.apply(xi, &self.star_generator(k))))
            .collect();
        Ok(Derivation { degree: xi.degree, max_weight: self.max_weight(), images })
    }

    /// `ξ = ξ⁺ + ξ⁻` with `ξ^± = (ξ ± ξ*)/2`.
    pub fn plus_minus_split(&self, xi: &Derivation<F>) -> Result<(Derivation<F>, Derivation<F>), TensorError> {
        let half = F::ratio(1, 2).ok_or(TensorError::CharacteristicTwo)?;
        let star = self.derivation_involution(xi)?;
        let plus = xi.add(&star)?.scale(&half);
        let minus = xi.sub(&star)?.scale(&half);
        Ok((plus, minus))
    }
}
