//! The weight-truncated tensor algebra `T W / T_{>N} W` on an involutive
//! graded space of generators.

use exactnum::Scalar;
use graded::{parity_sign, reversal_sign, InvolutiveGradedSpace};

use crate::tensor::{Tensor, Word};
use crate::TensorError;

/// The tensor algebra on generators `W`, truncated above weight `N`:
/// products and derivation values of weight greater than `N` are dropped,
/// so every statement made here holds exactly modulo weight `≥ N+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorAlgebra<F: Scalar> {
    generators: InvolutiveGradedSpace<F>,
    max_weight: usize,
    degrees: Vec<i64>,
}

impl<F: Scalar> TensorAlgebra<F> {
    pub fn new(generators: InvolutiveGradedSpace<F>, max_weight: usize) -> Result<Self, TensorError> {
        if max_weight == 0 {
            return Err(TensorError::ZeroTruncation);
        }
        if generators.dim() > 255 {
            return Err(TensorError::TooManyGenerators(generators.dim()));
        }
        let degrees = generators.degrees();
        Ok(TensorAlgebra { generators, max_weight, degrees })
    }

    /// The tensor algebra on `Σ⁻¹V*`.
    pub fn on_desuspended_dual(v: &InvolutiveGradedSpace<F>, max_weight: usize) -> Result<Self, TensorError> {
        Self::new(graded::desuspended_dual(v), max_weight)
    }

    /// The same generators with another truncation weight.
    pub fn with_max_weight(&self, max_weight: usize) -> Result<Self, TensorError> {
        Self::new(self.generators.clone(), max_weight)
    }

    pub fn generators(&self) -> &InvolutiveGradedSpace<F> {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn degree(&self, a: usize) -> i64 {
        self.degrees[a]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn word_degree(&self, w: &[u8]) -> i64 {
        w.iter().map(|&a| self.degrees[a as usize]).sum()
    }

    /// All words of weight `n` in lexicographic order.
    pub fn words(&self, n: usize) -> Vec<Word> {
        let d = self.dim();
        if d == 0 {
            return if n == 0 { vec![Word::new()] } else { Vec::new() };
        }
        let count = d.pow(n as u32);
        (0..count)
            .map(|mut i| {
                let mut w: Word = smallvec::smallvec![0u8; n];
                for slot in w.iter_mut().rev() {
                    *slot = (i % d) as u8;
                    i /= d;
                }
                w
            })
            .collect()
    }

    /// All words of weight `n` and total degree `deg`.
    pub fn words_of_degree(&self, n: usize, deg: i64) -> Vec<Word> {
        self.words(n).into_iter().filter(|w| self.word_degree(w) == deg).collect()
    }

    /// The generator `w_a` as a tensor.
    pub fn generator(&self, a: usize) -> Tensor<F> {
        Tensor::word(crate::tensor::word(&[a]))
    }

    /// The involution applied to the generator `w_a`.
    pub fn star_generator(&self, a: usize) -> Tensor<F> {
        let j = self.generators.involution();
        Tensor::from_terms((0..self.dim()).filter(|&b| !j.get(b, a).is_zero()).map(|b| (crate::tensor::word(&[b]), j.get(b, a).clone())))
    }

    /// Tensor involution `(w_1…w_n)* = (-1)^ε w_n*…w_1*` extended linearly.
    pub fn star(&self, t: &Tensor<F>) -> Tensor<F> {
        let mut out = Tensor::zero();
        for (w, c) in t.terms() {
            let degs: Vec<i64> = w.iter().map(|&a| self.degrees[a as usize]).collect();
            let sign = F::from_i64(reversal_sign(&degs) as i64);
            let mut acc = Tensor::scalar(sign * c.clone());
            for &a in w.iter().rev() {
                acc = acc.multiply(&self.star_generator(a as usize), usize::MAX);
            }
            out.add_assign_scaled(&acc, &F::one());
        }
        out
    }

    /// Rotation `r(w_1…w_n) = ± w_n w_1 … w_{n-1}` on each nonempty word.
    pub fn rotate(&self, t: &Tensor<F>) -> Tensor<F> {
        let mut out = Tensor::zero();
        for (w, c) in t.terms() {
            if w.is_empty() {
                out.add_term(w.clone(), c.clone());
                continue;
            }
            let (rotated, s) = self.rotate_word(w);
            out.add_term(rotated, if s == 1 { c.clone() } else { -c.clone() });
        }
        out
    }

    /// Rotate a single nonempty word, returning the sign.
    pub fn rotate_word(&self, w: &[u8]) -> (Word, i32) {
        let n = w.len();
        let last = self.degrees[w[n - 1] as usize];
        let init: i64 = w[..n - 1].iter().map(|&a| self.degrees[a as usize]).sum();
        let mut out = Word::with_capacity(n);
        out.push(w[n - 1]);
        out.extend_from_slice(&w[..n - 1]);
        (out, parity_sign(last * init))
    }

    /// Product in the truncated algebra.
    pub fn multiply(&self, a: &Tensor<F>, b: &Tensor<F>) -> Tensor<F> {
        a.multiply(b, self.max_weight)
    }
}
