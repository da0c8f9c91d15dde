//! The hat-maps `m̂ₙ : V^{⊗n} → V` of a structure.
//!
//! Transport convention: if `mₙ(w_k) = Σ c^k_a w_{a₁}⋯w_{aₙ}` then
//! `m̂ₙ(e_{a₁},…,e_{aₙ}) = (-1)^{Σᵢ (n-i)|e_{aᵢ}|} Σ_k c^k_a e_k`.
//! The sign is the Koszul sign of moving the `n-1` extra desuspension
//! symbols (degree −1, read left to right) past the arguments.

use std::collections::BTreeMap;

use exactnum::Scalar;
use graded::{parity_sign, InvolutiveGradedSpace};
use tensoralg::{Derivation, Tensor, TensorAlgebra, Word};

/// `(-1)^{Σᵢ (n-i)|e_{aᵢ}|}` for the argument tuple `args` (1-based `i`).
pub fn hat_sign(degrees: &[i64], args: &[u8]) -> i32 {
    let n = args.len() as i64;
    let eps: i64 = args.iter().enumerate().map(|(i, &a)| (n - 1 - i as i64) * degrees[a as usize]).sum();
    parity_sign(eps)
}

/// The nonzero values `m̂ₙ(e_{a₁},…,e_{aₙ})` of all hat-maps, keyed by the
/// argument tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatTable<F: Scalar> {
    dim: usize,
    degrees: Vec<i64>,
    values: BTreeMap<Word, Vec<(usize, F)>>,
}

impl<F: Scalar> HatTable<F> {
    pub fn from_derivation(base: &InvolutiveGradedSpace<F>, m: &Derivation<F>) -> Self {
        let degrees = base.degrees();
        let mut values: BTreeMap<Word, Vec<(usize, F)>> = BTreeMap::new();
        for (k, t) in m.images().iter().enumerate() {
            for (w, c) in t.terms() {
                let v = if hat_sign(&degrees, w) < 0 { -c.clone() } else { c.clone() };
                values.entry(w.clone()).or_default().push((k, v));
            }
        }
        HatTable { dim: base.dim(), degrees, values }
    }

    /// Build from explicit values `m̂(args) = Σ c_k e_k`.
    pub fn from_values(base: &InvolutiveGradedSpace<F>, entries: impl IntoIterator<Item = (Word, Vec<(usize, F)>)>) -> Self {
        let mut values: BTreeMap<Word, Vec<(usize, F)>> = BTreeMap::new();
        for (w, out) in entries {
            let slot = values.entry(w).or_default();
            for (k, c) in out {
                match slot.iter_mut().find(|(j, _)| *j == k) {
                    Some((_, x)) => *x += c,
                    None => slot.push((k, c)),
                }
            }
            slot.retain(|(_, c)| !c.is_zero());
            slot.sort_by_key(|(k, _)| *k);
        }
        values.retain(|_, v| !v.is_empty());
        HatTable { dim: base.dim(), degrees: base.degrees(), values }
    }

    /// The structure derivation with these hat-maps (inverse transport).
    pub fn to_images(&self, alg: &TensorAlgebra<F>) -> Vec<Tensor<F>> {
        let mut images = vec![Tensor::zero(); self.dim];
        for (w, out) in &self.values {
            if w.len() > alg.max_weight() {
                continue;
            }
            let s = hat_sign(&self.degrees, w);
            for (k, c) in out {
                images[*k].add_term(w.clone(), if s < 0 { -c.clone() } else { c.clone() });
            }
        }
        images
    }

    /// All nonzero values in increasing argument order.
    pub fn entries(&self) -> impl Iterator<Item = (&Word, &[(usize, F)])> {
        self.values.iter().map(|(w, v)| (w, v.as_slice()))
    }

    /// `m̂ₙ` on basis vectors, as a dense coordinate vector.
    pub fn apply_basis(&self, args: &[usize]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        let key = tensoralg::word(args);
        if let Some(v) = self.values.get(&key) {
            for (k, c) in v {
                out[*k] = c.clone();
            }
        }
        out
    }

    /// `m̂ₙ(x₁,…,xₙ)` for sparse arguments `xᵢ = Σ c e_j`, by multilinear
    /// expansion.
    pub fn apply_multilinear(&self, args: &[Vec<(usize, F)>]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        let mut idx = Vec::with_capacity(args.len());
        self.expand(args, &mut idx, F::one(), &mut out);
        out
    }

    fn expand(&self, args: &[Vec<(usize, F)>], idx: &mut Vec<usize>, coef: F, out: &mut [F]) {
        if idx.len() == args.len() {
            if let Some(v) = self.values.get(&tensoralg::word(idx)) {
                for (k, c) in v {
                    out[*k] += coef.clone() * c.clone();
                }
            }
            return;
        }
        for (j, c) in &args[idx.len()] {
            idx.push(*j);
            self.expand(args, idx, coef.clone() * c.clone(), out);
            idx.pop();
        }
    }
}
