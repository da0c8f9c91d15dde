//! Tensor powers `W^{⊗n}` of an involutive graded space in the canonical
//! word basis, and the signed actions of rotation and the tensor involution.
//!
//! Words `(a_1, …, a_n)` of basis indices are ordered lexicographically;
//! word `a` has index `Σ a_i · dim^{n-i}`.

use exactnum::{Matrix, Scalar};

use crate::signs::{reversal_sign, rotation_sign, Sign};
use crate::space::InvolutiveGradedSpace;

/// Number of words of length `n` over an alphabet of size `dim`.
pub fn word_count(dim: usize, n: usize) -> usize {
    dim.pow(n as u32)
}

/// Index of a word in the lexicographic basis of `W^{⊗n}`.
pub fn word_index(dim: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &a| acc * dim + a)
}

/// Inverse of [`word_index`].
pub fn word_at(dim: usize, n: usize, mut index: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for slot in w.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    w
}

/// Total degree of a word.
pub fn word_degree<F: Scalar>(space: &InvolutiveGradedSpace<F>, word: &[usize]) -> i64 {
    word.iter().map(|&a| space.degree(a)).sum()
}

/// Move the last letter to the front: `r(w_1…w_n) = ± w_n w_1 … w_{n-1}`.
pub fn rotate_word<F: Scalar>(space: &InvolutiveGradedSpace<F>, word: &[usize]) -> (Vec<usize>, Sign) {
    let degs: Vec<i64> = word.iter().map(|&a| space.degree(a)).collect();
    let s = rotation_sign(&degs).expect("rotation of a nonempty word");
    let mut out = Vec::with_capacity(word.len());
    out.push(word[word.len() - 1]);
    out.extend_from_slice(&word[..word.len() - 1]);
    (out, s)
}

/// Apply the rotation `r` to a dense vector in `W^{⊗n}`.
pub fn apply_rotation<F: Scalar>(space: &InvolutiveGradedSpace<F>, n: usize, v: &[F]) -> Vec<F> {
    let dim = space.dim();
    let mut out = vec![F::zero(); v.len()];
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (w, s) = rotate_word(space, &word_at(dim, n, i));
        out[word_index(dim, &w)] = if s == 1 { x.clone() } else { -x.clone() };
    }
    out
}

/// Apply the tensor involution
/// `(w_1⊗…⊗w_n)* = (-1)^ε w_n*⊗…⊗w_1*`, `ε = Σ_{i<j}|w_i||w_j|`,
/// to a dense vector in `W^{⊗n}`.  Implemented factor by factor, so the
/// cost is `O(n · dim^{n+1})`.
pub fn apply_tensor_involution<F: Scalar>(space: &InvolutiveGradedSpace<F>, n: usize, v: &[F]) -> Vec<F> {
    let dim = space.dim();
    let j = space.involution();
    let mut cur = v.to_vec();
    let stride_of = |p: usize| dim.pow((n - 1 - p) as u32);
    for p in 0..n {
        let stride = stride_of(p);
        let mut next = vec![F::zero(); cur.len()];
        for (i, x) in cur.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let a = (i / stride) % dim;
            let base = i - a * stride;
            for b in 0..dim {
                let c = j.get(b, a);
                if !c.is_zero() {
                    next[base + b * stride] += c.clone() * x.clone();
                }
            }
        }
        cur = next;
    }
    let mut out = vec![F::zero(); cur.len()];
    for (i, x) in cur.into_iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let w = word_at(dim, n, i);
        let degs: Vec<i64> = w.iter().map(|&a| space.degree(a)).collect();
        let rev: Vec<usize> = w.iter().rev().copied().collect();
        out[word_index(dim, &rev)] = if reversal_sign(&degs) == 1 { x } else { -x };
    }
    out
}

/// Matrix of an operator on `W^{⊗n}` given by its action on dense vectors.
fn operator_matrix<F: Scalar>(size: usize, apply: impl Fn(&[F]) -> Vec<F>) -> Matrix<F> {
    let mut m = Matrix::zeros(size, size);
    let mut e = vec![F::zero(); size];
    for col in 0..size {
        e[col] = F::one();
        for (row, x) in apply(&e).into_iter().enumerate() {
            if !x.is_zero() {
                m.set(row, col, x);
            }
        }
        e[col] = F::zero();
    }
    m
}

/// Matrix of the tensor involution on `W^{⊗n}` in the word basis.
pub fn tensor_involution<F: Scalar>(space: &InvolutiveGradedSpace<F>, n: usize) -> Matrix<F> {
    let size = word_count(space.dim(), n);
    operator_matrix(size, |v| apply_tensor_involution(space, n, v))
}

/// Matrix of the rotation `r` on `W^{⊗n}` in the word basis.
pub fn rotation_matrix<F: Scalar>(space: &InvolutiveGradedSpace<F>, n: usize) -> Matrix<F> {
    let size = word_count(space.dim(), n);
    operator_matrix(size, |v| apply_rotation(space, n, v))
}

/// `W = Σ⁻¹V*`: the dual in negated degrees, desuspended, so that the
/// generator `w_i` dual to `e_i` has degree `1 - |e_i|` and the involution
/// is `-Jᵀ`.
pub fn desuspended_dual<F: Scalar>(v: &InvolutiveGradedSpace<F>) -> InvolutiveGradedSpace<F> {
    v.dualize().suspend(-1)
}
