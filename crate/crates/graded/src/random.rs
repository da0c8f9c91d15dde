//! Random involutive spaces for property tests and randomized validation.

use std::collections::BTreeMap;

use exactnum::{Matrix, Scalar};
use rand::Rng;

use crate::space::{GradedSpace, InvolutiveGradedSpace};

/// A random degree-preserving involution on a space with the given degrees:
/// on each degree block, `P D P⁻¹` with `D = diag(±1)` and `P` a random
/// unitriangular matrix with entries in `{-1, 0, 1}`.
pub fn random_involution<F: Scalar, R: Rng>(rng: &mut R, degrees: &[i64]) -> Matrix<F> {
    let n = degrees.len();
    let mut blocks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &d) in degrees.iter().enumerate() {
        blocks.entry(d).or_default().push(i);
    }
    let mut j = Matrix::zeros(n, n);
    for idx in blocks.values() {
        let m = idx.len();
        let mut p = Matrix::<F>::identity(m);
        for a in 0..m {
            for b in a + 1..m {
                p.set(a, b, F::from_i64(rng.gen_range(-1..=1)));
            }
        }
        let mut d = Matrix::<F>::zeros(m, m);
        for a in 0..m {
            d.set(a, a, F::from_i64(if rng.gen_bool(0.5) { 1 } else { -1 }));
        }
        let pinv = p.inverse().expect("unitriangular");
        let block = p.mul(&d).and_then(|x| x.mul(&pinv)).expect("square");
        for a in 0..m {
            for b in 0..m {
                j.set(idx[a], idx[b], block.get(a, b).clone());
            }
        }
    }
    j
}

/// A random involutive space of dimension `dim` with degrees drawn from
/// `lo..=hi` and no form.
pub fn random_involutive_space<F: Scalar, R: Rng>(rng: &mut R, dim: usize, lo: i64, hi: i64) -> InvolutiveGradedSpace<F> {
    let degrees: Vec<i64> = (0..dim).map(|_| rng.gen_range(lo..=hi)).collect();
    let space = GradedSpace::from_pairs(degrees.iter().enumerate().map(|(i, &d)| (format!("e{i}"), d))).expect("distinct names");
    let j = random_involution(rng, &degrees);
    InvolutiveGradedSpace::new(space, j, None).expect("valid by construction")
}
