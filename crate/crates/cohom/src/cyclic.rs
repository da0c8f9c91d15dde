//! Complexes of coinvariants: the cyclic complex `CC•` and the dihedral and
//! skew-dihedral complexes `CD±•`.  Degree `k` holds the coinvariant
//! classes of weights `1..=N` whose tensor degree is `k + 1` (the
//! suspension).  The differential lifts a class to a word, applies `m` by
//! the Leibniz rule and projects back; that this is well defined is
//! checked on every relation `x - g·x` of the assembled degrees.

use std::collections::HashMap;

use ainfty::AInftyStructure;
use exactnum::{Scalar, SparseMatrix, SparseVec};
use tensoralg::{CoinvariantSpace, Group, Tensor, TensorAlgebra};

use crate::complex::{CochainComplex, CochainSpace};
use crate::derivations::{require_involutive, require_square_zero};
use crate::CohomError;

/// Coinvariant filtration: `CC_{≥n}` keeps weights `≥ n + 1`.
const COINVARIANT_SHIFT: i64 = 1;

pub(crate) fn complex_label(group: Group) -> &'static str {
    match group {
        Group::Cyclic => "CC",
        Group::Dihedral => "CD+",
        Group::SkewDihedral => "CD-",
    }
}

/// The coinvariant spaces of weights `1..=N` and, per degree, the list of
/// `(weight, class)` pairs forming the basis.
pub(crate) struct CoinvariantLayout<F: Scalar> {
    pub alg: TensorAlgebra<F>,
    pub spaces: Vec<CoinvariantSpace<F>>,
}

impl<F: Scalar> CoinvariantLayout<F> {
    pub fn new(s: &AInftyStructure<F>, group: Group, max_weight: usize) -> Result<Self, CohomError> {
        let alg = AInftyStructure::algebra_for(s.base(), max_weight)?;
        let spaces = (1..=max_weight).map(|n| CoinvariantSpace::new(&alg, n, group)).collect();
        Ok(CoinvariantLayout { alg, spaces })
    }

    pub fn space(&self, n: usize) -> &CoinvariantSpace<F> {
        &self.spaces[n - 1]
    }

    /// Basis of the cochains of tensor degree `t`: `(weight, class)`.
    pub fn basis_of_degree(&self, t: i64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for sp in &self.spaces {
            for (i, &d) in sp.degrees().iter().enumerate() {
                if d == t {
                    out.push((sp.weight(), i));
                }
            }
        }
        out
    }

    /// Project a tensor (any weights `1..=N`) onto the classes of tensor
    /// degree `t`, in the order of `basis_of_degree(t)`.
    pub fn project(&self, t: &Tensor<F>, index: &HashMap<(usize, usize), usize>) -> SparseVec<F> {
        let mut pairs = Vec::new();
        for n in t.weights() {
            if n == 0 || n > self.spaces.len() {
                continue;
            }
            for (j, x) in self.space(n).project(&self.alg, &t.weight_part(n)).entries() {
                let pos = index.get(&(n, *j)).expect("projection lands in a class of the expected degree");
                pairs.push((*pos, x.clone()));
            }
        }
        SparseVec::from_pairs(pairs)
    }
}

/// The relations `x - g·x` spanning the kernel of the projection, for the
/// words of weight `n` and tensor degree `t`.
fn relations<F: Scalar>(s: &AInftyStructure<F>, alg: &TensorAlgebra<F>, group: Group, n: usize, t: i64) -> Vec<(String, Tensor<F>)> {
    let mut out = Vec::new();
    for w in alg.words_of_degree(n, t) {
        let x = Tensor::word(w.clone());
        let l = s.word_label(&w);
        out.push((format!("{l} - r·{l}"), x.sub(&alg.rotate(&x))));
        match group {
            Group::Cyclic => {}
            Group::Dihedral => out.push((format!("{l} - {l}*"), x.sub(&alg.star(&x)))),
            Group::SkewDihedral => out.push((format!("{l} + {l}*"), x.add(&alg.star(&x)))),
        }
    }
    out
}

pub(crate) fn coinvariant_complex<F: Scalar>(
    s: &AInftyStructure<F>,
    group: Group,
    max_weight: usize,
    window: (i64, i64),
) -> Result<CochainComplex<F>, CohomError> {
    if window.0 > window.1 {
        return Err(CohomError::Argument(format!("empty degree window {}..{}", window.0, window.1)));
    }
    require_square_zero(s, max_weight)?;
    if group != Group::Cyclic {
        require_involutive(s)?;
    }
    let layout = CoinvariantLayout::new(s, group, max_weight)?;
    let alg = &layout.alg;
    let m = s.m().retruncate(max_weight);
    let degrees: Vec<i64> = (window.0 - 1..=window.1 + 1).collect();
    let bases: Vec<Vec<(usize, usize)>> = degrees.iter().map(|&k| layout.basis_of_degree(k + 1)).collect();
    let indices: Vec<HashMap<(usize, usize), usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, &e)| (e, i)).collect()).collect();
    let spaces: Vec<CochainSpace> = bases
        .iter()
        .map(|b| CochainSpace {
            weights: b.iter().map(|&(n, _)| n).collect(),
            names: b.iter().map(|&(n, i)| s.word_label(layout.space(n).representative(i))).collect(),
        })
        .collect();

    let mut diffs = Vec::with_capacity(degrees.len() - 1);
    for t in 0..degrees.len() - 1 {
        let cols: Vec<SparseVec<F>> = bases[t]
            .iter()
            .map(|&(n, i)| layout.project(&alg.apply(&m, &layout.space(n).lift(i)), &indices[t + 1]))
            .collect();
        for n in 1..=max_weight {
            for (name, rel) in relations(s, alg, group, n, degrees[t] + 1) {
                if !layout.project(&alg.apply(&m, &rel), &indices[t + 1]).is_zero() {
                    return Err(CohomError::IllDefined { degree: degrees[t], relation: name });
                }
            }
        }
        diffs.push(SparseMatrix::from_columns(spaces[t + 1].dim(), cols));
    }
    CochainComplex::from_parts(complex_label(group), max_weight, window, spaces, diffs, COINVARIANT_SHIFT, 0)
}

/// The cyclic complex `CC•(V)`.
pub fn cyclic_complex<F: Scalar>(s: &AInftyStructure<F>, max_weight: usize, window: (i64, i64)) -> Result<CochainComplex<F>, CohomError> {
    coinvariant_complex(s, Group::Cyclic, max_weight, window)
}

/// The dihedral and skew-dihedral complexes `(CD₊•, CD₋•)`.
pub fn dihedral_complexes<F: Scalar>(
    s: &AInftyStructure<F>,
    max_weight: usize,
    window: (i64, i64),
) -> Result<(CochainComplex<F>, CochainComplex<F>), CohomError> {
    Ok((
        coinvariant_complex(s, Group::Dihedral, max_weight, window)?,
        coinvariant_complex(s, Group::SkewDihedral, max_weight, window)?,
    ))
}
