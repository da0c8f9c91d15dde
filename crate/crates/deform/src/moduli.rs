//! Infinitesimal deformations: over `k[ε]/(ε²)` an MC element is `εη` with
//! `[m,η] = 0`, and gauge moves `η` by `[m,y]`, so the moduli set is the
//! vector space `{η ∈ g¹ : [m,η] = 0} / {[m,y] : y ∈ g⁰}` with `g` the
//! flavored derivations of weights `1..=N`.

use std::fmt;

use ainfty::{flavored_subspace, AInftyStructure, Flavor};
use exactnum::{Echelon, Scalar, SparseVec};
use tensoralg::{Derivation, DerivationBasis, TensorAlgebra};

use crate::mc::require_flavor;
use crate::DeformError;

/// A basis of the flavored derivations of degree `h` and weights `1..=N`.
pub fn flavored_cochains<F: Scalar>(
    s: &AInftyStructure<F>,
    flavor: Flavor,
    degree: i64,
    max_weight: usize,
) -> Result<Vec<Derivation<F>>, DeformError> {
    let alg = s.algebra();
    let mut out = Vec::new();
    for n in 1..=max_weight.min(alg.max_weight()) {
        let (basis, vecs) = flavored_subspace(s, flavor, degree, n)?;
        out.extend(vecs.iter().map(|v| basis.derivation(alg, v)));
    }
    Ok(out)
}

/// Solves `[m, x] = t` for `x` in the flavored degree-1 cochains, by
/// elimination on the augmented rows `([m,b_i] | e_i)`.
pub(crate) struct Solver<F: Scalar> {
    alg: TensorAlgebra<F>,
    basis: Vec<Derivation<F>>,
    target: DerivationBasis,
    echelon: Echelon<F>,
}

impl<F: Scalar> Solver<F> {
    pub fn new(s: &AInftyStructure<F>, flavor: Flavor, max_weight: usize) -> Result<Self, DeformError> {
        let alg = s.algebra();
        let basis = flavored_cochains(s, flavor, 1, max_weight)?;
        let target = DerivationBasis::new(alg, 2, 1..=max_weight);
        let width = target.len();
        let mut echelon = Echelon::new(width + basis.len());
        for (i, b) in basis.iter().enumerate() {
            let image = target.coordinates(&alg.commutator(s.m(), b)?)?;
            let mut row = image.entries().to_vec();
            row.push((width + i, F::one()));
            echelon.insert(&SparseVec::from_pairs(row));
        }
        Ok(Solver { alg: alg.clone(), basis, target, echelon })
    }

    /// Some `x` with `[m,x] = t`, or `None` if `t` is not a coboundary of a
    /// flavored cochain.
    pub fn solve(&self, t: &Derivation<F>) -> Result<Option<Derivation<F>>, DeformError> {
        let width = self.target.len();
        let r = self.echelon.reduce(&self.target.coordinates(t)?);
        if r.entries().iter().any(|(i, _)| *i < width) {
            return Ok(None);
        }
        let mut x = Derivation::zero(&self.alg, 1);
        for (i, c) in r.entries() {
            x = x.add_scaled(&self.basis[i - width], &-c.clone())?;
        }
        Ok(Some(x))
    }
}

/// A basis of the flavored degree-1 cocycles `{η : [m,η] = 0}` of weights
/// `1..=N` (the first-order deformations).
pub fn cocycle_basis<F: Scalar>(s: &AInftyStructure<F>, flavor: Flavor) -> Result<Vec<Derivation<F>>, DeformError> {
    let alg = s.algebra();
    let n = s.max_weight();
    let ones = flavored_cochains(s, flavor, 1, n)?;
    let deg2 = DerivationBasis::new(alg, 2, 1..=n);
    // rows of the matrix of [m,-] (one per target coordinate)
    let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); deg2.len()];
    for (i, x) in ones.iter().enumerate() {
        for (j, c) in deg2.coordinates(&alg.commutator(s.m(), x)?)?.into_entries() {
            rows[j].push((i, c));
        }
    }
    let rows: Vec<SparseVec<F>> = rows.into_iter().map(SparseVec::from_pairs).collect();
    let kernel = Echelon::from_vectors(ones.len(), &rows).null_space();
    let mut out = Vec::with_capacity(kernel.len());
    for v in kernel {
        let mut x = Derivation::zero(alg, 1);
        for (i, c) in v.entries() {
            x = x.add_scaled(&ones[*i], c)?;
        }
        out.push(x);
    }
    Ok(out)
}

/// Dimensions describing the infinitesimal moduli space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moduli {
    pub flavor: Flavor,
    pub max_weight: usize,
    /// Flavored degree-1 cochains of weights `1..=N`.
    pub cochains: usize,
    /// Infinitesimal MC elements: `dim ker [m,-]`.
    pub cocycles: usize,
    /// Gauge-trivial ones: `dim [m, g⁰]`.
    pub coboundaries: usize,
    /// `cocycles - coboundaries`.
    pub dim: usize,
}

impl fmt::Display for Moduli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} deformations over k[eps]/(eps^2), N = {}: {} cochains, {} cocycles, {} coboundaries, dim = {}",
            self.flavor.label(),
            self.max_weight,
            self.cochains,
            self.cocycles,
            self.coboundaries,
            self.dim
        )
    }
}

/// The dimension of the moduli set of infinitesimal deformations of `S` in
/// the given flavor, with `g` the flavored derivations of weights `1..=N`,
/// `N` the structure's truncation.
pub fn infinitesimal_moduli<F: Scalar>(s: &AInftyStructure<F>, flavor: Flavor) -> Result<Moduli, DeformError> {
    require_flavor(s, flavor)?;
    let alg = s.algebra();
    let n = s.max_weight();
    let ones = flavored_cochains(s, flavor, 1, n)?;
    let zeros = flavored_cochains(s, flavor, 0, n)?;
    let deg2 = DerivationBasis::new(alg, 2, 1..=n);
    let deg1 = DerivationBasis::new(alg, 1, 1..=n);
    let mut d1 = Echelon::new(deg2.len());
    for x in &ones {
        d1.insert(&deg2.coordinates(&alg.commutator(s.m(), x)?)?);
    }
    let mut d0 = Echelon::new(deg1.len());
    for y in &zeros {
        d0.insert(&deg1.coordinates(&alg.commutator(s.m(), y)?)?);
    }
    let cocycles = ones.len() - d1.rank();
    let coboundaries = d0.rank();
    if coboundaries > cocycles {
        return Err(DeformError::Invariant("more coboundaries than cocycles; [m,[m,-]] ≠ 0".into()));
    }
    Ok(Moduli { flavor, max_weight: n, cochains: ones.len(), cocycles, coboundaries, dim: cocycles - coboundaries })
}
