//! Subspaces of homogeneous derivations of one degree and one weight, with
//! exact coordinates: all derivations, the cyclic ones, and the `±`
//! eigenspaces of the derivation involution inside either.

use ainfty::cyclic::cyclic_subspace;
use ainfty::AInftyError;
use exactnum::{Echelon, Scalar, SparseVec};
use graded::InvolutiveGradedSpace;
use tensoralg::{Derivation, DerivationBasis, TensorAlgebra, TensorError};

use crate::CohomError;

/// Which eigen-summand of the derivation involution a block spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    All,
    Plus,
    Minus,
}

impl Part {
    pub fn suffix(self) -> &'static str {
        match self {
            Part::All => "",
            Part::Plus => "+",
            Part::Minus => "-",
        }
    }
}

/// A subspace of degree-`h`, weight-`n` derivations.  Proper subspaces are
/// stored by reduced echelon rows in the elementary basis, so the
/// coordinate of a member along row `i` is its entry at that row's pivot.
#[derive(Clone, Debug)]
pub struct DerivationBlock<F: Scalar> {
    weight: usize,
    basis: DerivationBasis,
    rows: Option<Vec<SparseVec<F>>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> DerivationBlock<F> {
    pub fn new(
        alg: &TensorAlgebra<F>,
        base: &InvolutiveGradedSpace<F>,
        degree: i64,
        weight: usize,
        part: Part,
        cyclic: bool,
    ) -> Result<Self, CohomError> {
        let (basis, spanning) = if cyclic {
            cyclic_subspace(alg, base, degree, weight).map_err(|e| form_error(base, e))?
        } else {
            let b = DerivationBasis::new(alg, degree, [weight]);
            if part == Part::All {
                return Ok(DerivationBlock { weight, basis: b, rows: None, pivots: Vec::new() });
            }
            let units = (0..b.len()).map(SparseVec::unit).collect();
            (b, units)
        };
        let mut ech = Echelon::new(basis.len());
        for v in &spanning {
            let projected = match part {
                Part::All => v.clone(),
                Part::Plus | Part::Minus => {
                    let xi = basis.derivation(alg, v);
                    let (plus, minus) = alg.plus_minus_split(&xi)?;
                    basis.coordinates(if part == Part::Plus { &plus } else { &minus })?
                }
            };
            ech.insert(&projected);
        }
        let rows = ech.rows().to_vec();
        let pivots = rows.iter().map(|r| r.leading().expect("nonzero echelon row").0).collect();
        Ok(DerivationBlock { weight, basis, rows: Some(rows), pivots })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn dim(&self) -> usize {
        match &self.rows {
            None => self.basis.len(),
            Some(r) => r.len(),
        }
    }

    /// The `i`-th basis derivation of the block.
    pub fn element(&self, alg: &TensorAlgebra<F>, i: usize) -> Derivation<F> {
        match &self.rows {
            None => self.basis.element(alg, i),
            Some(rows) => self.basis.derivation(alg, &rows[i]),
        }
    }

    /// Coordinates of a derivation concentrated in this block's weight, or
    /// an error if it does not lie in the subspace.
    pub fn coordinates(&self, xi: &Derivation<F>) -> Result<SparseVec<F>, CohomError> {
        let leaves = || CohomError::LeavesSubspace { what: format!("a degree-{} derivation", xi.degree()), weight: self.weight };
        let v = match self.basis.coordinates(xi) {
            Ok(v) => v,
            Err(TensorError::OutsideBasis { .. }) => return Err(leaves()),
            Err(e) => return Err(e.into()),
        };
        let rows = match &self.rows {
            None => return Ok(v),
            Some(r) => r,
        };
        let mut coords = Vec::new();
        let mut rebuilt = SparseVec::new();
        for (i, (row, &p)) in rows.iter().zip(&self.pivots).enumerate() {
            let c = v.get(p);
            if !c.is_zero() {
                rebuilt = rebuilt.axpy(&c, row);
                coords.push((i, c));
            }
        }
        if rebuilt != v {
            return Err(leaves());
        }
        Ok(SparseVec::from_pairs(coords))
    }

    /// A readable name for the `i`-th basis element, written with the names
    /// of the basis of `V`.
    pub fn label(&self, base: &InvolutiveGradedSpace<F>, i: usize) -> String {
        let elementary = |j: usize| {
            let (k, w) = &self.basis.elements()[j];
            let word: Vec<&str> = w.iter().map(|&a| base.space().name(a as usize)).collect();
            format!("{}↦[{}]", base.space().name(*k), word.join(","))
        };
        match &self.rows {
            None => elementary(i),
            Some(rows) => {
                let row = &rows[i];
                let lead = elementary(row.leading().expect("nonzero row").0);
                if row.nnz() > 1 {
                    format!("{lead}+…")
                } else {
                    lead
                }
            }
        }
    }
}

/// Turn a degenerate-form failure into an error carrying a radical vector.
pub(crate) fn form_error<F: Scalar>(base: &InvolutiveGradedSpace<F>, e: AInftyError) -> CohomError {
    match e {
        AInftyError::DegenerateForm => CohomError::DegenerateForm { radical: radical_of(base) },
        other => other.into(),
    }
}

pub(crate) fn radical_of<F: Scalar>(base: &InvolutiveGradedSpace<F>) -> Vec<String> {
    base.form()
        .and_then(|f| f.radical_vector())
        .map(|v| v.iter().enumerate().map(|(i, x)| format!("{}={x}", base.space().name(i))).collect())
        .unwrap_or_default()
}
