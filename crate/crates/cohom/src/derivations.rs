//! Complexes of derivations with differential `[m, -]`: the Hochschild
//! complex `CH•` (derivations of degree `k-1` in degree `k`), its
//! involutive and skew-involutive summands `CH±•`, and the complex of
//! cyclic derivations (indexed by derivation degree) with its `±` split.

use ainfty::AInftyStructure;
use exactnum::{Scalar, SparseMatrix, SparseVec};

use crate::blocks::{DerivationBlock, Part};
use crate::complex::{CochainComplex, CochainSpace};
use crate::CohomError;

/// Derivation filtration: `CH_{≥n}` and `Der^cycl_{≥n}` keep weights
/// `≥ n`, so that `f` carries `Der^cycl_{≥n}` onto `CC_{≥n}`.
const DERIVATION_SHIFT: i64 = 0;

/// What a derivation complex is built from.
#[derive(Clone, Copy, Debug)]
pub(crate) struct DerivationKind {
    pub part: Part,
    pub cyclic: bool,
}

pub(crate) fn require_square_zero<F: Scalar>(s: &AInftyStructure<F>, through: usize) -> Result<(), CohomError> {
    if !s.check_square_zero().passed() {
        return Err(CohomError::FailedCheck { check: "square-zero" });
    }
    if !s.square_zero_through(through) {
        return Err(CohomError::NotSquareZero { through });
    }
    Ok(())
}

pub(crate) fn require_involutive<F: Scalar>(s: &AInftyStructure<F>) -> Result<(), CohomError> {
    if !s.check_involutive().passed() {
        return Err(CohomError::FailedCheck { check: "involutive" });
    }
    Ok(())
}

pub(crate) fn require_cyclic<F: Scalar>(s: &AInftyStructure<F>) -> Result<(), CohomError> {
    let report = s.check_cyclic().map_err(|e| crate::blocks::form_error(s.base(), e))?;
    if !report.passed() {
        return Err(CohomError::FailedCheck { check: "cyclic" });
    }
    let form = s.base().form().expect("cyclic check needs a form");
    if !form.is_nondegenerate() {
        return Err(CohomError::DegenerateForm { radical: crate::blocks::radical_of(s.base()) });
    }
    Ok(())
}

/// Preconditions shared by every derivation complex of a given kind.
pub(crate) fn check_derivation_kind<F: Scalar>(s: &AInftyStructure<F>, kind: DerivationKind, max_weight: usize) -> Result<(), CohomError> {
    require_square_zero(s, max_weight + 1)?;
    if kind.part != Part::All {
        require_involutive(s)?;
    }
    if kind.cyclic {
        require_cyclic(s)?;
        if kind.part != Part::All && !s.base().form_is_invariant() {
            return Err(CohomError::FormNotInvariant);
        }
    }
    Ok(())
}

/// Assemble a derivation complex at truncation `max_weight` over the window
/// `[a, b]`; the degree-`k` space consists of derivations of degree
/// `k - degree_offset`.  The commutator with `m` is evaluated one weight
/// higher and then truncated, so weight-0 derivations see `m_{N+1}`.
pub(crate) fn derivation_complex<F: Scalar>(
    s: &AInftyStructure<F>,
    kind: DerivationKind,
    max_weight: usize,
    window: (i64, i64),
    degree_offset: i64,
    label: String,
) -> Result<CochainComplex<F>, CohomError> {
    if window.0 > window.1 {
        return Err(CohomError::Argument(format!("empty degree window {}..{}", window.0, window.1)));
    }
    check_derivation_kind(s, kind, max_weight)?;
    let alg = AInftyStructure::algebra_for(s.base(), max_weight)?;
    let big = alg.with_max_weight(max_weight + 1)?;
    let m_big = s.m().retruncate(max_weight + 1);
    let degrees: Vec<i64> = (window.0 - 1..=window.1 + 1).collect();

    let mut blocks: Vec<Vec<DerivationBlock<F>>> = Vec::with_capacity(degrees.len());
    for &k in &degrees {
        let h = k - degree_offset;
        let row = (0..=max_weight)
            .map(|n| DerivationBlock::new(&alg, s.base(), h, n, kind.part, kind.cyclic))
            .collect::<Result<Vec<_>, _>>()?;
        blocks.push(row);
    }
    let offsets: Vec<Vec<usize>> = blocks
        .iter()
        .map(|row| {
            row.iter()
                .scan(0usize, |acc, b| {
                    let o = *acc;
                    *acc += b.dim();
                    Some(o)
                })
                .collect()
        })
        .collect();
    let spaces: Vec<CochainSpace> = blocks
        .iter()
        .map(|row| {
            let mut space = CochainSpace::default();
            for b in row {
                for i in 0..b.dim() {
                    space.weights.push(b.weight());
                    space.names.push(b.label(s.base(), i));
                }
            }
            space
        })
        .collect();

    let mut diffs = Vec::with_capacity(degrees.len() - 1);
    for t in 0..degrees.len() - 1 {
        let mut cols = Vec::with_capacity(spaces[t].dim());
        for b in &blocks[t] {
            for i in 0..b.dim() {
                let xi = b.element(&alg, i).retruncate(max_weight + 1);
                let eta = big.commutator(&m_big, &xi)?.retruncate(max_weight);
                let mut col = SparseVec::new();
                for n in eta.weights() {
                    let target = &blocks[t + 1][n];
                    let coords = target.coordinates(&eta.component(n)).map_err(|e| match e {
                        CohomError::LeavesSubspace { weight, .. } => CohomError::LeavesSubspace {
                            what: format!("[m, {}]", b.label(s.base(), i)),
                            weight,
                        },
                        other => other,
                    })?;
                    let off = offsets[t + 1][n];
                    col = col.add(&coords.map_indices(|j| j + off));
                }
                cols.push(col);
            }
        }
        diffs.push(SparseMatrix::from_columns(spaces[t + 1].dim(), cols));
    }
    CochainComplex::from_parts(label, max_weight, window, spaces, diffs, DERIVATION_SHIFT, 0)
}

/// The Hochschild complex `CH•(V,V)`: degree `k` holds derivations of
/// degree `k - 1` of weights `0..=N`, with differential `[m, -]`.
pub fn hochschild_complex<F: Scalar>(s: &AInftyStructure<F>, max_weight: usize, window: (i64, i64)) -> Result<CochainComplex<F>, CohomError> {
    let kind = DerivationKind { part: Part::All, cyclic: false };
    derivation_complex(s, kind, max_weight, window, 1, "CH".into())
}

/// The involutive and skew-involutive Hochschild complexes `CH₊•`, `CH₋•`.
pub fn hochschild_pm_complexes<F: Scalar>(
    s: &AInftyStructure<F>,
    max_weight: usize,
    window: (i64, i64),
) -> Result<(CochainComplex<F>, CochainComplex<F>), CohomError> {
    let plus = DerivationKind { part: Part::Plus, cyclic: false };
    let minus = DerivationKind { part: Part::Minus, cyclic: false };
    Ok((
        derivation_complex(s, plus, max_weight, window, 1, "CH+".into())?,
        derivation_complex(s, minus, max_weight, window, 1, "CH-".into())?,
    ))
}

/// The cyclic derivations `Der^cycl` (degree `h` in position `h`) with the
/// differential `[m, -]`, and, for involutive structures with an invariant
/// form, the summands `Der^cycl₊`, `Der^cycl₋`.
#[allow(clippy::type_complexity)]
pub fn cyclic_derivation_complexes<F: Scalar>(
    s: &AInftyStructure<F>,
    max_weight: usize,
    window: (i64, i64),
) -> Result<(CochainComplex<F>, Option<(CochainComplex<F>, CochainComplex<F>)>), CohomError> {
    let all = DerivationKind { part: Part::All, cyclic: true };
    let whole = derivation_complex(s, all, max_weight, window, 0, "Der^cycl".into())?;
    let involutive = s.check_involutive().passed() && s.base().form_is_invariant();
    if !involutive {
        return Ok((whole, None));
    }
    let plus = DerivationKind { part: Part::Plus, cyclic: true };
    let minus = DerivationKind { part: Part::Minus, cyclic: true };
    Ok((
        whole,
        Some((
            derivation_complex(s, plus, max_weight, window, 0, "Der^cycl+".into())?,
            derivation_complex(s, minus, max_weight, window, 0, "Der^cycl-".into())?,
        )),
    ))
}
