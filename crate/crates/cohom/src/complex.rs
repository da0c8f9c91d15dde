//! Weight-graded cochain complexes with exact differentials, their
//! filtration pieces and cohomology tables.

use std::fmt;

use exactnum::{Scalar, SparseMatrix, SparseVec};

use crate::theory::Recipe;
use crate::CohomError;

/// The cochain space in one degree: a basis with the weight of each
/// element and a readable name for it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CochainSpace {
    pub weights: Vec<usize>,
    pub names: Vec<String>,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }
}

/// A finite window of a cochain complex.  Spaces are assembled for the
/// degrees `a-1 ..= b+1` around the reported window `[a, b]`, so that
/// kernels and images at the boundary degrees are correct.
#[derive(Clone, Debug)]
pub struct CochainComplex<F: Scalar> {
    label: String,
    max_weight: usize,
    window: (i64, i64),
    first: i64,
    spaces: Vec<CochainSpace>,
    /// `diffs[i]` is `d_k` for `k = first + i`.
    diffs: Vec<SparseMatrix<F>>,
    /// The filtration piece of level `n` keeps weights `≥ n + shift`.
    filtration_shift: i64,
    /// The level of the piece that is the whole complex.
    min_level: i64,
    level: Option<i64>,
    pub(crate) recipe: Option<Recipe<F>>,
}

impl<F: Scalar> CochainComplex<F> {
    /// Assemble from spaces for degrees `window.0-1 ..= window.1+1` and the
    /// differentials between consecutive ones; checks shapes and `d∘d = 0`.
    pub fn from_parts(
        label: impl Into<String>,
        max_weight: usize,
        window: (i64, i64),
        spaces: Vec<CochainSpace>,
        diffs: Vec<SparseMatrix<F>>,
        filtration_shift: i64,
        min_level: i64,
    ) -> Result<Self, CohomError> {
        if window.0 > window.1 {
            return Err(CohomError::Argument(format!("empty degree window {}..{}", window.0, window.1)));
        }
        let expected = (window.1 - window.0 + 3) as usize;
        if spaces.len() != expected || diffs.len() + 1 != expected {
            return Err(CohomError::Argument("spaces and differentials do not cover the window".into()));
        }
        let first = window.0 - 1;
        for (i, d) in diffs.iter().enumerate() {
            if d.cols() != spaces[i].dim() || d.rows() != spaces[i + 1].dim() {
                return Err(CohomError::Argument(format!("differential from degree {} has the wrong shape", first + i as i64)));
            }
        }
        for i in 0..diffs.len().saturating_sub(1) {
            let dd = diffs[i + 1].compose(&diffs[i]).expect("shapes checked");
            if !dd.is_zero() {
                return Err(CohomError::DifferentialSquare { degree: first + i as i64 });
            }
        }
        Ok(CochainComplex {
            label: label.into(),
            max_weight,
            window,
            first,
            spaces,
            diffs,
            filtration_shift,
            min_level,
            level: None,
            recipe: None,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// The reported degree window `[a, b]`.
    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.window.0..=self.window.1
    }

    /// The filtration level this complex is a piece of, if any.
    pub fn level(&self) -> Option<i64> {
        self.level
    }

    /// The smallest filtration level (its piece is the whole complex).
    pub fn min_level(&self) -> i64 {
        self.min_level
    }

    /// Cutoff weight of the filtration piece of level `n`.
    pub fn cutoff(&self, n: i64) -> i64 {
        n + self.filtration_shift
    }

    fn index(&self, k: i64) -> Option<usize> {
        let i = k - self.first;
        (i >= 0 && (i as usize) < self.spaces.len()).then_some(i as usize)
    }

    /// The cochain space in degree `k` (assembled degrees only).
    pub fn space(&self, k: i64) -> Option<&CochainSpace> {
        self.index(k).map(|i| &self.spaces[i])
    }

    pub fn dim(&self, k: i64) -> usize {
        self.space(k).map_or(0, |s| s.dim())
    }

    /// `d_k`, for assembled `k` with an assembled target.
    pub fn differential(&self, k: i64) -> Option<&SparseMatrix<F>> {
        self.index(k).and_then(|i| self.diffs.get(i))
    }

    pub fn rank(&self, k: i64) -> usize {
        self.differential(k).map_or(0, |d| d.rank())
    }

    /// `dim H^k = dim C^k - rank d_k - rank d_{k-1}` for `k` in the window.
    pub fn cohomology_dim(&self, k: i64) -> usize {
        assert!(k >= self.window.0 && k <= self.window.1, "degree {k} outside the window");
        self.dim(k) - self.rank(k) - self.rank(k - 1)
    }

    /// Cohomology dimensions over the window, without stability flags.
    pub fn cohomology(&self) -> Vec<(i64, usize)> {
        self.degrees().map(|k| (k, self.cohomology_dim(k))).collect()
    }

    /// Whether every differential is zero.
    pub fn differentials_vanish(&self) -> bool {
        self.diffs.iter().all(|d| d.is_zero())
    }
}

/// The subcomplex spanned by basis elements of weight at least the cutoff
/// of level `n`.  Because the differential never lowers weight this is a
/// subcomplex; that is checked, not assumed.
pub fn filtration_piece<F: Scalar>(c: &CochainComplex<F>, n: i64) -> Result<CochainComplex<F>, CohomError> {
    let cutoff = c.cutoff(n);
    let keep: Vec<Vec<usize>> = c
        .spaces
        .iter()
        .map(|s| (0..s.dim()).filter(|&i| s.weights[i] as i64 >= cutoff).collect())
        .collect();
    let spaces: Vec<CochainSpace> = c
        .spaces
        .iter()
        .zip(&keep)
        .map(|(s, k)| CochainSpace {
            weights: k.iter().map(|&i| s.weights[i]).collect(),
            names: k.iter().map(|&i| s.names[i].clone()).collect(),
        })
        .collect();
    let mut diffs = Vec::with_capacity(c.diffs.len());
    for (i, d) in c.diffs.iter().enumerate() {
        let new_row: std::collections::HashMap<usize, usize> = keep[i + 1].iter().enumerate().map(|(r, &o)| (o, r)).collect();
        let mut cols = Vec::with_capacity(keep[i].len());
        for &j in &keep[i] {
            let mut pairs = Vec::new();
            for (r, x) in d.column(j).entries() {
                match new_row.get(r) {
                    Some(&nr) => pairs.push((nr, x.clone())),
                    None => {
                        return Err(CohomError::Argument(format!(
                            "the differential from degree {} lowers weight below the cutoff {cutoff}",
                            c.first + i as i64
                        )))
                    }
                }
            }
            cols.push(SparseVec::from_pairs(pairs));
        }
        diffs.push(SparseMatrix::from_columns(spaces[i + 1].dim(), cols));
    }
    let mut piece = CochainComplex::from_parts(
        format!("{}≥{n}", c.label),
        c.max_weight,
        c.window,
        spaces,
        diffs,
        c.filtration_shift,
        c.min_level,
    )?;
    piece.level = Some(n);
    piece.recipe = c.recipe.clone();
    Ok(piece)
}

/// Whether a degree's cohomology survives raising the truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stability {
    /// Recomputing at `N + 1` leaves the cochain dimension and the ranks of
    /// the incoming and outgoing differentials unchanged.
    Stable,
    /// The probe at `N + 1` changed something, or could not be run exactly.
    Truncated,
    /// No probe was attempted (the complex was not built from a structure).
    Unprobed,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stability::Stable => "stable",
            Stability::Truncated => "truncated",
            Stability::Unprobed => "unprobed",
        })
    }
}

/// One row of a cohomology table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyRow {
    pub degree: i64,
    pub cochain_dim: usize,
    pub dim: usize,
    pub stability: Stability,
}

/// Per-degree cohomology dimensions of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub label: String,
    pub max_weight: usize,
    pub rows: Vec<CohomologyRow>,
    /// Why degrees were flagged truncated without comparison, if so.
    pub probe_note: Option<String>,
}

impl CohomologyTable {
    /// The cohomology dimension in degree `k`, if it is in the table.
    pub fn dim(&self, k: i64) -> Option<usize> {
        self.rows.iter().find(|r| r.degree == k).map(|r| r.dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.dim).collect()
    }

    pub fn all_stable(&self) -> bool {
        self.rows.iter().all(|r| r.stability == Stability::Stable)
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (truncation N = {})", self.label, self.max_weight)?;
        writeln!(f, "{:>6}  {:>8}  {:>6}  stability", "degree", "cochains", "dim H")?;
        for r in &self.rows {
            writeln!(f, "{:>6}  {:>8}  {:>6}  {}", r.degree, r.cochain_dim, r.dim, r.stability)?;
        }
        if let Some(note) = &self.probe_note {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}
