//! Sparse vectors and an incrementally maintained reduced row echelon form.
//!
//! Every rank, kernel and quotient computation in the workspace funnels
//! through [`Echelon`], which keeps its rows fully reduced so that the normal
//! form of a vector modulo the row space is canonical.

use crate::scalar::Scalar;

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<F: Scalar> {
    entries: Vec<(usize, F)>,
}

impl<F: Scalar> Default for SparseVec<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Scalar> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Build from arbitrary pairs; repeated indices are summed, zeros dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut v: Vec<(usize, F)> = pairs.into_iter().collect();
        v.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(v.len());
        for (i, x) in v {
            match entries.last_mut() {
                Some((j, y)) if *j == i => *y += x,
                _ => entries.push((i, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(v: &[F]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, F::one())] }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, F)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, x)| (*i, x.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, c.clone() * b[j].1.clone()));
                j += 1;
            } else {
                let s = a[i].1.clone() + c.clone() * b[j].1.clone();
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&(-F::one()), other)
    }

    /// Re-index through `f`, summing collisions.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, x)| (f(*i), x.clone())))
    }
}

/// A reduced row echelon basis of a subspace of `F^ncols`, grown one vector
/// at a time.  Rows are normalised (pivot entry 1) and fully reduced (each
/// pivot column is zero in every other row).
#[derive(Clone, Debug)]
pub struct Echelon<F: Scalar> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    /// `pivot_row[c]` is the row whose pivot sits in column `c`.
    pivot_row: Vec<Option<usize>>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn from_vectors<'a>(ncols: usize, vs: impl IntoIterator<Item = &'a SparseVec<F>>) -> Self {
        let mut e = Self::new(ncols);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Normal form of `v` modulo the row space: all pivot coordinates zero.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        if let Some(m) = v.max_index() {
            assert!(m < self.ncols, "vector index {m} out of range {}", self.ncols);
        }
        let mut r = v.clone();
        for (c, a) in v.entries() {
            if let Some(k) = self.pivot_row[*c] {
                r = r.axpy(&(-a.clone()), &self.rows[k]);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Add `v` to the spanning set.  Returns the new pivot column if `v` was
    /// independent of the existing rows.
    pub fn insert(&mut self, v: &SparseVec<F>) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.leading()?.clone();
        let r = r.scale(&lead.inv().expect("nonzero leading entry"));
        for row in self.rows.iter_mut() {
            let c = row.get(p);
            if !c.is_zero() {
                *row = row.axpy(&(-c), &r);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(r);
        Some(p)
    }

    /// Basis of the orthogonal complement `{x : row·x = 0 for all rows}`,
    /// one vector per free column (1 there, 0 at the other free columns).
    pub fn null_space(&self) -> Vec<SparseVec<F>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut pairs = vec![(f, F::one())];
                for row in &self.rows {
                    let x = row.get(f);
                    if !x.is_zero() {
                        let (p, _) = row.leading().expect("nonzero row");
                        pairs.push((*p, -x));
                    }
                }
                SparseVec::from_pairs(pairs)
            })
            .collect()
    }
}
