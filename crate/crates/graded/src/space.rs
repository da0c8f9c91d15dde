//! Finite-dimensional graded vector spaces, involutions and bilinear forms.

use std::collections::HashSet;

use exactnum::{Matrix, Scalar};

use crate::signs::parity_sign;
use crate::GradedError;

/// A named basis vector with its cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub name: String,
    pub degree: i64,
}

/// A finite-dimensional graded vector space given by an ordered basis of
/// homogeneous vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedSpace {
    basis: Vec<BasisElement>,
}

impl GradedSpace {
    pub fn new(basis: Vec<BasisElement>) -> Result<Self, GradedError> {
        let mut seen = HashSet::new();
        for b in &basis {
            if !seen.insert(b.name.as_str()) {
                return Err(GradedError::DuplicateName(b.name.clone()));
            }
        }
        Ok(GradedSpace { basis })
    }

    /// Build from `(name, degree)` pairs.
    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, i64)>) -> Result<Self, GradedError> {
        Self::new(pairs.into_iter().map(|(n, d)| BasisElement { name: n.into(), degree: d }).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }
}

/// Sign convention for "symmetric" bilinear forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Symmetry {
    /// `⟨x,y⟩ = (-1)^{|x||y|} ⟨y,x⟩` (the default).
    #[default]
    Graded,
    /// `⟨x,y⟩ = ⟨y,x⟩` with no Koszul sign.
    Strict,
}

/// A homogeneous bilinear form of degree `d`: `⟨x,y⟩` can be nonzero only
/// when `|x| + |y| = -d`, i.e. the form is a degree-`d` element of `V*⊗V*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm<F: Scalar> {
    pub degree: i64,
    /// `gram[a][b] = ⟨e_a, e_b⟩`.
    pub gram: Matrix<F>,
    pub symmetry: Symmetry,
}

impl<F: Scalar> BilinearForm<F> {
    pub fn new(degree: i64, gram: Matrix<F>) -> Self {
        BilinearForm { degree, gram, symmetry: Symmetry::Graded }
    }

    pub fn pair(&self, a: usize, b: usize) -> &F {
        self.gram.get(a, b)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.gram.rows()
    }

    /// A nonzero vector `v` with `⟨v, -⟩ = 0`, if the form is degenerate.
    pub fn radical_vector(&self) -> Option<Vec<F>> {
        exactnum::kernel_basis(&self.gram.transpose()).into_iter().next()
    }
}

/// A graded space with a degree-preserving involution `x ↦ x*` (stored as a
/// matrix: `e_j* = Σ_i J[i][j] e_i`) and an optional bilinear form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvolutiveGradedSpace<F: Scalar> {
    space: GradedSpace,
    involution: Matrix<F>,
    form: Option<BilinearForm<F>>,
}

impl<F: Scalar> InvolutiveGradedSpace<F> {
    /// Validate and build.  The involution must square to the identity and
    /// preserve degrees; a form must have the right shape, be homogeneous of
    /// its degree and satisfy its symmetry convention.
    pub fn new(space: GradedSpace, involution: Matrix<F>, form: Option<BilinearForm<F>>) -> Result<Self, GradedError> {
        let n = space.dim();
        if involution.rows() != n || involution.cols() != n {
            return Err(GradedError::Shape { what: "involution", expected: n, rows: involution.rows(), cols: involution.cols() });
        }
        for i in 0..n {
            for j in 0..n {
                if !involution.get(i, j).is_zero() && space.degree(i) != space.degree(j) {
                    return Err(GradedError::InvolutionNotHomogeneous { row: space.name(i).into(), col: space.name(j).into() });
                }
            }
        }
        if !involution.mul(&involution).expect("square").is_identity() {
            return Err(GradedError::NotAnInvolution);
        }
        if let Some(f) = &form {
            check_form(&space, f)?;
        }
        Ok(InvolutiveGradedSpace { space, involution, form })
    }

    /// The identity involution, no form.
    pub fn trivial(space: GradedSpace) -> Self {
        let n = space.dim();
        InvolutiveGradedSpace { space, involution: Matrix::identity(n), form: None }
    }

    /// Assemble without validation (used for derived spaces whose
    /// properties follow from construction).
    pub(crate) fn from_parts_unchecked(space: GradedSpace, involution: Matrix<F>, form: Option<BilinearForm<F>>) -> Self {
        InvolutiveGradedSpace { space, involution, form }
    }

    pub fn with_form(self, form: BilinearForm<F>) -> Result<Self, GradedError> {
        Self::new(self.space, self.involution, Some(form))
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.space.degree(i)
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.space.degrees()
    }

    pub fn involution(&self) -> &Matrix<F> {
        &self.involution
    }

    pub fn form(&self) -> Option<&BilinearForm<F>> {
        self.form.as_ref()
    }

    /// `e_j*` as a coordinate vector.
    pub fn star_of_basis(&self, j: usize) -> Vec<F> {
        self.involution.column(j)
    }

    /// `⟨x*, y*⟩ = ⟨x, y⟩` for the stored form (vacuously true without one).
    pub fn form_is_invariant(&self) -> bool {
        match &self.form {
            None => true,
            Some(f) => {
                let jt = self.involution.transpose();
                let moved = jt.mul(&f.gram).and_then(|m| m.mul(&self.involution)).expect("square");
                moved == f.gram
            }
        }
    }

    /// Shift every degree by `-n` (`Σ` lowers cohomological degree by one).
    /// The involution is carried over unchanged.  A form is carried along
    /// (with its degree shifted by `2n`) when `n` is even and dropped when
    /// `n` is odd, where no sign-free transport exists.
    pub fn suspend(&self, n: i64) -> Self {
        let space = GradedSpace {
            basis: self
                .space
                .basis
                .iter()
                .map(|b| BasisElement { name: b.name.clone(), degree: b.degree - n })
                .collect(),
        };
        let form = if n.rem_euclid(2) == 0 {
            self.form.as_ref().map(|f| BilinearForm { degree: f.degree + 2 * n, gram: f.gram.clone(), symmetry: f.symmetry })
        } else {
            None
        };
        InvolutiveGradedSpace { space, involution: self.involution.clone(), form }
    }

    /// The dual space: dual basis (named `name*`, or `name` with a trailing
    /// `*` removed) in negated degrees, with involution `φ*(v) = -φ(v*)`,
    /// i.e. matrix `-Jᵀ`.  A non-degenerate form `⟨-,-⟩` induces the
    /// inverse form `⟨-,-⟩⁻¹` (inverse Gram matrix, degree `-d`); a
    /// degenerate form is dropped.
    pub fn dualize(&self) -> Self {
        let space = GradedSpace {
            basis: self
                .space
                .basis
                .iter()
                .map(|b| BasisElement {
                    name: match b.name.strip_suffix('*') {
                        Some(base) => base.to_string(),
                        None => format!("{}*", b.name),
                    },
                    degree: -b.degree,
                })
                .collect(),
        };
        let involution = self.involution.transpose().scale(&(-F::one()));
        let form = self.form.as_ref().and_then(|f| {
            f.gram.inverse().map(|g| BilinearForm { degree: -f.degree, gram: g, symmetry: f.symmetry })
        });
        InvolutiveGradedSpace::from_parts_unchecked(space, involution, form)
    }
}

fn check_form<F: Scalar>(space: &GradedSpace, f: &BilinearForm<F>) -> Result<(), GradedError> {
    let n = space.dim();
    if f.gram.rows() != n || f.gram.cols() != n {
        return Err(GradedError::Shape { what: "gram matrix", expected: n, rows: f.gram.rows(), cols: f.gram.cols() });
    }
    for a in 0..n {
        for b in 0..n {
            let x = f.gram.get(a, b);
            let (da, db) = (space.degree(a), space.degree(b));
            if !x.is_zero() && da + db != -f.degree {
                return Err(GradedError::FormNotHomogeneous { left: space.name(a).into(), right: space.name(b).into(), degree: f.degree });
            }
            let s = match f.symmetry {
                Symmetry::Graded => parity_sign(da * db),
                Symmetry::Strict => 1,
            };
            let y = f.gram.get(b, a).clone();
            let expected = if s == 1 { y } else { -y };
            if *x != expected {
                return Err(GradedError::FormNotSymmetric { left: space.name(a).into(), right: space.name(b).into() });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactnum::Q;

    fn line(deg: i64) -> InvolutiveGradedSpace<Q> {
        InvolutiveGradedSpace::trivial(GradedSpace::from_pairs([("e", deg)]).unwrap())
    }

    #[test]
    fn suspension_lowers_degree() {
        assert_eq!(line(0).suspend(1).degrees(), vec![-1]);
        assert_eq!(line(0).suspend(0), line(0));
        assert_eq!(line(3).suspend(2).suspend(-2), line(3));
    }

    #[test]
    fn dual_of_line_has_minus_involution() {
        let d = line(0).dualize();
        assert_eq!(d.degrees(), vec![0]);
        assert_eq!(d.involution(), &Matrix::from_i64(&[&[-1]]));
        assert_eq!(line(2).dualize().degrees(), vec![-2]);
        assert_eq!(line(0).dualize().dualize(), line(0));
    }

    #[test]
    fn rejects_non_involution() {
        let s = GradedSpace::from_pairs([("a", 0), ("b", 0)]).unwrap();
        let j: Matrix<Q> = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(InvolutiveGradedSpace::new(s, j, None), Err(GradedError::NotAnInvolution));
    }

    #[test]
    fn rejects_degree_mixing_involution() {
        let s = GradedSpace::from_pairs([("a", 0), ("b", 1)]).unwrap();
        let j: Matrix<Q> = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(matches!(InvolutiveGradedSpace::new(s, j, None), Err(GradedError::InvolutionNotHomogeneous { .. })));
    }

    #[test]
    fn form_checks() {
        let s = GradedSpace::from_pairs([("a", 1), ("b", -1)]).unwrap();
        // |a|+|b| = 0 so the form has degree 0; graded symmetry gives g_ab = -g_ba
        let good = BilinearForm::new(0, Matrix::<Q>::from_i64(&[&[0, 1], &[-1, 0]]));
        assert!(InvolutiveGradedSpace::trivial(s.clone()).with_form(good).is_ok());
        let strict_sym = BilinearForm::new(0, Matrix::<Q>::from_i64(&[&[0, 1], &[1, 0]]));
        assert!(InvolutiveGradedSpace::trivial(s.clone()).with_form(strict_sym.clone()).is_err());
        let strict = BilinearForm { symmetry: Symmetry::Strict, ..strict_sym };
        assert!(InvolutiveGradedSpace::trivial(s.clone()).with_form(strict).is_ok());
        let wrong_degree = BilinearForm::new(2, Matrix::<Q>::from_i64(&[&[0, 1], &[-1, 0]]));
        assert!(InvolutiveGradedSpace::trivial(s).with_form(wrong_degree).is_err());
    }
}
