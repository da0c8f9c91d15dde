//! Cyclic and dihedral coinvariants of tensor powers.
//!
//! The cyclic group acts on `W^{⊗n}` through the rotation `r` (last factor
//! to the front, with its Koszul sign).  The reflection `s` acts by the
//! tensor involution (dihedral action) or by its negative (skew-dihedral
//! action).  Coinvariants are the quotient by `span{x - g·x}`.
//!
//! Since `r` permutes words up to sign, the cyclic quotient is computed
//! orbit by orbit.  The dihedral quotients are then the quotients of the
//! cyclic one by the image of `1 - s̄`, where `s̄` is the involution
//! induced on cyclic coinvariants (well defined because `s r s = r⁻¹`).

use std::collections::HashMap;

use exactnum::{Echelon, Matrix, Scalar, SparseVec};

use crate::algebra::TensorAlgebra;
use crate::tensor::{Tensor, Word};

/// Which group the coinvariants are taken for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// `Z_n` acting by rotation.
    Cyclic,
    /// `D_n` with `s` acting by the tensor involution.
    Dihedral,
    /// `D_n` with `s` acting by minus the tensor involution.
    SkewDihedral,
}

impl Group {
    pub fn label(self) -> &'static str {
        match self {
            Group::Cyclic => "cyclic",
            Group::Dihedral => "dihedral",
            Group::SkewDihedral => "skew-dihedral",
        }
    }
}

/// Coinvariants of `W^{⊗n}` under a cyclic or dihedral action.
#[derive(Clone, Debug)]
pub struct CoinvariantSpace<F: Scalar> {
    weight: usize,
    group: Group,
    /// Orbit representatives with nonzero cyclic class.
    cyclic_reps: Vec<Word>,
    cyclic_index: HashMap<Word, usize>,
    /// For dihedral groups: relations `e - s̄ e` on cyclic coordinates.
    reflection: Option<Echelon<F>>,
    /// Quotient coordinates, as indices into `cyclic_reps`.
    coords: Vec<usize>,
    coord_of_cyclic: HashMap<usize, usize>,
    degrees: Vec<i64>,
}

impl<F: Scalar> CoinvariantSpace<F> {
    /// Coinvariants of the weight-`n` part of the algebra.  Words of every
    /// weight `n ≥ 1` are allowed regardless of the algebra's truncation.
    pub fn new(alg: &TensorAlgebra<F>, n: usize, group: Group) -> Self {
        assert!(n >= 1, "coinvariants are taken in weights n >= 1");
        let mut cyclic_reps = Vec::new();
        for w in alg.words(n) {
            if let Some((rep, _)) = cyclic_class(alg, &w) {
                if rep == w {
                    cyclic_reps.push(w);
                }
            }
        }
        let cyclic_index: HashMap<Word, usize> = cyclic_reps.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut space = CoinvariantSpace {
            weight: n,
            group,
            cyclic_reps,
            cyclic_index,
            reflection: None,
            coords: Vec::new(),
            coord_of_cyclic: HashMap::new(),
            degrees: Vec::new(),
        };
        match group {
            Group::Cyclic => {
                space.coords = (0..space.cyclic_reps.len()).collect();
            }
            Group::Dihedral | Group::SkewDihedral => {
                let sign = if group == Group::Dihedral { F::one() } else { -F::one() };
                let c = space.cyclic_reps.len();
                let mut ech = Echelon::new(c);
                for i in 0..c {
                    let rep = Tensor::word(space.cyclic_reps[i].clone());
                    let s = alg.star(&rep).scale(&sign);
                    let rel = SparseVec::unit(i).sub(&space.cyclic_coordinates(alg, &s));
                    ech.insert(&rel);
                }
                space.coords = ech.free_columns();
                space.reflection = Some(ech);
            }
        }
        space.coord_of_cyclic = space.coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        space.degrees = space.coords.iter().map(|&c| alg.word_degree(&space.cyclic_reps[c])).collect();
        space
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Tensor degree of each quotient coordinate.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Representative word of the `i`-th quotient coordinate.
    pub fn representative(&self, i: usize) -> &Word {
        &self.cyclic_reps[self.coords[i]]
    }

    /// A tensor whose class is the `i`-th basis vector of the quotient.
    pub fn lift(&self, i: usize) -> Tensor<F> {
        Tensor::word(self.representative(i).clone())
    }

    fn cyclic_coordinates(&self, alg: &TensorAlgebra<F>, t: &Tensor<F>) -> SparseVec<F> {
        let mut pairs = Vec::new();
        for (w, c) in t.terms() {
            if w.len() != self.weight {
                continue;
            }
            if let Some((rep, s)) = cyclic_class(alg, w) {
                let i = self.cyclic_index[&rep];
                pairs.push((i, if s == 1 { c.clone() } else { -c.clone() }));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Coordinates of the class of the weight-`n` part of `t`.
    pub fn project(&self, alg: &TensorAlgebra<F>, t: &Tensor<F>) -> SparseVec<F> {
        let cyc = self.cyclic_coordinates(alg, t);
        match &self.reflection {
            None => cyc,
            Some(ech) => {
                let reduced = ech.reduce(&cyc);
                SparseVec::from_pairs(reduced.entries().iter().map(|(c, x)| (self.coord_of_cyclic[c], x.clone())))
            }
        }
    }

    /// Matrix of the projection `W^{⊗n} → coinvariants` (rows: quotient
    /// coordinates, columns: words in lexicographic order).
    pub fn projection_matrix(&self, alg: &TensorAlgebra<F>) -> Matrix<F> {
        let words = alg.words(self.weight);
        let mut m = Matrix::zeros(self.dim(), words.len());
        for (j, w) in words.into_iter().enumerate() {
            for (i, x) in self.project(alg, &Tensor::word(w)).entries() {
                m.set(*i, j, x.clone());
            }
        }
        m
    }
}

/// Cyclic class of a word: its orbit representative (the least word in the
/// orbit) and the sign `±1` with `[w] = ±[rep]`, or `None` if the class is
/// zero because some rotation fixes the word with sign `-1`.
pub fn cyclic_class<F: Scalar>(alg: &TensorAlgebra<F>, w: &[u8]) -> Option<(Word, i32)> {
    let n = w.len();
    let mut cur = Word::from_slice(w);
    let mut sign = 1i32;
    let mut best: Option<(Word, i32)> = None;
    for _ in 0..n {
        // `r^i w = sign · cur`, hence `[w] = sign · [cur]`.
        match &best {
            Some((b, s)) if *b == cur => {
                if *s != sign {
                    return None;
                }
            }
            Some((b, _)) if *b < cur => {}
            _ => best = Some((cur.clone(), sign)),
        }
        let (next, s) = alg.rotate_word(&cur);
        cur = next;
        sign *= s;
    }
    best
}
