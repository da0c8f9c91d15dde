//! The structure type and its validation checks.

use exactnum::{Matrix, Scalar};
use graded::{parity_sign, reversal_sign, InvolutiveGradedSpace};
use tensoralg::{Derivation, Tensor, TensorAlgebra};

use crate::cyclic::omega;
use crate::hat::HatTable;
use crate::report::{CheckReport, Witness};
use crate::AInftyError;

/// Which refinements a structure claims to carry.  The claims are verified
/// by the corresponding checks, not at construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Flags {
    pub involutive: bool,
    pub cyclic: bool,
}

/// An A∞-structure on `V`: a degree-one derivation `m` of the tensor algebra
/// on `Σ⁻¹V*` truncated at weight `N`, with zero weight-0 component.
///
/// Construction only enforces the shape of `m`; `m² = 0`, the involution
/// and the cyclic identity are reported by the `check_*` methods so that
/// invalid candidates can be diagnosed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInftyStructure<F: Scalar> {
    base: InvolutiveGradedSpace<F>,
    alg: TensorAlgebra<F>,
    m: Derivation<F>,
    flags: Flags,
}

impl<F: Scalar> AInftyStructure<F> {
    /// The tensor algebra a structure on `base` at truncation `N` lives in.
    pub fn algebra_for(base: &InvolutiveGradedSpace<F>, max_weight: usize) -> Result<TensorAlgebra<F>, AInftyError> {
        Ok(TensorAlgebra::on_desuspended_dual(base, max_weight)?)
    }

    /// Build from the images `m(w_k)` of the generators of `Σ⁻¹V*`.
    pub fn new(base: InvolutiveGradedSpace<F>, max_weight: usize, images: Vec<Tensor<F>>, flags: Flags) -> Result<Self, AInftyError> {
        let alg = Self::algebra_for(&base, max_weight)?;
        let m = Derivation::new(&alg, 1, images)?;
        Self::from_derivation(base, m, flags)
    }

    /// Build from a derivation of the tensor algebra on `Σ⁻¹V*`.
    pub fn from_derivation(base: InvolutiveGradedSpace<F>, m: Derivation<F>, flags: Flags) -> Result<Self, AInftyError> {
        let alg = Self::algebra_for(&base, m.max_weight())?;
        let m = Derivation::new(&alg, if m.is_zero() { 1 } else { m.degree() }, m.images().to_vec())?;
        if m.degree() != 1 {
            return Err(AInftyError::NotDegreeOne(m.degree()));
        }
        if m.images().iter().any(|t| !t.weight_part(0).is_zero()) {
            return Err(AInftyError::WeightZeroComponent);
        }
        if flags.cyclic && base.form().is_none() {
            return Err(AInftyError::MissingForm);
        }
        Ok(AInftyStructure { base, alg, m, flags })
    }

    /// The zero structure.
    pub fn zero(base: InvolutiveGradedSpace<F>, max_weight: usize, flags: Flags) -> Result<Self, AInftyError> {
        let n = base.dim();
        Self::new(base, max_weight, vec![Tensor::zero(); n], flags)
    }

    pub fn base(&self) -> &InvolutiveGradedSpace<F> {
        &self.base
    }

    pub fn algebra(&self) -> &TensorAlgebra<F> {
        &self.alg
    }

    pub fn m(&self) -> &Derivation<F> {
        &self.m
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn max_weight(&self) -> usize {
        self.alg.max_weight()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn with_flags(mut self, flags: Flags) -> Result<Self, AInftyError> {
        if flags.cyclic && self.base.form().is_none() {
            return Err(AInftyError::MissingForm);
        }
        self.flags = flags;
        Ok(self)
    }

    /// The same base and flags with another structure derivation.
    pub fn with_m(&self, m: Derivation<F>) -> Result<Self, AInftyError> {
        Self::from_derivation(self.base.clone(), m, self.flags)
    }

    /// The same structure viewed at another truncation (components above
    /// the new truncation are dropped).
    pub fn retruncate(&self, max_weight: usize) -> Result<Self, AInftyError> {
        Self::from_derivation(self.base.clone(), self.m.retruncate(max_weight), self.flags)
    }

    /// The same structure with the involution on `V` replaced.
    pub fn with_base(&self, base: InvolutiveGradedSpace<F>) -> Result<Self, AInftyError> {
        if base.degrees() != self.base.degrees() {
            return Err(AInftyError::Schema("replacement base has different degrees".into()));
        }
        Self::from_derivation(base, self.m.clone(), self.flags)
    }

    /// The hat-maps `m̂ₙ : V^{⊗n} → V` of this structure.
    pub fn hat(&self) -> HatTable<F> {
        HatTable::from_derivation(&self.base, &self.m)
    }

    fn name(&self, k: usize) -> &str {
        self.base.space().name(k)
    }

    /// One witness per weight at which some `images[k]` is nonzero.
    fn weight_witnesses(&self, images: &[Tensor<F>], what: &str) -> Vec<Witness> {
        let mut out = Vec::new();
        for (k, t) in images.iter().enumerate() {
            for n in t.weights() {
                let part = t.weight_part(n);
                let (w, c) = part.terms().next().expect("nonzero part");
                out.push(Witness {
                    weight: n,
                    location: format!("generator dual to {}", self.name(k)),
                    detail: format!("{what} has coefficient {c} on {}", self.word_label(w)),
                });
            }
        }
        out
    }

    /// A word `w_{a1}…w_{an}` written with the basis names of `V`.
    pub fn word_label(&self, w: &[u8]) -> String {
        let names: Vec<&str> = w.iter().map(|&a| self.name(a as usize)).collect();
        format!("[{}]", names.join(","))
    }

    /// `m∘m = 0` on generators, weight by weight.
    pub fn check_square_zero(&self) -> CheckReport {
        let sq = self.alg.square(&self.m).expect("same algebra");
        CheckReport::from_witnesses("square-zero", self.weight_witnesses(&sq, "m∘m"))
    }

    /// Whether `m∘m` vanishes through weight `n` when `m` is extended by
    /// zero above its truncation.  Complexes truncated above the
    /// structure's own truncation are exact only when this holds.
    pub fn square_zero_through(&self, n: usize) -> bool {
        if n <= self.max_weight() {
            return self.check_square_zero().witnesses.iter().all(|w| w.weight > n);
        }
        let big = self.alg.with_max_weight(n).expect("positive truncation");
        let m = self.m.retruncate(n);
        big.square(&m).expect("same algebra").iter().all(|t| t.is_zero())
    }

    /// `m(x*) = m(x)*`, i.e. `m* = m` for the derivation involution.
    pub fn check_involutive(&self) -> CheckReport {
        let star = self.alg.derivation_involution(&self.m).expect("same algebra");
        let diff = star.sub(&self.m).expect("same degree");
        CheckReport::from_witnesses("involutive", self.weight_witnesses(diff.images(), "m* - m"))
    }

    /// The involutive condition unwrapped in hat-maps:
    /// `m̂ₙ(x₁,…,xₙ)* = (-1)^ε (-1)^{n(n+1)/2-1} m̂ₙ(xₙ*,…,x₁*)` on all basis
    /// tuples, `ε` the reversal sign of the degrees of the `xᵢ`.
    pub fn check_hat_involutive(&self) -> CheckReport {
        let hat = self.hat();
        let dim = self.dim();
        let j = self.base.involution();
        let stars: Vec<Vec<(usize, F)>> = (0..dim).map(|c| sparse_column(j, c)).collect();
        let degs = self.base.degrees();
        let mut witnesses = Vec::new();
        for n in 1..=self.max_weight() {
            for args in tuples(dim, n) {
                let lhs = j.apply(&hat.apply_basis(&args)).expect("square");
                let rev: Vec<usize> = args.iter().rev().copied().collect();
                let mut rhs = hat.apply_multilinear(&rev.iter().map(|&a| stars[a].clone()).collect::<Vec<_>>());
                let arg_degs: Vec<i64> = args.iter().map(|&a| degs[a]).collect();
                let nn = n as i64;
                let sign = reversal_sign(&arg_degs) * parity_sign(nn * (nn + 1) / 2 - 1);
                if sign < 0 {
                    rhs.iter_mut().for_each(|x| *x = -x.clone());
                }
                if lhs != rhs {
                    witnesses.push(Witness {
                        weight: n,
                        location: format!("arguments {}", self.tuple_label(&args)),
                        detail: "hat-map does not commute with the involution".into(),
                    });
                }
            }
        }
        CheckReport::from_witnesses("involutive (hat form)", witnesses)
    }

    fn tuple_label(&self, args: &[usize]) -> String {
        let names: Vec<&str> = args.iter().map(|&a| self.name(a)).collect();
        format!("({})", names.join(","))
    }

    /// The cyclic identity on hat-maps,
    /// `⟨m̂ₙ(x₁,…,xₙ), x_{n+1}⟩ = (-1)^{ε+n} ⟨m̂ₙ(x_{n+1},x₁,…,x_{n-1}), xₙ⟩`
    /// with `ε = |x_{n+1}| Σ_{i≤n} |xᵢ|`, on all basis tuples and every
    /// weight `n ≤ N`.
    pub fn check_cyclic(&self) -> Result<CheckReport, AInftyError> {
        let form = self.base.form().ok_or(AInftyError::MissingForm)?;
        let hat = self.hat();
        let dim = self.dim();
        let degs = self.base.degrees();
        let pair = |v: &[F], b: usize| -> F {
            let mut s = F::zero();
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    s += x.clone() * form.pair(k, b).clone();
                }
            }
            s
        };
        let mut witnesses = Vec::new();
        for n in 1..=self.max_weight() {
            for xs in tuples(dim, n + 1) {
                let first = &xs[..n];
                let last = xs[n];
                let l = pair(&hat.apply_basis(first), last);
                let mut rot = Vec::with_capacity(n);
                rot.push(last);
                rot.extend_from_slice(&xs[..n - 1]);
                let r = pair(&hat.apply_basis(&rot), xs[n - 1]);
                let eps = degs[last] * first.iter().map(|&a| degs[a]).sum::<i64>();
                let r = if parity_sign(eps + n as i64) < 0 { -r } else { r };
                if l != r {
                    witnesses.push(Witness {
                        weight: n,
                        location: format!("arguments {}", self.tuple_label(&xs)),
                        detail: format!("pairings {l} and {r} differ"),
                    });
                }
            }
        }
        Ok(CheckReport::from_witnesses("cyclic", witnesses))
    }

    /// The cyclic condition in its tensor form: `m(ω) = 0` in the algebra
    /// truncated one weight higher, reported per weight of `m`.
    pub fn check_cyclic_omega(&self) -> Result<CheckReport, AInftyError> {
        let om = omega(&self.base)?;
        let big = self.alg.with_max_weight(self.max_weight() + 1)?;
        let m = self.m.retruncate(self.max_weight() + 1);
        let image = big.apply(&m, &om);
        let witnesses = image
            .weights()
            .into_iter()
            .map(|w| {
                let part = image.weight_part(w);
                let (word, c) = part.terms().next().expect("nonzero");
                Witness {
                    weight: w - 1,
                    location: "m(ω)".into(),
                    detail: format!("coefficient {c} on {}", self.word_label(word)),
                }
            })
            .collect();
        Ok(CheckReport::from_witnesses("cyclic (ω form)", witnesses))
    }

    /// All checks applicable to the declared flags, in a fixed order.
    pub fn validate(&self) -> Vec<CheckReport> {
        let mut out = vec![self.check_square_zero()];
        if self.flags.involutive {
            out.push(self.check_involutive());
        }
        if self.flags.cyclic {
            out.push(self.check_cyclic().expect("cyclic structures carry a form"));
            if self.flags.involutive {
                let invariant = self.base.form_is_invariant();
                out.push(if invariant {
                    CheckReport::from_witnesses("form invariant under involution", vec![])
                } else {
                    CheckReport::from_witnesses(
                        "form invariant under involution",
                        vec![Witness { weight: 1, location: "Gram matrix".into(), detail: "⟨x*,y*⟩ ≠ ⟨x,y⟩".into() }],
                    )
                });
            }
        }
        out
    }

    /// Transport along a change of basis of `V`: the new basis vectors are
    /// `e'_i = Σ_j P[j][i] e_j`.  The involution becomes `P⁻¹JP` and the
    /// Gram matrix `PᵀGP`; the structure is carried along so that the
    /// result is isomorphic to `self` (see [`crate::AInftyMorphism::basis_change`]).
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self, AInftyError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(AInftyError::Schema("basis change has the wrong size".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if !p.get(i, j).is_zero() && self.base.degree(i) != self.base.degree(j) {
                    return Err(AInftyError::NotHomogeneous);
                }
            }
        }
        let pinv = p.inverse().ok_or(AInftyError::NotInvertible)?;
        let j = pinv.mul(self.base.involution()).and_then(|x| x.mul(p)).expect("square");
        let form = self.base.form().map(|f| {
            let g = p.transpose().mul(&f.gram).and_then(|x| x.mul(p)).expect("square");
            let mut nf = f.clone();
            nf.gram = g;
            nf
        });
        let base = InvolutiveGradedSpace::new(self.base.space().clone(), j, form)?;
        // w_j = Σ_i P[j][i] w'_i
        let subst: Vec<Tensor<F>> = (0..n)
            .map(|jj| Tensor::from_terms((0..n).map(|i| (tensoralg::word(&[i]), p.get(jj, i).clone()))))
            .collect();
        let alg = Self::algebra_for(&base, self.max_weight())?;
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let mut t = Tensor::zero();
            for jj in 0..n {
                let c = pinv.get(i, jj);
                if !c.is_zero() {
                    t.add_assign_scaled(&substitute(&alg, self.m.image(jj), &subst), c);
                }
            }
            images.push(t);
        }
        Self::new(base, self.max_weight(), images, self.flags)
    }
}

/// Replace every letter `a` of every word by the tensor `subst[a]`
/// (an algebra map on the truncated tensor algebra).
pub fn substitute<F: Scalar>(alg: &TensorAlgebra<F>, t: &Tensor<F>, subst: &[Tensor<F>]) -> Tensor<F> {
    let mut out = Tensor::zero();
    for (w, c) in t.terms() {
        let mut prod = Tensor::scalar(F::one());
        for &a in w.iter() {
            prod = alg.multiply(&prod, &subst[a as usize]);
            if prod.is_zero() {
                break;
            }
        }
        out.add_assign_scaled(&prod, c);
    }
    out
}

/// The nonzero entries of column `c`.
pub(crate) fn sparse_column<F: Scalar>(m: &Matrix<F>, c: usize) -> Vec<(usize, F)> {
    (0..m.rows()).filter(|&r| !m.get(r, c).is_zero()).map(|r| (r, m.get(r, c).clone())).collect()
}

/// All `n`-tuples over `0..dim` in lexicographic order.
pub(crate) fn tuples(dim: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = if dim == 0 { usize::from(n == 0) } else { dim.pow(n as u32) };
    (0..count).map(move |mut idx| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % dim;
            idx /= dim;
        }
        t
    })
}

/// The four kinds of structure: plain, involutive, cyclic and cyclic
/// involutive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Plain,
    Involutive,
    Cyclic,
    CyclicInvolutive,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Plain, Flavor::Involutive, Flavor::Cyclic, Flavor::CyclicInvolutive];

    pub fn involutive(self) -> bool {
        matches!(self, Flavor::Involutive | Flavor::CyclicInvolutive)
    }

    pub fn cyclic(self) -> bool {
        matches!(self, Flavor::Cyclic | Flavor::CyclicInvolutive)
    }

    pub fn flags(self) -> Flags {
        Flags { involutive: self.involutive(), cyclic: self.cyclic() }
    }

    pub fn label(self) -> &'static str {
        match self {
            Flavor::Plain => "plain",
            Flavor::Involutive => "inv",
            Flavor::Cyclic => "cyc",
            Flavor::CyclicInvolutive => "cycinv",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.label() == s)
    }
}
