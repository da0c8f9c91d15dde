//! The chain isomorphism between cyclic cochains and cyclic derivations,
//! and the Lie bracket it induces on cyclic cochains.
//!
//! A derivation `ξ` of degree `h` and weight `n` is sent to the cyclic word
//!
//! ```text
//! f(ξ) = 1/(n+1) · Σ_{a,b} Ω_ab (-1)^{h|w_a|} w_a ⊗ ξ(w_b),
//! ```
//!
//! where `ω = Σ Ω_ab w_a⊗w_b` is the element determined by the form.  Its
//! class in the cyclic coinvariants of weight `n + 1` has tensor degree
//! `h + |ω| = h + d + 2`, i.e. cochain degree `h + d + 1`.  On cyclic
//! derivations `f` is bijective weight by weight, `f([m,ξ]) = m(f(ξ))`,
//! `f(ξ*) = f(ξ)*`, and the commutator of derivations becomes the
//! bracket computed by [`cc_bracket`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use ainfty::{omega, AInftyStructure};
use exactnum::{Echelon, Matrix, Scalar, SparseVec};
use tensoralg::{CoinvariantSpace, Derivation, Group, Tensor, TensorAlgebra, Word};

use crate::blocks::{radical_of, DerivationBlock, Part};
use crate::complex::CochainComplex;
use crate::cyclic::{coinvariant_complex, CoinvariantLayout};
use crate::derivations::{cyclic_derivation_complexes, require_cyclic, require_involutive, require_square_zero};
use crate::CohomError;

/// The matrix `Ω` with `ω = Σ Ω_ab w_a⊗w_b`.
fn omega_matrix<F: Scalar>(s: &AInftyStructure<F>) -> Result<Matrix<F>, CohomError> {
    let om = omega(s.base()).map_err(|e| crate::blocks::form_error(s.base(), e))?;
    let n = s.dim();
    let mut m = Matrix::zeros(n, n);
    for (w, c) in om.terms() {
        m.set(w[0] as usize, w[1] as usize, c.clone());
    }
    Ok(m)
}

/// Degree `|ω| = d + 2` of the element determined by the form.
fn omega_degree<F: Scalar>(s: &AInftyStructure<F>) -> Result<i64, CohomError> {
    Ok(s.base().form().ok_or(ainfty::AInftyError::MissingForm)?.degree + 2)
}

/// `f(ξ)` as a tensor (a representative of its cyclic class).
pub fn f_map<F: Scalar>(s: &AInftyStructure<F>, xi: &Derivation<F>) -> Result<Tensor<F>, CohomError> {
    let om = omega_matrix(s)?;
    let alg = s.algebra();
    let h = xi.degree();
    let mut out = Tensor::zero();
    for n in xi.weights() {
        let norm = F::ratio(1, n as i64 + 1).ok_or(ainfty::AInftyError::SmallCharacteristic)?;
        for a in 0..s.dim() {
            let sign = F::sign(h * alg.degree(a));
            for b in 0..s.dim() {
                let c = om.get(a, b);
                if c.is_zero() {
                    continue;
                }
                let coef = c.clone() * sign.clone() * norm.clone();
                for (u, x) in xi.image(b).weight_part(n).terms() {
                    let mut w = Word::with_capacity(u.len() + 1);
                    w.push(a as u8);
                    w.extend_from_slice(u);
                    out.add_term(w, coef.clone() * x.clone());
                }
            }
        }
    }
    Ok(out)
}

/// The bracket of two cyclic cochains, on representatives:
///
/// ```text
/// {A, B} = Σ_{a∈A, i} Σ_{b∈B, j} ± P[b_j][a_i] · b_1…b_{j-1} (a_{i+1}…a_{i-1}) b_{j+1}…
/// ```
///
/// where `a_i … a_{i-1}` is the rotation of `a` bringing its `i`-th letter
/// to the front (with its Koszul sign), `P = Ω⁻¹` contracts `a_i` with
/// `b_j`, and the sign is `(-1)^{h_A(|a_i| + |b_1…b_{j-1}|)}` with
/// `h_A = |A| - |ω|`.  The class of the result depends only on the classes
/// of `A` and `B`; weights `n` and `m` give weight `n + m - 2`.
pub fn cc_bracket<F: Scalar>(s: &AInftyStructure<F>, a: &Tensor<F>, b: &Tensor<F>) -> Result<Tensor<F>, CohomError> {
    let om = omega_matrix(s)?;
    let p = om.inverse().ok_or_else(|| CohomError::DegenerateForm { radical: radical_of(s.base()) })?;
    let om_deg = omega_degree(s)?;
    let alg = s.algebra();
    let mut out = Tensor::zero();
    for (wa, ca) in a.terms() {
        if wa.is_empty() {
            continue;
        }
        let h = alg.word_degree(wa) - om_deg;
        let n = wa.len();
        for i in 0..n {
            let (ra, sr) = rotate_to_front(alg, wa, i);
            let ai = ra[0] as usize;
            let rest = &ra[1..];
            for (wb, cb) in b.terms() {
                let mut pre = 0i64;
                for (j, &bj) in wb.iter().enumerate() {
                    let c = p.get(bj as usize, ai);
                    if !c.is_zero() {
                        let sign = F::sign(h * (alg.degree(ai) + pre)) * F::from_i64(sr as i64);
                        let mut w = Word::with_capacity(wb.len() + rest.len() - 1);
                        w.extend_from_slice(&wb[..j]);
                        w.extend_from_slice(rest);
                        w.extend_from_slice(&wb[j + 1..]);
                        out.add_term(w, ca.clone() * cb.clone() * c.clone() * sign);
                    }
                    pre += alg.degree(bj as usize);
                }
            }
        }
    }
    Ok(out)
}

/// Rotate `w` until its `i`-th letter is in front; returns the word and the
/// accumulated Koszul sign.
fn rotate_to_front<F: Scalar>(alg: &TensorAlgebra<F>, w: &[u8], i: usize) -> (Word, i32) {
    let n = w.len();
    let mut cur = Word::from_slice(w);
    let mut sign = 1;
    for _ in 0..(n - i) % n {
        let (next, s) = alg.rotate_word(&cur);
        cur = next;
        sign *= s;
    }
    (cur, sign)
}

/// Per-weight comparison of cyclic derivations of weight `n` with cyclic
/// coinvariants of weight `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightLine {
    /// Weight `n` of the derivations.
    pub weight: usize,
    pub derivations: usize,
    pub coinvariants: usize,
    pub rank: usize,
    /// `f([m,ξ]) = m(f(ξ))` on every basis element of this weight.
    pub chain_map: bool,
}

impl WeightLine {
    pub fn ok(&self) -> bool {
        self.derivations == self.coinvariants && self.rank == self.derivations && self.chain_map
    }
}

/// Per-weight comparison of `Der^cycl_±` with the (skew-)dihedral
/// coinvariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPartLine {
    pub weight: usize,
    pub plus: (usize, usize, usize),
    pub minus: (usize, usize, usize),
    /// `f(ξ*) = f(ξ)*` in the cyclic coinvariants, and `f` sends each part
    /// to zero in the other quotient.
    pub intertwines: bool,
}

impl SignedPartLine {
    pub fn ok(&self) -> bool {
        let full = |(d, c, r): (usize, usize, usize)| d == c && r == d;
        full(self.plus) && full(self.minus) && self.intertwines
    }
}

/// Per-degree comparison of `Der^cycl` (degree `h`) with `CC` in degree
/// `h + d + 1`, cochains and cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeLine {
    pub degree: i64,
    pub der_cochains: usize,
    pub cc_cochains: usize,
    pub der_cohomology: usize,
    pub cc_cohomology: usize,
}

impl DegreeLine {
    pub fn ok(&self) -> bool {
        self.der_cochains == self.cc_cochains && self.der_cohomology == self.cc_cohomology
    }
}

/// The verified isomorphism `Σ^{d+1} CC• ≅ Der^cycl` at truncation `N`
/// (derivations of weight `≤ N`, coinvariants of weight `≤ N + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub form_degree: i64,
    pub max_weight: usize,
    pub weights: Vec<WeightLine>,
    pub degrees: Vec<DegreeLine>,
    pub signed: Option<Vec<SignedPartLine>>,
    pub signed_degrees: Option<Vec<(DegreeLine, DegreeLine)>>,
}

impl IsoReport {
    pub fn all_ok(&self) -> bool {
        self.weights.iter().all(WeightLine::ok)
            && self.degrees.iter().all(DegreeLine::ok)
            && self.signed.iter().flatten().all(SignedPartLine::ok)
            && self.signed_degrees.iter().flatten().all(|(p, m)| p.ok() && m.ok())
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAIL"
    }
}

impl fmt::Display for IsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cyclic cochains vs cyclic derivations (form degree d = {}, N = {})", self.form_degree, self.max_weight)?;
        for l in &self.weights {
            writeln!(
                f,
                "weight {}: Der^cycl = {}, CC(weight {}) = {}, rank f = {}, chain map {} ... {}",
                l.weight,
                l.derivations,
                l.weight + 1,
                l.coinvariants,
                l.rank,
                if l.chain_map { "holds" } else { "fails" },
                verdict(l.ok())
            )?;
        }
        for l in &self.degrees {
            writeln!(
                f,
                "degree {}: cochains {} vs {}, cohomology {} vs {} ... {}",
                l.degree,
                l.der_cochains,
                l.cc_cochains,
                l.der_cohomology,
                l.cc_cohomology,
                verdict(l.ok())
            )?;
        }
        if let Some(signed) = &self.signed {
            for l in signed {
                writeln!(
                    f,
                    "weight {}: +/- parts match: Der+ = {}, CD+ = {}, Der- = {}, CD- = {} ... {}",
                    l.weight,
                    l.plus.0,
                    l.plus.1,
                    l.minus.0,
                    l.minus.1,
                    verdict(l.ok())
                )?;
            }
        }
        if let Some(signed) = &self.signed_degrees {
            for (p, m) in signed {
                writeln!(
                    f,
                    "degree {}: +/- cohomology {} vs {}, {} vs {} ... {}",
                    p.degree,
                    p.der_cohomology,
                    p.cc_cohomology,
                    m.der_cohomology,
                    m.cc_cohomology,
                    verdict(p.ok() && m.ok())
                )?;
            }
        }
        Ok(())
    }
}

/// Derivation degrees occurring in weight `n`.
fn degrees_in_weight<F: Scalar>(alg: &TensorAlgebra<F>, n: usize) -> BTreeSet<i64> {
    let word_degrees: BTreeSet<i64> = alg.words(n).iter().map(|w| alg.word_degree(w)).collect();
    let mut out = BTreeSet::new();
    for k in 0..alg.dim() {
        for d in &word_degrees {
            out.insert(d - alg.degree(k));
        }
    }
    out
}

fn project_all<F: Scalar>(alg: &TensorAlgebra<F>, space: &CoinvariantSpace<F>, t: &Tensor<F>) -> SparseVec<F> {
    space.project(alg, t)
}

fn rank_of<F: Scalar>(ncols: usize, vs: &[SparseVec<F>]) -> usize {
    Echelon::from_vectors(ncols, vs).rank()
}

/// Build and verify the isomorphism at truncation `N`.  Requires a cyclic
/// structure with a non-degenerate form, exact through weight `N + 1`.
pub fn cc_der_isomorphism<F: Scalar>(s: &AInftyStructure<F>, max_weight: usize) -> Result<IsoReport, CohomError> {
    require_cyclic(s)?;
    require_square_zero(s, max_weight + 1)?;
    let d = s.base().form().expect("checked").degree;
    let om_deg = d + 2;
    let alg = AInftyStructure::algebra_for(s.base(), max_weight)?;
    let big = alg.with_max_weight(max_weight + 1)?;
    let m_big = s.m().retruncate(max_weight + 1);
    let s_big = s.retruncate(max_weight + 1)?;
    let layout = CoinvariantLayout::new(&s_big, Group::Cyclic, max_weight + 1)?;
    let signed = s.check_involutive().passed() && s.base().form_is_invariant();

    let mut weights = Vec::new();
    let mut signed_lines = Vec::new();
    for n in 0..=max_weight {
        let cc = layout.space(n + 1);
        let mut line = WeightLine { weight: n, derivations: 0, coinvariants: cc.dim(), rank: 0, chain_map: true };
        let mut images = Vec::new();
        let mut intertwines = true;
        for h in degrees_in_weight(&alg, n) {
            let block = DerivationBlock::new(&alg, s.base(), h, n, Part::All, true)?;
            line.derivations += block.dim();
            let target = layout.basis_of_degree(h + om_deg + 1);
            let index: HashMap<(usize, usize), usize> = target.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            for i in 0..block.dim() {
                let xi = block.element(&alg, i);
                let fx = f_map(&s_big, &xi.retruncate(max_weight + 1))?;
                images.push(project_all(&big, cc, &fx));
                let bracket = big.commutator(&m_big, &xi.retruncate(max_weight + 1))?.truncate(max_weight);
                let lhs = layout.project(&f_map(&s_big, &bracket)?, &index);
                let rhs = layout.project(&big.apply(&m_big, &fx), &index);
                if lhs != rhs {
                    line.chain_map = false;
                }
                if signed {
                    let star = big.derivation_involution(&xi.retruncate(max_weight + 1))?;
                    let lhs = project_all(&big, cc, &f_map(&s_big, &star)?);
                    let rhs = project_all(&big, cc, &big.star(&fx));
                    if lhs != rhs {
                        intertwines = false;
                    }
                }
            }
        }
        line.rank = rank_of(cc.dim(), &images);
        weights.push(line);
        if signed {
            let plus_space = CoinvariantSpace::new(&big, n + 1, Group::Dihedral);
            let minus_space = CoinvariantSpace::new(&big, n + 1, Group::SkewDihedral);
            let mut plus = (0, plus_space.dim(), 0);
            let mut minus = (0, minus_space.dim(), 0);
            for (part, counts) in [(Part::Plus, &mut plus), (Part::Minus, &mut minus)] {
                let (own, other) = if part == Part::Plus { (&plus_space, &minus_space) } else { (&minus_space, &plus_space) };
                let mut vs = Vec::new();
                for h in degrees_in_weight(&alg, n) {
                    let block = DerivationBlock::new(&alg, s.base(), h, n, part, true)?;
                    counts.0 += block.dim();
                    for i in 0..block.dim() {
                        let fx = f_map(&s_big, &block.element(&alg, i).retruncate(max_weight + 1))?;
                        vs.push(own.project(&big, &fx));
                        if !other.project(&big, &fx).is_zero() {
                            intertwines = false;
                        }
                    }
                }
                counts.2 = rank_of(own.dim(), &vs);
            }
            signed_lines.push(SignedPartLine { weight: n, plus, minus, intertwines });
        }
    }

    let (lo, hi) = degree_span(&alg, max_weight);
    let window = (lo, hi);
    let cc_window = (lo + d + 1, hi + d + 1);
    let (der, der_pm) = cyclic_derivation_complexes(s, max_weight, window)?;
    let cc = coinvariant_complex(&s_big, Group::Cyclic, max_weight + 1, cc_window)?;
    let degrees = compare(&der, &cc, d);
    let signed_degrees = match der_pm {
        Some((dp, dm)) if signed => {
            require_involutive(s)?;
            let cp = coinvariant_complex(&s_big, Group::Dihedral, max_weight + 1, cc_window)?;
            let cm = coinvariant_complex(&s_big, Group::SkewDihedral, max_weight + 1, cc_window)?;
            Some(compare(&dp, &cp, d).into_iter().zip(compare(&dm, &cm, d)).collect())
        }
        _ => None,
    };
    Ok(IsoReport {
        form_degree: d,
        max_weight,
        weights,
        degrees,
        signed: signed.then_some(signed_lines),
        signed_degrees,
    })
}

/// The range of derivation degrees occurring in weights `0..=N`.
fn degree_span<F: Scalar>(alg: &TensorAlgebra<F>, max_weight: usize) -> (i64, i64) {
    let all: BTreeSet<i64> = (0..=max_weight).flat_map(|n| degrees_in_weight(alg, n)).collect();
    match (all.first(), all.last()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => (0, 0),
    }
}

fn compare<F: Scalar>(der: &CochainComplex<F>, cc: &CochainComplex<F>, d: i64) -> Vec<DegreeLine> {
    der.degrees()
        .map(|h| DegreeLine {
            degree: h,
            der_cochains: der.dim(h),
            cc_cochains: cc.dim(h + d + 1),
            der_cohomology: der.cohomology_dim(h),
            cc_cohomology: cc.cohomology_dim(h + d + 1),
        })
        .collect()
}
