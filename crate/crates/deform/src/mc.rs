//! The Maurer–Cartan equation, the gauge action and reduction.

use std::fmt;

use ainfty::{omega, AInftyStructure, Flavor};
use exactnum::Scalar;
use tensoralg::{Derivation, Tensor, TensorAlgebra};

use crate::element::RDerivation;
use crate::moduli::{flavored_cochains, Solver};
use crate::ring::CoefficientRing;
use crate::DeformError;

/// Where the MC defect `[m,η] + ½[η,η]` first fails to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McWitness {
    pub monomial: String,
    pub generator: String,
    pub weight: usize,
    pub term: String,
}

impl fmt::Display for McWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {} in [m,η] + ½[η,η] on {} has weight-{} term {}",
            self.monomial, self.generator, self.weight, self.term
        )
    }
}

/// Verdict of [`DeformationContext::mc_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McVerdict {
    pub witness: Option<McWitness>,
}

impl McVerdict {
    pub fn is_mc(&self) -> bool {
        self.witness.is_none()
    }
}

/// A structure `S = (V, m)` of a given flavor together with a coefficient
/// ring `R`: the setting in which `R`-deformations of `S` live.
#[derive(Clone, Debug)]
pub struct DeformationContext<F: Scalar> {
    s: AInftyStructure<F>,
    ring: CoefficientRing,
    flavor: Flavor,
    omega: Option<Tensor<F>>,
    m: RDerivation<F>,
}

pub(crate) fn require_flavor<F: Scalar>(s: &AInftyStructure<F>, flavor: Flavor) -> Result<(), DeformError> {
    let fail = |check| Err(DeformError::FailedCheck { check, flavor: flavor.label() });
    if !s.check_square_zero().passed() {
        return fail("square-zero");
    }
    if flavor.involutive() && !s.check_involutive().passed() {
        return fail("involutive");
    }
    if flavor.cyclic() && !s.check_cyclic()?.passed() {
        return fail("cyclic");
    }
    if flavor.cyclic() && flavor.involutive() && !s.base().form_is_invariant() {
        return fail("form invariance");
    }
    Ok(())
}

pub(crate) fn inverse_factorial<F: Scalar>(n: u32) -> Result<F, DeformError> {
    let mut f = F::one();
    for k in 2..=n {
        f = f * F::from_i64(k as i64);
    }
    f.inv().ok_or(DeformError::SmallCharacteristic(F::characteristic()))
}

impl<F: Scalar> DeformationContext<F> {
    /// Validate `S` in the flavor and fix the ring.  The field must allow
    /// division by `L!`, `L` the nilpotency order of `R₊` (and by 2).
    pub fn new(s: AInftyStructure<F>, ring: CoefficientRing, flavor: Flavor) -> Result<Self, DeformError> {
        require_flavor(&s, flavor)?;
        inverse_factorial::<F>(ring.nilpotency_order().max(2))?;
        let omega = if flavor.cyclic() { Some(omega(s.base())?) } else { None };
        let m = RDerivation::term(ring.one(), s.m().clone());
        Ok(DeformationContext { s, ring, flavor, omega, m })
    }

    pub fn structure(&self) -> &AInftyStructure<F> {
        &self.s
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn algebra(&self) -> &TensorAlgebra<F> {
        self.s.algebra()
    }

    /// `m ⊗ 1` as an element of `Der ⊗ R`.
    pub fn m(&self) -> &RDerivation<F> {
        &self.m
    }

    /// `ε^mono ξ` after checking `ξ` is flavored.
    pub fn element(&self, mono: crate::Monomial, xi: Derivation<F>) -> Result<RDerivation<F>, DeformError> {
        if !self.ring.contains(&mono) || mono.is_constant() {
            return Err(DeformError::Argument(format!("monomial {mono:?} is not a nonzero element of R₊")));
        }
        let e = RDerivation::term(mono, xi);
        self.check_flavored(&e)?;
        Ok(e)
    }

    /// Whether a single derivation lies in the flavored Lie algebra
    /// `Der_flavor(T̂≥1)`; `Err` carries the reason.
    pub fn check_flavored_derivation(&self, xi: &Derivation<F>) -> Result<(), String> {
        let alg = self.algebra();
        if xi.weights().contains(&0) {
            return Err("nonzero weight-0 component".into());
        }
        if self.flavor.involutive() && alg.derivation_involution(xi).map_err(|e| e.to_string())? != *xi {
            return Err("does not commute with the involution".into());
        }
        if let Some(om) = &self.omega {
            if !ainfty::is_cyclic_derivation(alg, om, xi).map_err(|e| e.to_string())? {
                return Err("does not annihilate ω".into());
            }
        }
        Ok(())
    }

    /// Every coefficient lies in the flavored subalgebra and the element has
    /// coefficients in `R₊`.
    pub fn check_flavored(&self, e: &RDerivation<F>) -> Result<(), DeformError> {
        if !e.is_nilpotent() {
            return Err(DeformError::NotNilpotent);
        }
        for (mono, xi) in e.terms() {
            if !self.ring.contains(mono) {
                return Err(DeformError::Argument(format!("monomial {mono:?} does not belong to {}", self.ring)));
            }
            self.check_flavored_derivation(xi).map_err(|reason| DeformError::FlavorViolation {
                flavor: self.flavor.label(),
                monomial: self.ring.label(mono),
                reason,
            })?;
        }
        Ok(())
    }

    fn require_degree(e: &RDerivation<F>, expected: i64) -> Result<(), DeformError> {
        if !e.is_zero() && e.degree() != expected {
            return Err(DeformError::WrongDegree { expected, got: e.degree() });
        }
        Ok(())
    }

    pub fn bracket(&self, a: &RDerivation<F>, b: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        Ok(a.bracket(b, &self.ring, self.algebra())?)
    }

    /// `dη = [m, η]`.
    pub fn differential(&self, e: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        self.bracket(&self.m, e)
    }

    /// `[m,η] + ½[η,η]`.
    pub fn mc_defect(&self, eta: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        let half = F::ratio(1, 2).ok_or(DeformError::SmallCharacteristic(F::characteristic()))?;
        let d = self.differential(eta)?;
        Ok(d.add_scaled(&self.bracket(eta, eta)?, &half)?)
    }

    /// Whether `η ∈ g¹ ⊗ R₊` satisfies the Maurer–Cartan equation through
    /// weight `N`; otherwise the first offending term.
    pub fn mc_check(&self, eta: &RDerivation<F>) -> Result<McVerdict, DeformError> {
        Self::require_degree(eta, 1)?;
        self.check_flavored(eta)?;
        let defect = self.mc_defect(eta)?;
        let witness = defect.terms().next().map(|(mono, xi)| {
            let (k, weight, word, c) = (0..self.algebra().dim())
                .filter_map(|k| {
                    let img = xi.image(k);
                    let w = img.min_weight()?;
                    let part = img.weight_part(w);
                    let (word, c) = part.terms().next().map(|(u, c)| (u.clone(), c.clone()))?;
                    Some((k, w, word, c))
                })
                .min_by_key(|t| (t.1, t.0))
                .expect("nonzero coefficient");
            McWitness {
                monomial: self.ring.label(mono),
                generator: self.s.word_label(&[k as u8]),
                weight,
                term: format!("{c}·{}", self.s.word_label(&word)),
            }
        });
        Ok(McVerdict { witness })
    }

    /// The `R`-linear structure `m + η`.
    pub fn deformed_structure(&self, eta: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        Self::require_degree(eta, 1)?;
        Ok(self.m.add(eta)?)
    }

    /// Whether a degree-1 `R`-linear derivation `D` squares to zero through
    /// weight `N`, reduces to a structure of the flavor, and has flavored
    /// higher coefficients: i.e. is an `R`-linear structure of the flavor.
    pub fn is_r_linear_structure(&self, d: &RDerivation<F>) -> Result<bool, DeformError> {
        Self::require_degree(d, 1)?;
        if require_flavor(&self.reduction(d)?, self.flavor).is_err() || self.check_flavored(&d.ideal_part()).is_err() {
            return Ok(false);
        }
        Ok(self.bracket(d, d)?.is_zero())
    }

    /// Evaluation of an `R`-linear structure at the augmentation.
    pub fn reduction(&self, d: &RDerivation<F>) -> Result<AInftyStructure<F>, DeformError> {
        Ok(self.s.with_m(d.constant_part(&self.ring, self.algebra()))?)
    }

    /// The gauge action
    /// `e^y·ξ = ξ + Σ_{n≥1} 1/n! ad_y^{n-1}([y,ξ] - [m,y])`
    /// of a flavored degree-0 `y ∈ g⁰⊗R₊` on an MC element `ξ`.  The result
    /// is re-checked to be MC.
    pub fn gauge(&self, y: &RDerivation<F>, xi: &RDerivation<F>) -> Result<RDerivation<F>, DeformError> {
        Self::require_degree(y, 0)?;
        self.check_flavored(y)?;
        if let Some(w) = self.mc_check(xi)?.witness {
            return Err(DeformError::NotMaurerCartan(w));
        }
        let mut acc = self.bracket(y, xi)?.sub(&self.differential(y)?)?;
        let mut out = xi.clone();
        let mut n = 1;
        while !acc.is_zero() {
            if n > self.ring.nilpotency_order() {
                return Err(DeformError::Invariant("gauge series failed to terminate".into()));
            }
            out = out.add_scaled(&acc, &inverse_factorial(n)?)?;
            acc = self.bracket(y, &acc)?;
            n += 1;
        }
        if let Some(w) = self.mc_check(&out)?.witness {
            return Err(DeformError::Invariant(format!("gauge action left the MC set: {w}")));
        }
        Ok(out)
    }

    /// Extend a first-order deformation `εφ` (one-variable ring) order by
    /// order to an MC element `εφ + ε²η₂ + …`, solving
    /// `[m,η_k] = -½ Σ_{i+j=k} [η_i,η_j]` in the flavored subspace.
    /// `None` when an obstruction is met.
    pub fn extend_first_order(&self, phi: &Derivation<F>) -> Result<Option<RDerivation<F>>, DeformError> {
        if self.ring.variables() != 1 {
            return Err(DeformError::Argument("order-by-order extension needs a one-variable ring".into()));
        }
        let q = self.ring.bounds()[0];
        let Some(eps) = self.ring.variable(0) else {
            return Ok(Some(RDerivation::zero(1)));
        };
        let mut eta = self.element(eps, phi.clone())?;
        let solver = Solver::new(&self.s, self.flavor, self.s.max_weight())?;
        for k in 2..q {
            let defect = self.mc_defect(&eta)?;
            let power = self.ring.power(0, k).expect("k < q");
            let Some(target) = defect.coefficient(&power) else { continue };
            match solver.solve(&target.scale(&-F::one()))? {
                Some(sol) => eta.add_term(power, &sol, &F::one())?,
                None => return Ok(None),
            }
        }
        Ok(self.mc_check(&eta)?.is_mc().then_some(eta))
    }

    /// A basis of the flavored degree-`h` derivations of weights `1..=N`.
    pub fn cochain_basis(&self, degree: i64) -> Result<Vec<Derivation<F>>, DeformError> {
        flavored_cochains(&self.s, self.flavor, degree, self.s.max_weight())
    }
}
