//! ∞-morphisms `(V,m) → (W,m')`, given as algebra maps
//! `φ : T̂Σ⁻¹W* → T̂Σ⁻¹V*` on the truncated tensor algebras.

use exactnum::{Matrix, Scalar};
use tensoralg::{word, Tensor};

use crate::cyclic::omega;
use crate::report::{CheckReport, Witness};
use crate::structure::{substitute, AInftyStructure};
use crate::AInftyError;

/// An algebra map between truncated tensor algebras, determined by the
/// images `φ(w'_k) ∈ T̂Σ⁻¹V*` of the generators of `Σ⁻¹W*`
/// (`source = (V,m)`, `target = (W,m')`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInftyMorphism<F: Scalar> {
    source: AInftyStructure<F>,
    target: AInftyStructure<F>,
    images: Vec<Tensor<F>>,
}

impl<F: Scalar> AInftyMorphism<F> {
    /// Validate: equal truncations, one image per generator of the target,
    /// each image of weight `1..=N` and of the degree of its generator.
    pub fn new(source: AInftyStructure<F>, target: AInftyStructure<F>, images: Vec<Tensor<F>>) -> Result<Self, AInftyError> {
        if source.max_weight() != target.max_weight() {
            return Err(AInftyError::TruncationMismatch { left: source.max_weight(), right: target.max_weight() });
        }
        if images.len() != target.dim() {
            return Err(AInftyError::Schema(format!("expected {} generator images, got {}", target.dim(), images.len())));
        }
        let alg = source.algebra();
        let talg = target.algebra();
        for (k, t) in images.iter().enumerate() {
            for (w, _) in t.terms() {
                if w.is_empty() || w.len() > alg.max_weight() || w.iter().any(|&a| a as usize >= alg.dim()) {
                    return Err(AInftyError::Schema(format!("image of generator {k} has an invalid word")));
                }
                if alg.word_degree(w) != talg.degree(k) {
                    return Err(AInftyError::Schema(format!("image of generator {k} is not of degree {}", talg.degree(k))));
                }
            }
        }
        Ok(AInftyMorphism { source, target, images })
    }

    /// The linear morphism with `φ̂₁ = g`, where `g(e_i) = Σ_k g[k][i] e'_k`
    /// maps the basis of `V` to that of `W`; on generators
    /// `φ(w'_k) = Σ_i g[k][i] w_i`.
    pub fn linear(source: AInftyStructure<F>, target: AInftyStructure<F>, g: &Matrix<F>) -> Result<Self, AInftyError> {
        if g.rows() != target.dim() || g.cols() != source.dim() {
            return Err(AInftyError::Schema("linear map has the wrong shape".into()));
        }
        let images = (0..target.dim())
            .map(|k| Tensor::from_terms((0..source.dim()).map(|i| (word(&[i]), g.get(k, i).clone()))))
            .collect();
        Self::new(source, target, images)
    }

    /// The identity of a structure.
    pub fn identity(s: AInftyStructure<F>) -> Result<Self, AInftyError> {
        let n = s.dim();
        Self::linear(s.clone(), s, &Matrix::identity(n))
    }

    /// The isomorphism `S → S.change_basis(P)` that sends each old basis
    /// vector to itself written in the new basis.
    pub fn basis_change(s: AInftyStructure<F>, p: &Matrix<F>) -> Result<Self, AInftyError> {
        let t = s.change_basis(p)?;
        let pinv = p.inverse().ok_or(AInftyError::NotInvertible)?;
        Self::linear(s, t, &pinv)
    }

    pub fn source(&self) -> &AInftyStructure<F> {
        &self.source
    }

    pub fn target(&self) -> &AInftyStructure<F> {
        &self.target
    }

    pub fn images(&self) -> &[Tensor<F>] {
        &self.images
    }

    /// `φ` applied to a tensor of the target's algebra.
    pub fn apply(&self, t: &Tensor<F>) -> Tensor<F> {
        substitute(self.source.algebra(), t, &self.images)
    }

    fn weight_witnesses(&self, diffs: impl IntoIterator<Item = (String, Tensor<F>)>, what: &str) -> Vec<Witness> {
        let mut out = Vec::new();
        for (loc, t) in diffs {
            for n in t.weights() {
                let part = t.weight_part(n);
                let (w, c) = part.terms().next().expect("nonzero");
                out.push(Witness {
                    weight: n,
                    location: loc.clone(),
                    detail: format!("{what} has coefficient {c} on {}", self.source.word_label(w)),
                });
            }
        }
        out
    }

    fn target_name(&self, k: usize) -> String {
        format!("generator dual to {}", self.target.base().space().name(k))
    }

    /// (a) `m∘φ = φ∘m'` on every generator, weight by weight.
    pub fn check_structure(&self) -> CheckReport {
        let alg = self.source.algebra();
        let diffs = (0..self.target.dim()).map(|k| {
            let lhs = alg.apply(self.source.m(), &self.images[k]);
            let rhs = self.apply(self.target.m().image(k));
            (self.target_name(k), lhs.sub(&rhs))
        });
        let w = self.weight_witnesses(diffs, "m∘φ - φ∘m'");
        CheckReport::from_witnesses("morphism: m∘φ = φ∘m'", w)
    }

    /// (b) `φ(x*) = φ(x)*` on every generator.
    pub fn check_involution(&self) -> CheckReport {
        let alg = self.source.algebra();
        let talg = self.target.algebra();
        let diffs = (0..self.target.dim()).map(|k| {
            let lhs = self.apply(&talg.star_generator(k));
            let rhs = alg.star(&self.images[k]);
            (self.target_name(k), lhs.sub(&rhs))
        });
        let w = self.weight_witnesses(diffs, "φ(x*) - φ(x)*");
        CheckReport::from_witnesses("morphism: involution", w)
    }

    /// (c) `φ(ω') = ω`: at weight 2 this says `φ̂₁` preserves the forms, at
    /// weight `n > 2` that the sums `Σ_{i+j=n} ±⟨φ̂ᵢ(…), φ̂ⱼ(…)⟩` vanish.
    pub fn check_form(&self) -> Result<CheckReport, AInftyError> {
        const NAME: &str = "morphism: form";
        let (Some(_), Some(_)) = (self.source.base().form(), self.target.base().form()) else {
            return Ok(CheckReport::not_applicable(NAME, "source or target has no form"));
        };
        let om = omega(self.source.base())?;
        let om_t = omega(self.target.base())?;
        let diff = self.apply(&om_t).sub(&om);
        Ok(CheckReport::from_witnesses(NAME, self.weight_witnesses([("φ(ω') - ω".to_string(), diff)], "difference")))
    }

    /// The three verdicts (a), (b), (c) in order.
    pub fn check(&self) -> Result<[CheckReport; 3], AInftyError> {
        Ok([self.check_structure(), self.check_involution(), self.check_form()?])
    }
}
