use ainfty::samples::{dual_numbers, ground_field, ground_field_zero, interval};
use ainfty::{AInftyStructure, Flags, Flavor};
use cohom::{filtration_piece, hochschild_complex, hochschild_pm_complexes};
use deform::*;
use exactnum::{Scalar, Q};
use graded::{GradedSpace, InvolutiveGradedSpace};
use tensoralg::{word, Derivation, Tensor};

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn ctx(s: AInftyStructure<Q>, q_order: u32, flavor: Flavor) -> DeformationContext<Q> {
    DeformationContext::new(s, CoefficientRing::truncated(q_order).unwrap(), flavor).unwrap()
}

fn eps(c: &DeformationContext<Q>, k: u32) -> Monomial {
    c.ring().power(0, k).unwrap()
}

/// `w_k ↦ Σ c·word` as a derivation of the context's algebra.
fn der(c: &DeformationContext<Q>, degree: i64, images: &[&[(&[usize], i64)]]) -> Derivation<Q> {
    let imgs = images
        .iter()
        .map(|terms| Tensor::from_terms(terms.iter().map(|(w, x)| (word(w), q(*x)))))
        .collect();
    Derivation::new(c.algebra(), degree, imgs).unwrap()
}

#[test]
fn zero_is_maurer_cartan() {
    let c = ctx(dual_numbers(3), 3, Flavor::CyclicInvolutive);
    assert!(c.mc_check(&RDerivation::zero(1)).unwrap().is_mc());
}

#[test]
fn first_order_mc_is_the_cocycle_condition() {
    let c = ctx(dual_numbers(3), 2, Flavor::Plain);
    // φ: w_x ↦ w_x⊗w_x changes x·x, and the deformed product is still
    // associative: a cocycle.
    let phi = der(&c, 1, &[&[], &[(&[1, 1], 1)]]);
    assert!(c.algebra().commutator(c.structure().m(), &phi).unwrap().is_zero());
    let eta = RDerivation::term(eps(&c, 1), phi);
    assert!(c.mc_check(&eta).unwrap().is_mc());
    // ψ: w_1 ↦ w_1⊗w_x breaks associativity at first order.
    let psi = der(&c, 1, &[&[(&[0, 1], 1)], &[]]);
    assert!(!c.algebra().commutator(c.structure().m(), &psi).unwrap().is_zero());
    let verdict = c.mc_check(&RDerivation::term(eps(&c, 1), psi)).unwrap();
    let w = verdict.witness.expect("not MC");
    assert_eq!(w.monomial, "eps");
    assert!(w.to_string().contains("weight"));
}

#[test]
fn quadratic_term_counts_at_second_order() {
    // Over k[ε]/(ε³) the cocycle φ above must also satisfy ½[φ,φ] = 0 up
    // to a coboundary correction; extend_first_order finds it.
    let c = ctx(dual_numbers(3), 3, Flavor::Plain);
    let phi = der(&c, 1, &[&[], &[(&[1, 1], 1)]]);
    let eta = c.extend_first_order(&phi).unwrap().expect("unobstructed");
    assert!(c.mc_check(&eta).unwrap().is_mc());
    assert_eq!(eta.coefficient(&eps(&c, 1)), Some(&phi));
}

#[test]
fn flavor_violations_and_structure_mismatch() {
    let c = ctx(dual_numbers(3), 2, Flavor::CyclicInvolutive);
    // w_1 ↦ w_1⊗w_x - w_x⊗w_1 is not involution-invariant
    let bad = der(&c, 1, &[&[(&[0, 1], 1), (&[1, 0], -1)], &[]]);
    let err = c.mc_check(&RDerivation::term(eps(&c, 1), bad)).unwrap_err();
    assert!(matches!(err, DeformError::FlavorViolation { .. }), "{err}");
    let constant = RDerivation::term(c.ring().one(), c.structure().m().clone());
    assert_eq!(c.mc_check(&constant).unwrap_err(), DeformError::NotNilpotent);
    // the same structure, declared without a form, cannot be deformed cyclically
    let base = InvolutiveGradedSpace::<Q>::trivial(GradedSpace::from_pairs([("1", 0), ("x", 0)]).unwrap());
    let s = AInftyStructure::from_derivation(base, dual_numbers::<Q>(3).m().clone(), Flags::default()).unwrap();
    assert!(DeformationContext::new(s, CoefficientRing::truncated(2).unwrap(), Flavor::Cyclic).is_err());
}

#[test]
fn bch_commuting_and_closed_forms() {
    let c = ctx(dual_numbers(3), 3, Flavor::Plain);
    let a = der(&c, 0, &[&[(&[1], 1)], &[]]);
    let b = der(&c, 0, &[&[], &[(&[0], 2), (&[1], 1)]]);
    let x = RDerivation::term(eps(&c, 1), a.clone());
    let y = RDerivation::term(eps(&c, 1), b.clone());
    assert!(!c.bracket(&x, &y).unwrap().is_zero());
    // order 3: x•y = x + y + ½[x,y]
    let expected = x.add(&y).unwrap().add_scaled(&c.bracket(&x, &y).unwrap(), &Q::ratio(1, 2).unwrap()).unwrap();
    assert_eq!(c.bch(&x, &y).unwrap(), expected);
    assert_eq!(c.bch_closed_form(&x, &y).unwrap(), expected);
    // commuting: x and ε²·a commute
    let z = RDerivation::term(eps(&c, 2), a);
    assert!(c.bracket(&x, &z).unwrap().is_zero());
    assert_eq!(c.bch(&x, &z).unwrap(), x.add(&z).unwrap());
    let c5 = ctx(dual_numbers(3), 5, Flavor::Plain);
    assert!(c5.bch_closed_form(&RDerivation::zero(0), &RDerivation::zero(0)).is_err());
    let err = c.bch(&RDerivation::term(c.ring().one(), b), &y).unwrap_err();
    assert_eq!(err, DeformError::NotNilpotent);
}

#[test]
fn gauge_examples() {
    let c = ctx(dual_numbers(3), 2, Flavor::Plain);
    let phi = der(&c, 1, &[&[], &[(&[1, 1], 1)]]);
    let xi = RDerivation::term(eps(&c, 1), phi.clone());
    // y = εz with z any degree-0 derivation: e^y·εφ = εφ - ε[m,z]
    let z = der(&c, 0, &[&[(&[1], 1)], &[(&[1], 3)]]);
    let y = RDerivation::term(eps(&c, 1), z.clone());
    let dz = c.algebra().commutator(c.structure().m(), &z).unwrap();
    assert!(!dz.is_zero());
    let expected = RDerivation::term(eps(&c, 1), phi.sub(&dz).unwrap());
    assert_eq!(c.gauge(&y, &xi).unwrap(), expected);
    // the orbit of ξ = 0 consists of MC elements
    let c3 = ctx(dual_numbers(3), 3, Flavor::Plain);
    let y3 = RDerivation::term(eps(&c3, 1), z);
    let orbit = c3.gauge(&y3, &RDerivation::zero(1)).unwrap();
    assert!(c3.mc_check(&orbit).unwrap().is_mc());
    // inverse gauge restores
    assert_eq!(c3.gauge(&y3.scale(&q(-1)), &orbit).unwrap(), RDerivation::zero(1));
    // non-MC input is refused
    let psi = der(&c, 1, &[&[(&[0, 1], 1)], &[]]);
    assert!(matches!(c.gauge(&y, &RDerivation::term(eps(&c, 1), psi)), Err(DeformError::NotMaurerCartan(_))));
}

#[test]
fn commuting_gauge_leaves_element_unchanged() {
    // V = k, m = 0: every y has dy = 0; y = ε·(w ↦ w) and ξ = ε²φ commute
    // mod ε³ only through ε³ = 0.
    let c = ctx(ground_field_zero(3), 3, Flavor::Plain);
    let id = der(&c, 0, &[&[(&[0], 1)]]);
    let phi = der(&c, 1, &[&[(&[0, 0], 1)]]);
    let y = RDerivation::term(eps(&c, 1), id);
    let xi = RDerivation::term(eps(&c, 2), phi);
    assert!(c.mc_check(&xi).unwrap().is_mc());
    assert!(c.differential(&y).unwrap().is_zero() && c.bracket(&y, &xi).unwrap().is_zero());
    assert_eq!(c.gauge(&y, &xi).unwrap(), xi);
}

#[test]
fn reductions() {
    let c = ctx(dual_numbers(3), 2, Flavor::Involutive);
    let phi = der(&c, 1, &[&[], &[(&[1, 1], 1)]]);
    let eta = c.element(eps(&c, 1), phi).unwrap();
    let m_prime = c.deformed_structure(&eta).unwrap();
    assert!(c.is_r_linear_structure(&m_prime).unwrap());
    assert_eq!(c.reduction(&m_prime).unwrap().m(), c.structure().m());
    let y = c.element(eps(&c, 1), der(&c, 0, &[&[(&[1], 1)], &[]])).unwrap();
    let moved = c.deformed_structure(&c.gauge(&y, &eta).unwrap()).unwrap();
    assert_eq!(c.reduction(&moved).unwrap().m(), c.structure().m());
    // R = k: no nilpotent elements, reduction is the identity on m
    let trivial = ctx(dual_numbers(3), 1, Flavor::Involutive);
    assert!(trivial.ring().ideal_monomials().is_empty());
    let m = trivial.deformed_structure(&RDerivation::zero(1)).unwrap();
    assert_eq!(trivial.reduction(&m).unwrap().m(), trivial.structure().m());
    // m + εψ with ψ not a cocycle is not an R-linear structure
    let psi = der(&c, 1, &[&[(&[0, 1], 1), (&[1, 0], 1)], &[]]);
    let broken = c.deformed_structure(&RDerivation::term(eps(&c, 1), psi)).unwrap();
    assert!(!c.is_r_linear_structure(&broken).unwrap());
}

#[test]
fn exp_log_examples() {
    // interval: w_e0, w_e1 in degree 1 and w_f in degree 0, so degree-0
    // derivations have components of weight 2 and more
    let c = ctx(interval(3), 3, Flavor::Plain);
    let (ring, alg) = (c.ring(), c.algebra());
    let id = c.exp(&RDerivation::zero(0)).unwrap();
    assert_eq!(id, RAutomorphism::identity(ring, alg));
    assert!(c.log(&id).unwrap().is_zero());
    let y = RDerivation::term(eps(&c, 1), der(&c, 0, &[&[(&[1], 1), (&[0, 2], 2)], &[], &[(&[2, 2], -1)]]))
        .add(&RDerivation::term(eps(&c, 2), der(&c, 0, &[&[(&[2, 0], 1)], &[(&[2, 2, 1], 1)], &[]])))
        .unwrap();
    let e = c.exp(&y).unwrap();
    assert_eq!(e.reduction_defect(ring, alg), None);
    assert_eq!(c.log(&e).unwrap(), y);
    assert_eq!(c.exp(&c.log(&e).unwrap()).unwrap(), e);
    assert_eq!(e.compose(&c.exp_inverse(&y).unwrap(), ring, alg), id);
    // an automorphism reducing to a swap is refused by log
    let swap = RAutomorphism::from_images(vec![
        RTensor::term(ring.one(), alg.generator(1)),
        RTensor::term(ring.one(), alg.generator(0)),
        RTensor::term(ring.one(), alg.generator(2)),
    ]);
    assert!(matches!(c.log(&swap), Err(DeformError::ReductionNotIdentity { .. })));
}

#[test]
fn exp_commutes_with_the_involution_exactly_when_y_does() {
    let c = ctx(interval(3), 3, Flavor::Involutive);
    let (ring, alg) = (c.ring(), c.algebra());
    let z = der(&c, 0, &[&[(&[0, 2], 1), (&[1], 1)], &[], &[(&[2, 2], 1)]]);
    let (plus, minus) = alg.plus_minus_split(&z).unwrap();
    assert!(!plus.is_zero() && !minus.is_zero());
    for (xi, invariant) in [(&plus, true), (&minus, false), (&z, false)] {
        let e = c.exp(&RDerivation::term(eps(&c, 1), xi.clone())).unwrap();
        assert_eq!(e.commutes_with_involution(ring, alg), invariant);
    }
    assert!(c.element(eps(&c, 1), plus).is_ok());
    assert!(matches!(c.element(eps(&c, 1), minus), Err(DeformError::FlavorViolation { .. })));
}

#[test]
fn exp_preserves_the_form_exactly_when_y_is_cyclic() {
    let c = ctx(dual_numbers(3), 3, Flavor::Cyclic);
    let (ring, alg) = (c.ring(), c.algebra());
    let om = ainfty::omega(c.structure().base()).unwrap();
    let cyc = ainfty::cyclic_derivation_basis(alg, c.structure().base(), 0, 1).unwrap();
    assert!(!cyc.is_empty());
    for z in &cyc {
        let e = c.exp(&RDerivation::term(eps(&c, 1), z.clone())).unwrap();
        assert!(e.preserves(&om, ring, alg));
    }
    let scale = der(&c, 0, &[&[(&[0], 1)], &[(&[1], 1)]]);
    assert!(!ainfty::is_cyclic_derivation(alg, &om, &scale).unwrap());
    assert!(!c.exp(&RDerivation::term(eps(&c, 1), scale)).unwrap().preserves(&om, ring, alg));
}

#[test]
fn moduli_of_zero_product_ground_field() {
    for n in 2..=5 {
        let m = infinitesimal_moduli(&ground_field_zero::<Q>(n), Flavor::Involutive).unwrap();
        assert_eq!(m.dim, 1, "N = {n}: {m}");
    }
    let plain = infinitesimal_moduli(&ground_field_zero::<Q>(4), Flavor::Plain).unwrap();
    assert_eq!(plain.dim, 1);
    let empty = InvolutiveGradedSpace::<Q>::trivial(GradedSpace::from_pairs(Vec::<(&str, i64)>::new()).unwrap());
    let z = AInftyStructure::zero(empty, 3, Flags::default()).unwrap();
    assert_eq!(infinitesimal_moduli(&z, Flavor::Plain).unwrap().dim, 0);
}

#[test]
fn plain_moduli_match_hochschild_h2() {
    for s in [ground_field::<Q>(5), dual_numbers::<Q>(5), ground_field_zero::<Q>(5)] {
        let n = 4;
        let moduli = infinitesimal_moduli(&s.retruncate(n).unwrap(), Flavor::Plain).unwrap();
        let ch = filtration_piece(&hochschild_complex(&s, n, (2, 2)).unwrap(), 1).unwrap();
        assert_eq!(moduli.dim, ch.cohomology_dim(2));
        let inv = infinitesimal_moduli(&s.retruncate(n).unwrap(), Flavor::Involutive).unwrap();
        let (plus, _) = hochschild_pm_complexes(&s, n, (2, 2)).unwrap();
        assert_eq!(inv.dim, filtration_piece(&plus, 1).unwrap().cohomology_dim(2));
    }
}

#[test]
fn gauge_equals_conjugation_by_the_automorphism() {
    let c = ctx(interval(3), 3, Flavor::Plain);
    let cocycles = cocycle_basis(c.structure(), Flavor::Plain).unwrap();
    let mut checked = 0;
    for phi in &cocycles {
        let Some(xi) = c.extend_first_order(phi).unwrap() else { continue };
        let y = RDerivation::term(eps(&c, 1), der(&c, 0, &[&[(&[1], 1), (&[0, 2], 1)], &[], &[(&[2, 2], 1)]]))
            .add(&RDerivation::term(eps(&c, 2), der(&c, 0, &[&[], &[(&[2, 1], 2)], &[]])))
            .unwrap();
        let moved = c.gauge(&y, &xi).unwrap();
        assert_eq!(moved, c.gauge_by_automorphism(&y, &xi).unwrap());
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn two_variable_ring() {
    let ring = CoefficientRing::parse("a^2*b^2").unwrap();
    let c = DeformationContext::new(dual_numbers::<Q>(3), ring.clone(), Flavor::Plain).unwrap();
    let (a, b) = (ring.variable(0).unwrap(), ring.variable(1).unwrap());
    let phi = der(&c, 1, &[&[], &[(&[1, 1], 1)]]);
    let xi = RDerivation::term(a.clone(), phi);
    let y = RDerivation::term(b, der(&c, 0, &[&[(&[1], 1)], &[]]))
        .add(&RDerivation::term(a, der(&c, 0, &[&[], &[(&[0], 1)]])))
        .unwrap();
    let moved = c.gauge(&y, &xi).unwrap();
    assert!(c.mc_check(&moved).unwrap().is_mc());
    assert_eq!(moved, c.gauge_by_automorphism(&y, &xi).unwrap());
    assert_eq!(c.log(&c.exp(&y).unwrap()).unwrap(), y);
}
