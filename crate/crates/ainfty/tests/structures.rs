use ainfty::random::{random_basis_change, random_flavored_derivation, random_structure};
use ainfty::samples::{dual_numbers, dual_numbers_table, ground_field, ground_field_zero, interval};
use ainfty::{from_dga, AInftyMorphism, AInftyStructure, DgaTable, Flags, Flavor, Verdict};
use exactnum::{Matrix, Scalar, Q};
use graded::random::random_involution;
use graded::{BilinearForm, GradedSpace, InvolutiveGradedSpace};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tensoralg::{word, Tensor};

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn space(pairs: &[(&str, i64)]) -> GradedSpace {
    GradedSpace::from_pairs(pairs.iter().copied()).unwrap()
}

fn all_pass(s: &AInftyStructure<Q>) {
    assert!(s.check_square_zero().passed(), "{}", s.check_square_zero());
    assert!(s.check_involutive().passed(), "{}", s.check_involutive());
    assert!(s.check_hat_involutive().passed(), "{}", s.check_hat_involutive());
    if s.base().form().is_some() {
        assert!(s.check_cyclic().unwrap().passed(), "{}", s.check_cyclic().unwrap());
        assert!(s.check_cyclic_omega().unwrap().passed());
    }
}

#[test]
fn named_samples_are_valid() {
    for n in 1..=5 {
        all_pass(&ground_field::<Q>(n));
        all_pass(&ground_field_zero::<Q>(n));
        all_pass(&dual_numbers::<Q>(n));
        let i = interval::<Q>(n);
        assert!(i.check_square_zero().passed(), "{}", i.check_square_zero());
        assert!(i.check_involutive().passed());
        assert!(i.check_hat_involutive().passed());
    }
}

#[test]
fn dga_import_has_no_higher_components() {
    let s = dual_numbers::<Q>(5);
    assert_eq!(s.m().weights(), vec![2]);
    let i = interval::<Q>(5);
    assert_eq!(i.m().weights(), vec![1, 2]);
    // the hat view returns the multiplication table
    let hat = s.hat();
    assert_eq!(hat.apply_basis(&[1, 0]), vec![q(0), q(1)]);
    assert_eq!(hat.apply_basis(&[1, 1]), vec![q(0), q(0)]);
}

#[test]
fn perturbed_dual_numbers_fail_at_weight_three() {
    let s = dual_numbers::<Q>(4);
    let perturb = |w: &[usize]| {
        let mut images = s.m().images().to_vec();
        images[0].add_term(word(w), q(1));
        s.with_m(tensoralg::Derivation::new(s.algebra(), 1, images).unwrap()).unwrap()
    };
    // 1·x = x + 1 breaks associativity: (1·x)·x = x + 1 but 1·(x·x) = 0
    let r = perturb(&[0, 1]).check_square_zero();
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.failing_weights(), vec![3]);
    // x·x = 1 gives the associative algebra k[x]/(x² - 1)
    let p = perturb(&[1, 1]);
    assert!(p.check_square_zero().passed());
    assert!(p.check_cyclic().unwrap().passed());
}

#[test]
fn nonassociative_table_fails_at_weight_three() {
    // e·e = f, all other products zero except f·e = e... choose
    // a·a = b, b·a = a: then (a·a)·a = b·a = a but a·(a·a) = a·b = 0
    let base = InvolutiveGradedSpace::trivial(space(&[("a", 0), ("b", 0)]));
    let table = DgaTable::new().product(0, 0, vec![(1, q(1))]).product(1, 0, vec![(0, q(1))]);
    let s = from_dga(&table, base, 4, Flags::default()).unwrap();
    assert_eq!(s.check_square_zero().failing_weights(), vec![3]);
}

#[test]
fn differential_only_import() {
    let base = InvolutiveGradedSpace::trivial(space(&[("x", 0), ("y", 1), ("z", 2)]));
    let good = DgaTable::new().diff(0, vec![(1, q(1))]);
    let s = from_dga(&good, base.clone(), 3, Flags::default()).unwrap();
    assert_eq!(s.m().weights(), vec![1]);
    assert!(s.check_square_zero().passed());
    let bad = good.diff(1, vec![(2, q(1))]);
    let s = from_dga(&bad, base, 3, Flags::default()).unwrap();
    assert_eq!(s.check_square_zero().failing_weights(), vec![1]);
}

#[test]
fn inconsistent_degrees_are_schema_errors() {
    let base = InvolutiveGradedSpace::trivial(space(&[("x", 0), ("y", 1)]));
    let t = DgaTable::new().product(0, 0, vec![(1, q(1))]);
    assert!(matches!(from_dga(&t, base.clone(), 3, Flags::default()), Err(ainfty::AInftyError::Schema(_))));
    let t = DgaTable::new().diff(1, vec![(0, q(1))]);
    assert!(from_dga(&t, base, 3, Flags::default()).is_err());
}

#[test]
fn flipping_the_involution_on_one_vector_breaks_involutivity() {
    let s = dual_numbers::<Q>(4);
    let j = Matrix::from_i64(&[&[-1, 0], &[0, 1]]);
    let s = s.with_flags(Flags { involutive: true, cyclic: false }).unwrap();
    let flipped = s.with_base(InvolutiveGradedSpace::new(s.base().space().clone(), j, None).unwrap()).unwrap();
    let r = flipped.check_involutive();
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.failing_weights(), vec![2]);
    assert!(r.witnesses[0].location.contains('1'));
    assert_eq!(flipped.check_hat_involutive().failing_weights(), vec![2]);
    // flipping x alone keeps k[x]/(x²) involutive
    let j = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let ok = s.with_base(InvolutiveGradedSpace::new(s.base().space().clone(), j, None).unwrap()).unwrap();
    assert!(ok.check_involutive().passed());
}

/// Independent oracle for degree-0 algebras: cyclicity of `m̂₂ = μ` is
/// `⟨ab,c⟩ = ⟨ca,b⟩`, evaluated from the dense multiplication table.
fn dense_cyclic_oracle(mult: &[Vec<Vec<Q>>], gram: &Matrix<Q>) -> bool {
    let n = gram.rows();
    let pair = |u: &[Q], c: usize| (0..n).fold(q(0), |s, k| s + u[k].clone() * gram.get(k, c).clone());
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if pair(&mult[a][b], c) != pair(&mult[c][a], b) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn degenerate_form_on_dual_numbers_matches_tuple_oracle() {
    let mult = vec![vec![vec![q(1), q(0)], vec![q(0), q(1)]], vec![vec![q(0), q(1)], vec![q(0), q(0)]]];
    for gram in [Matrix::from_i64(&[&[1, 0], &[0, 0]]), Matrix::from_i64(&[&[0, 1], &[1, 0]]), Matrix::from_i64(&[&[0, 0], &[0, 1]])] {
        let base = InvolutiveGradedSpace::trivial(space(&[("1", 0), ("x", 0)])).with_form(BilinearForm::new(0, gram.clone())).unwrap();
        let s = from_dga(&dual_numbers_table(), base, 4, Flags { involutive: true, cyclic: true }).unwrap();
        let expected = dense_cyclic_oracle(&mult, &gram);
        assert_eq!(s.check_cyclic().unwrap().passed(), expected, "gram {gram:?}");
        assert_eq!(s.check_cyclic_omega().unwrap().passed(), expected);
    }
}

#[test]
fn cyclic_check_needs_a_form() {
    let s = interval::<Q>(3);
    assert!(s.check_cyclic().is_err());
}

#[test]
fn hat_involutive_example_with_odd_generator() {
    // k[x]/(x²) with |x| = 1 and x* = -x
    let base = InvolutiveGradedSpace::<Q>::new(space(&[("1", 0), ("x", 1)]), Matrix::from_i64(&[&[1, 0], &[0, -1]]), None).unwrap();
    let s = from_dga(&dual_numbers_table(), base, 4, Flags::default()).unwrap();
    assert!(s.check_square_zero().passed());
    assert_eq!(s.check_involutive().passed(), s.check_hat_involutive().passed());
}

#[test]
fn morphism_examples() {
    // identity
    for s in [dual_numbers::<Q>(4), ground_field(4), interval(4)] {
        let id = AInftyMorphism::identity(s).unwrap();
        for r in id.check().unwrap() {
            assert!(r.passed(), "{r}");
        }
    }
    // scaling a one-dimensional form
    let z = ground_field_zero::<Q>(4);
    let scale = AInftyMorphism::linear(z.clone(), z, &Matrix::from_i64(&[&[2]])).unwrap();
    let [a, b, c] = scale.check().unwrap();
    assert!(a.passed() && b.passed());
    assert_eq!(c.verdict, Verdict::Fail);
    assert_eq!(c.failing_weights(), vec![2]);
    // the automorphism x ↦ 3x of k[x]/(x²)
    let s = dual_numbers::<Q>(4);
    let auto = AInftyMorphism::linear(s.clone(), s.clone(), &Matrix::from_i64(&[&[1, 0], &[0, 3]])).unwrap();
    assert!(auto.check_structure().passed());
    assert!(auto.check_involution().passed());
    // 1 ↦ 2·1 is not multiplicative
    let bad = AInftyMorphism::linear(s.clone(), s, &Matrix::from_i64(&[&[2, 0], &[0, 1]])).unwrap();
    assert_eq!(bad.check_structure().verdict, Verdict::Fail);
}

#[test]
fn morphism_truncation_mismatch() {
    let a = ground_field::<Q>(3);
    let b = ground_field::<Q>(4);
    assert!(AInftyMorphism::linear(a, b, &Matrix::identity(1)).is_err());
}

#[test]
fn zero_structures_pass_everything() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..10 {
        let v = graded::random::random_involutive_space::<Q, _>(&mut rng, 3, -2, 2);
        let s = AInftyStructure::zero(v, 3, Flags { involutive: true, cyclic: false }).unwrap();
        assert!(s.check_square_zero().passed() && s.check_involutive().passed() && s.check_hat_involutive().passed());
    }
}

#[test]
fn structure_rejects_bad_derivations() {
    let s = ground_field::<Q>(3);
    let even = tensoralg::Derivation::elementary(s.algebra(), 0, 0, word(&[0]), q(1)).unwrap();
    assert!(s.with_m(even).is_err());
    let weight0 = vec![Tensor::scalar(q(1))];
    // w has degree 1, a scalar has degree 0: degree shift -1, rejected
    assert!(AInftyStructure::new(s.base().clone(), 3, weight0, Flags::default()).is_err());
    // a degree-violating entry is rejected with its weight
    let cubic = vec![Tensor::term(word(&[0, 0, 0]), q(1))];
    let err = AInftyStructure::new(s.base().clone(), 3, cubic, Flags::default()).unwrap_err();
    assert!(matches!(err, ainfty::AInftyError::Tensor(tensoralg::TensorError::NotHomogeneous { weight: 3, .. })));
    let no_form = InvolutiveGradedSpace::<Q>::trivial(space(&[("1", 0)]));
    assert!(AInftyStructure::zero(no_form, 3, Flags { involutive: false, cyclic: true }).is_err());
}

#[test]
fn random_structures_are_valid() {
    let mut rng = StdRng::seed_from_u64(11);
    for flavor in Flavor::ALL {
        for _ in 0..6 {
            let s = random_structure::<Q, _>(&mut rng, flavor, 4, 0.2).unwrap();
            for r in s.validate() {
                assert!(r.passed(), "{flavor:?}: {r}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn involutive_checks_agree(seed in 0u64..100_000, flavor_index in 0usize..2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let flavor = [Flavor::Plain, Flavor::Involutive][flavor_index];
        let s = random_structure::<Q, _>(&mut rng, flavor, 4, 0.2).unwrap();
        // swap in an arbitrary involution so that both outcomes occur
        let j = random_involution::<Q, _>(&mut rng, &s.base().degrees());
        let t = s.with_base(InvolutiveGradedSpace::new(s.base().space().clone(), j, None).unwrap()).unwrap();
        for x in [&s, &t] {
            let a = x.check_involutive();
            let b = x.check_hat_involutive();
            prop_assert_eq!(a.failing_weights(), b.failing_weights());
        }
        if flavor == Flavor::Involutive {
            prop_assert!(s.check_involutive().passed());
        }
    }

    #[test]
    fn cyclic_checks_agree(seed in 0u64..100_000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let s = random_structure::<Q, _>(&mut rng, Flavor::Cyclic, 3, 0.3).unwrap();
        prop_assert!(s.check_cyclic().unwrap().passed());
        // add an arbitrary degree-one derivation: usually not cyclic
        let xi = random_flavored_derivation(&mut rng, &s, Flavor::Plain, 1, 1..=3, 0.3).unwrap();
        let t = s.with_m(s.m().add(&xi).unwrap()).unwrap();
        prop_assert_eq!(t.check_cyclic().unwrap().failing_weights(), t.check_cyclic_omega().unwrap().failing_weights());
    }

    #[test]
    fn basis_change_is_an_isomorphism(seed in 0u64..100_000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let s = random_structure::<Q, _>(&mut rng, Flavor::CyclicInvolutive, 3, 0.3).unwrap();
        let p = random_basis_change(&mut rng, &s.base().degrees());
        let phi = AInftyMorphism::basis_change(s, &p).unwrap();
        for r in phi.check().unwrap() {
            prop_assert!(r.passed(), "{}", r);
        }
        for r in phi.target().validate() {
            prop_assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn square_zero_gives_a_differential(seed in 0u64..100_000) {
        // components of weight >= 1 only, so truncation commutes with the bracket
        let mut rng = StdRng::seed_from_u64(seed);
        let s = random_structure::<Q, _>(&mut rng, Flavor::Plain, 4, 0.2).unwrap();
        let h = rand::Rng::gen_range(&mut rng, -1..=1);
        let xi = random_flavored_derivation(&mut rng, &s, Flavor::Plain, h, 1..=4, 0.3).unwrap();
        let alg = s.algebra();
        let d1 = alg.commutator(s.m(), &xi).unwrap();
        prop_assert!(alg.commutator(s.m(), &d1).unwrap().is_zero());
    }
}
