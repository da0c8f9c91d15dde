use exactnum::{quotient_dim, Matrix, Scalar, Q};
use graded::random::random_involutive_space;
use graded::{rotation_matrix, tensor_involution, word_count, GradedSpace, InvolutiveGradedSpace};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tensoralg::{CoinvariantSpace, Group, TensorAlgebra};

fn odd_line() -> TensorAlgebra<Q> {
    let v = InvolutiveGradedSpace::trivial(GradedSpace::from_pairs([("1", 0)]).unwrap());
    TensorAlgebra::on_desuspended_dual(&v, 6).unwrap()
}

#[test]
fn odd_line_examples() {
    let alg = odd_line();
    assert_eq!(CoinvariantSpace::new(&alg, 2, Group::Cyclic).dim(), 0);
    assert_eq!(CoinvariantSpace::new(&alg, 3, Group::Cyclic).dim(), 1);
    assert_eq!(CoinvariantSpace::new(&alg, 1, Group::Dihedral).dim(), 0);
    assert_eq!(CoinvariantSpace::new(&alg, 1, Group::SkewDihedral).dim(), 1);
    // s(w^i) = (-1)^{i(i+1)/2} w^i on odd weights
    assert_eq!(CoinvariantSpace::new(&alg, 3, Group::Dihedral).dim(), 1);
    assert_eq!(CoinvariantSpace::new(&alg, 5, Group::Dihedral).dim(), 0);
    assert_eq!(CoinvariantSpace::new(&alg, 5, Group::SkewDihedral).dim(), 1);
}

/// Brute-force oracle: quotient of `W^{⊗n}` by the span of `x - g x` for the
/// generators `g` of the group, from the dense matrices of `r` and `s`.
fn brute_force_dim(w: &InvolutiveGradedSpace<Q>, n: usize, group: Group) -> usize {
    let size = word_count(w.dim(), n);
    let id = Matrix::<Q>::identity(size);
    let r = rotation_matrix(w, n);
    let mut gens: Vec<Vec<Q>> = Vec::new();
    let push_rel = |g: &Matrix<Q>, gens: &mut Vec<Vec<Q>>| {
        let rel = id.add(&g.scale(&-Q::one())).unwrap();
        for j in 0..size {
            gens.push(rel.column(j));
        }
    };
    push_rel(&r, &mut gens);
    match group {
        Group::Cyclic => {}
        Group::Dihedral => push_rel(&tensor_involution(w, n), &mut gens),
        Group::SkewDihedral => push_rel(&tensor_involution(w, n).scale(&-Q::one()), &mut gens),
    }
    let sub = Matrix::from_columns(&gens, size).unwrap();
    quotient_dim(&id, &sub).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coinvariant_dims_match_brute_force(seed in 0u64..10_000, dim in 1usize..=2, n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let v = random_involutive_space::<Q, _>(&mut rng, dim, -2, 2);
        let alg = TensorAlgebra::on_desuspended_dual(&v, 4).unwrap();
        for g in [Group::Cyclic, Group::Dihedral, Group::SkewDihedral] {
            let c = CoinvariantSpace::new(&alg, n, g);
            prop_assert_eq!(c.dim(), brute_force_dim(alg.generators(), n, g), "group {:?}", g);
            // the projection is surjective
            prop_assert_eq!(c.projection_matrix(&alg).rank(), c.dim());
        }
    }

    #[test]
    fn cyclic_splits_into_dihedral_and_skew(seed in 0u64..10_000, dim in 1usize..=3, n in 1usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let v = random_involutive_space::<Q, _>(&mut rng, dim, -2, 2);
        let alg = TensorAlgebra::on_desuspended_dual(&v, 5).unwrap();
        let c = CoinvariantSpace::new(&alg, n, Group::Cyclic).dim();
        let p = CoinvariantSpace::new(&alg, n, Group::Dihedral).dim();
        let m = CoinvariantSpace::new(&alg, n, Group::SkewDihedral).dim();
        prop_assert_eq!(c, p + m);
    }

    #[test]
    fn projection_kills_relations(seed in 0u64..10_000, dim in 1usize..=3, n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let v = random_involutive_space::<Q, _>(&mut rng, dim, -2, 2);
        let alg = TensorAlgebra::on_desuspended_dual(&v, 4).unwrap();
        for g in [Group::Cyclic, Group::Dihedral, Group::SkewDihedral] {
            let c = CoinvariantSpace::new(&alg, n, g);
            for w in alg.words(n) {
                let t = tensoralg::Tensor::word(w);
                let rel = t.sub(&alg.rotate(&t));
                prop_assert!(c.project(&alg, &rel).is_zero());
                if g != Group::Cyclic {
                    let s = if g == Group::Dihedral { alg.star(&t) } else { alg.star(&t).neg() };
                    prop_assert!(c.project(&alg, &t.sub(&s)).is_zero());
                }
            }
        }
    }
}
