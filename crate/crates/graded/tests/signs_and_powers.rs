use exactnum::{Matrix, Scalar, Q};
use graded::random::random_involutive_space;
use graded::{
    apply_rotation, apply_tensor_involution, desuspended_dual, reversal_sign, rotation_matrix, tensor_involution,
    word_count, GradedSpace, InvolutiveGradedSpace,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn space(seed: u64, dim: usize) -> InvolutiveGradedSpace<Q> {
    let mut rng = StdRng::seed_from_u64(seed);
    random_involutive_space(&mut rng, dim, -2, 2)
}

fn unit(size: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); size];
    v[i] = Q::one();
    v
}

#[test]
fn tensor_involution_on_w_of_the_ground_field() {
    let v = InvolutiveGradedSpace::<Q>::trivial(GradedSpace::from_pairs([("1", 0)]).unwrap());
    let w = desuspended_dual(&v);
    assert_eq!(tensor_involution(&w, 1), w.involution().clone());
    assert_eq!(tensor_involution(&w, 2), Matrix::from_i64(&[&[-1]]));
    assert_eq!(tensor_involution(&w, 3), Matrix::from_i64(&[&[1]]));
}

#[test]
fn rotation_matrix_of_odd_line() {
    let v = InvolutiveGradedSpace::<Q>::trivial(GradedSpace::from_pairs([("1", 0)]).unwrap());
    let w = desuspended_dual(&v);
    assert_eq!(rotation_matrix(&w, 2), Matrix::from_i64(&[&[-1]]));
    assert_eq!(rotation_matrix(&w, 3), Matrix::from_i64(&[&[1]]));
}

proptest! {
    #[test]
    fn reversal_sign_is_reversal_symmetric(degs in prop::collection::vec(-3i64..=3, 0..7)) {
        let mut rev = degs.clone();
        rev.reverse();
        prop_assert_eq!(reversal_sign(&degs), reversal_sign(&rev));
    }

    #[test]
    fn dihedral_relations(seed in 0u64..10_000, dim in 1usize..=3, n in 1usize..=4) {
        let w = space(seed, dim);
        let size = word_count(dim, n);
        for i in 0..size {
            let e = unit(size, i);
            // r^n = id
            let mut x = e.clone();
            for _ in 0..n {
                x = apply_rotation(&w, n, &x);
            }
            prop_assert_eq!(&x, &e);
            // s^2 = id
            let s = apply_tensor_involution(&w, n, &e);
            prop_assert_eq!(&apply_tensor_involution(&w, n, &s), &e);
            // s r s = r^{-1} = r^{n-1}
            let srs = apply_tensor_involution(&w, n, &apply_rotation(&w, n, &s));
            let mut rinv = e.clone();
            for _ in 0..n - 1 {
                rinv = apply_rotation(&w, n, &rinv);
            }
            prop_assert_eq!(srs, rinv);
        }
    }

    #[test]
    fn double_dual_is_identity(seed in 0u64..10_000, dim in 0usize..=3) {
        let v = space(seed, dim);
        prop_assert_eq!(v.dualize().dualize(), v);
    }

    #[test]
    fn tensor_involution_matrix_squares_to_identity(seed in 0u64..10_000, dim in 1usize..=2, n in 1usize..=3) {
        let w = space(seed, dim);
        let s = tensor_involution(&w, n);
        prop_assert!(s.mul(&s).unwrap().is_identity());
    }
}
