//! Small named structures used in examples, tests and documentation.

use exactnum::{Matrix, Scalar};
use graded::{BilinearForm, GradedSpace, InvolutiveGradedSpace};

use crate::dga::{from_dga, DgaTable};
use crate::structure::{AInftyStructure, Flags};

fn space(pairs: &[(&str, i64)]) -> GradedSpace {
    GradedSpace::from_pairs(pairs.iter().copied()).expect("distinct names")
}

const ALL: Flags = Flags { involutive: true, cyclic: true };

/// The ground field `k` in degree 0: unit `1·1 = 1`, identity involution,
/// form `⟨1,1⟩ = 1`.
pub fn ground_field<F: Scalar>(max_weight: usize) -> AInftyStructure<F> {
    let base = InvolutiveGradedSpace::trivial(space(&[("1", 0)]))
        .with_form(BilinearForm::new(0, Matrix::identity(1)))
        .expect("valid form");
    let table = DgaTable::new().product(0, 0, vec![(0, F::one())]);
    from_dga(&table, base, max_weight, ALL).expect("valid table")
}

/// The one-dimensional space `k` in degree 0 with `m = 0`, identity
/// involution and form `⟨1,1⟩ = 1`.
pub fn ground_field_zero<F: Scalar>(max_weight: usize) -> AInftyStructure<F> {
    let base = InvolutiveGradedSpace::trivial(space(&[("1", 0)]))
        .with_form(BilinearForm::new(0, Matrix::identity(1)))
        .expect("valid form");
    AInftyStructure::zero(base, max_weight, ALL).expect("zero structure")
}

/// The dual numbers `k[x]/(x²)` in degree 0 with basis `{1, x}`, identity
/// involution and the trace form `⟨1,x⟩ = ⟨x,1⟩ = 1`.
pub fn dual_numbers<F: Scalar>(max_weight: usize) -> AInftyStructure<F> {
    let gram = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    let base = InvolutiveGradedSpace::trivial(space(&[("1", 0), ("x", 0)]))
        .with_form(BilinearForm::new(0, gram))
        .expect("valid form");
    from_dga(&dual_numbers_table(), base, max_weight, ALL).expect("valid table")
}

/// Multiplication table of `k[x]/(x²)` on the basis `{1, x}`.
pub fn dual_numbers_table<F: Scalar>() -> DgaTable<F> {
    DgaTable::new()
        .product(0, 0, vec![(0, F::one())])
        .product(0, 1, vec![(1, F::one())])
        .product(1, 0, vec![(1, F::one())])
}

/// Cochains on the interval: idempotents `e0, e1` in degree 0 and `f` in
/// degree 1 with `e0·f = f = f·e1`, `d e0 = -f`, `d e1 = f`.  The
/// involution reverses the interval: `e0 ↔ e1`, `f ↦ -f`.
pub fn interval<F: Scalar>(max_weight: usize) -> AInftyStructure<F> {
    let j = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    let base = InvolutiveGradedSpace::new(space(&[("e0", 0), ("e1", 0), ("f", 1)]), j, None).expect("valid involution");
    let one = F::one;
    let table = DgaTable::new()
        .product(0, 0, vec![(0, one())])
        .product(1, 1, vec![(1, one())])
        .product(0, 2, vec![(2, one())])
        .product(2, 1, vec![(2, one())])
        .diff(0, vec![(2, -one())])
        .diff(1, vec![(2, one())]);
    from_dga(&table, base, max_weight, Flags { involutive: true, cyclic: false }).expect("valid table")
}
