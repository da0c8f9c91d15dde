//! Random valid structures of every flavor, for property tests and
//! randomized validation.
//!
//! A structure is drawn from a menu of small algebras (units, dual
//! numbers, differential pairs, the interval, products, zero structures
//! with random forms), moved by a random degree-preserving change of basis,
//! and then conjugated by `e^{ad y}` for a random flavored degree-0
//! derivation `y` of weight at least 2.  Conjugation and basis change
//! preserve every structure identity, so the results are valid by
//! construction while having nonzero higher components.

use exactnum::{Matrix, Scalar, SparseVec};
use graded::{parity_sign, BilinearForm, GradedSpace, InvolutiveGradedSpace};
use rand::seq::SliceRandom;
use rand::Rng;
use tensoralg::{Derivation, TensorAlgebra};

use crate::dga::{from_dga, DgaTable};
use crate::flavor::flavored_subspace;
use crate::structure::{AInftyStructure, Flavor};
use crate::AInftyError;

/// `e^{ad y}(m) = Σ_k ad_y^k(m)/k!`; the series terminates because `y`
/// has no components of weight below 2.
pub fn conjugate<F: Scalar>(alg: &TensorAlgebra<F>, m: &Derivation<F>, y: &Derivation<F>) -> Result<Derivation<F>, AInftyError> {
    if y.weights().iter().any(|&w| w < 2) {
        return Err(AInftyError::Schema("conjugating derivation must have weight at least 2".into()));
    }
    let mut total = m.clone();
    let mut term = m.clone();
    let mut k = 1i64;
    loop {
        term = alg.commutator(y, &term)?;
        if term.is_zero() {
            return Ok(total);
        }
        let inv = F::from_i64(k).inv().ok_or(AInftyError::SmallCharacteristic)?;
        term = term.scale(&inv);
        total = total.add(&term)?;
        k += 1;
    }
}

/// A random derivation in the flavored subspace of degree `h`, with
/// components in `weights`; each basis coefficient is nonzero with
/// probability `density` and drawn from `-2..=2`.
pub fn random_flavored_derivation<F: Scalar, R: Rng>(
    rng: &mut R,
    s: &AInftyStructure<F>,
    flavor: Flavor,
    degree: i64,
    weights: impl IntoIterator<Item = usize>,
    density: f64,
) -> Result<Derivation<F>, AInftyError> {
    let alg = s.algebra();
    let mut xi = Derivation::zero(alg, degree);
    for n in weights {
        if n > alg.max_weight() {
            continue;
        }
        let (basis, vecs) = flavored_subspace(s, flavor, degree, n)?;
        let mut v = SparseVec::new();
        for b in &vecs {
            if rng.gen_bool(density) {
                let c = F::from_i64(*[-2, -1, 1, 2].choose(rng).expect("nonempty"));
                v = v.axpy(&c, b);
            }
        }
        xi = xi.add(&basis.derivation(alg, &v))?;
    }
    Ok(xi)
}

/// One summand of a random product algebra.
struct Block<F: Scalar> {
    degrees: Vec<i64>,
    involution: Matrix<F>,
    table: DgaTable<F>,
    /// `(form degree, Gram matrix)` for blocks carrying a form.
    form: Option<(i64, Matrix<F>)>,
}

fn diag<F: Scalar>(signs: &[i64]) -> Matrix<F> {
    let mut m = Matrix::zeros(signs.len(), signs.len());
    for (i, s) in signs.iter().enumerate() {
        m.set(i, i, F::from_i64(*s));
    }
    m
}

fn sign<R: Rng>(rng: &mut R) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

fn unit_block<F: Scalar, R: Rng>(rng: &mut R) -> Block<F> {
    let c = *[1, 2, -1].choose(rng).expect("nonempty");
    Block {
        degrees: vec![0],
        involution: Matrix::identity(1),
        table: DgaTable::new().product(0, 0, vec![(0, F::one())]),
        form: Some((0, Matrix::from_i64(&[&[c]]))),
    }
}

fn dual_numbers_block<F: Scalar, R: Rng>(rng: &mut R, with_form: bool) -> Block<F> {
    let t = rng.gen_range(-2..=2);
    let s = if with_form { 1 } else { sign(rng) };
    Block {
        degrees: vec![0, t],
        involution: diag(&[1, s]),
        table: crate::samples::dual_numbers_table(),
        form: Some((-t, Matrix::from_i64(&[&[0, 1], &[1, 0]]))),
    }
}

fn split_block<F: Scalar, R: Rng>(rng: &mut R) -> Block<F> {
    let swap = rng.gen_bool(0.5);
    let involution = if swap { Matrix::from_i64(&[&[0, 1], &[1, 0]]) } else { Matrix::identity(2) };
    Block {
        degrees: vec![0, 0],
        involution,
        table: DgaTable::new().product(0, 0, vec![(0, F::one())]).product(1, 1, vec![(1, F::one())]),
        form: Some((0, Matrix::identity(2))),
    }
}

fn differential_pair_block<F: Scalar, R: Rng>(rng: &mut R) -> Block<F> {
    let t = rng.gen_range(-2..=1);
    let s = sign(rng);
    Block {
        degrees: vec![t, t + 1],
        involution: diag(&[s, s]),
        table: DgaTable::new().diff(0, vec![(1, F::one())]),
        form: None,
    }
}

/// `d x = y` with `x` in odd degree `t` paired against `y`: a cyclic
/// complex for the form of degree `-(2t+1)`.
fn cyclic_differential_block<F: Scalar, R: Rng>(rng: &mut R) -> Block<F> {
    let t = *[-1, 1].choose(rng).expect("nonempty");
    let c = *[1, -1, 2].choose(rng).expect("nonempty");
    let s = sign(rng);
    Block {
        degrees: vec![t, t + 1],
        involution: diag(&[s, s]),
        table: DgaTable::new().diff(0, vec![(1, F::one())]),
        form: Some((-(2 * t + 1), Matrix::from_i64(&[&[0, c], &[c, 0]]))),
    }
}

fn interval_block<F: Scalar>() -> Block<F> {
    let one = F::one;
    Block {
        degrees: vec![0, 0, 1],
        involution: Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]),
        table: DgaTable::new()
            .product(0, 0, vec![(0, one())])
            .product(1, 1, vec![(1, one())])
            .product(0, 2, vec![(2, one())])
            .product(2, 1, vec![(2, one())])
            .diff(0, vec![(2, -one())])
            .diff(1, vec![(2, one())]),
        form: None,
    }
}

fn zero_block<F: Scalar, R: Rng>(rng: &mut R) -> Block<F> {
    Block {
        degrees: vec![rng.gen_range(-2..=2)],
        involution: diag(&[sign(rng)]),
        table: DgaTable::new(),
        form: None,
    }
}

/// Zero-product summand carrying a form of degree `d`: a self-paired
/// vector (when possible) or a pair of vectors in complementary degrees.
fn zero_form_block<F: Scalar, R: Rng>(rng: &mut R, d: i64, room: usize) -> Option<Block<F>> {
    let c = *[1, 2, -1, 3].choose(rng).expect("nonempty");
    let s = sign(rng);
    let self_paired = d.rem_euclid(4) == 0;
    if self_paired && (room == 1 || rng.gen_bool(0.4)) {
        return Some(Block {
            degrees: vec![-d / 2],
            involution: diag(&[s]),
            table: DgaTable::new(),
            form: Some((d, Matrix::from_i64(&[&[c]]))),
        });
    }
    if room < 2 {
        return None;
    }
    let t = rng.gen_range(-2..=2);
    let u = -d - t;
    let back = c * i64::from(parity_sign(t * u));
    let gram = if t == u {
        // one degree: a hyperbolic plane, graded symmetric as required
        if t.rem_euclid(2) == 1 {
            Matrix::from_i64(&[&[0, c], &[-c, 0]])
        } else {
            Matrix::from_i64(&[&[0, c], &[c, 0]])
        }
    } else {
        Matrix::from_i64(&[&[0, c], &[back, 0]])
    };
    Some(Block { degrees: vec![t, u], involution: diag(&[s, s]), table: DgaTable::new(), form: Some((d, gram)) })
}

fn block_sum<F: Scalar>(blocks: &[Block<F>], with_form: bool) -> Result<(InvolutiveGradedSpace<F>, DgaTable<F>), AInftyError> {
    let dim: usize = blocks.iter().map(|b| b.degrees.len()).sum();
    let mut pairs = Vec::with_capacity(dim);
    let mut j = Matrix::zeros(dim, dim);
    let mut g = Matrix::zeros(dim, dim);
    let mut table = DgaTable::new();
    let mut offset = 0;
    let mut form_degree = None;
    for b in blocks {
        let n = b.degrees.len();
        for (i, &deg) in b.degrees.iter().enumerate() {
            pairs.push((format!("e{}", offset + i), deg));
            for k in 0..n {
                j.set(offset + i, offset + k, b.involution.get(i, k).clone());
                if let Some((_, gram)) = &b.form {
                    g.set(offset + i, offset + k, gram.get(i, k).clone());
                }
            }
        }
        if let Some((d, _)) = &b.form {
            form_degree = Some(*d);
        }
        table = table.direct_product(&b.table, offset);
        offset += n;
    }
    let space = GradedSpace::from_pairs(pairs)?;
    let form = if with_form { Some(BilinearForm::new(form_degree.unwrap_or(0), g)) } else { None };
    Ok((InvolutiveGradedSpace::new(space, j, form)?, table))
}

/// A random invertible matrix preserving degrees (identity with
/// probability 1/3).
pub fn random_basis_change<F: Scalar, R: Rng>(rng: &mut R, degrees: &[i64]) -> Matrix<F> {
    let n = degrees.len();
    if rng.gen_bool(1.0 / 3.0) {
        return Matrix::identity(n);
    }
    loop {
        let mut p = Matrix::zeros(n, n);
        for i in 0..n {
            for k in 0..n {
                if degrees[i] == degrees[k] {
                    let x = if i == k { *[1, -1, 2].choose(rng).expect("nonempty") } else { rng.gen_range(-1..=1) };
                    p.set(i, k, F::from_i64(x));
                }
            }
        }
        if p.inverse().is_some() {
            return p;
        }
    }
}

fn draw_blocks<F: Scalar, R: Rng>(rng: &mut R, cyclic: bool) -> Vec<Block<F>> {
    let mut blocks: Vec<Block<F>> = Vec::new();
    let mut dim = 0usize;
    if cyclic {
        let first: Block<F> = match rng.gen_range(0..5) {
            0 => unit_block(rng),
            1 => dual_numbers_block(rng, true),
            2 => split_block(rng),
            3 => cyclic_differential_block(rng),
            _ => {
                let d = rng.gen_range(-4..=4);
                match zero_form_block(rng, d, 3) {
                    Some(b) => b,
                    None => unit_block(rng),
                }
            }
        };
        let d = first.form.as_ref().expect("cyclic blocks carry forms").0;
        dim += first.degrees.len();
        blocks.push(first);
        while dim < 3 && rng.gen_bool(0.5) {
            let b = if d == 0 && rng.gen_bool(0.4) { Some(unit_block(rng)) } else { zero_form_block(rng, d, 3 - dim) };
            match b {
                Some(b) => {
                    dim += b.degrees.len();
                    blocks.push(b);
                }
                None => break,
            }
        }
    } else {
        loop {
            let b: Block<F> = match rng.gen_range(0..6) {
                0 => unit_block(rng),
                1 => dual_numbers_block(rng, false),
                2 => split_block(rng),
                3 => differential_pair_block(rng),
                4 => interval_block(),
                _ => zero_block(rng),
            };
            if dim + b.degrees.len() > 3 {
                if dim == 0 {
                    continue;
                }
                break;
            }
            dim += b.degrees.len();
            blocks.push(b);
            if dim == 3 || rng.gen_bool(0.5) {
                break;
            }
        }
    }
    blocks
}

/// A random valid structure of the given flavor on a space of dimension
/// at most 3 with degrees in `[-2, 2]`, truncated at weight `N`.
///
/// `density` controls how many basis directions the conjugating
/// derivation uses.
pub fn random_structure<F: Scalar, R: Rng>(rng: &mut R, flavor: Flavor, max_weight: usize, density: f64) -> Result<AInftyStructure<F>, AInftyError> {
    loop {
        let blocks = draw_blocks::<F, R>(rng, flavor.cyclic());
        let (base, table) = block_sum(&blocks, flavor.cyclic())?;
        let s = from_dga(&table, base, max_weight, flavor.flags())?;
        if flavor.cyclic() && !s.check_cyclic()?.passed() {
            // some graded dual-number forms are not cyclic; draw again
            continue;
        }
        let p = random_basis_change(rng, &s.base().degrees());
        let s = s.change_basis(&p)?;
        let y = random_flavored_derivation(rng, &s, flavor, 0, 2..=max_weight, density)?;
        let m = conjugate(s.algebra(), s.m(), &y)?;
        return s.with_m(m);
    }
}
