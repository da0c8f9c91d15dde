//! Import of differential graded algebras and of explicit hat-maps.
//!
//! A DGA `(A, d, μ)` is the structure whose only hat-maps are `m̂₁ = d`
//! and `m̂₂ = μ`; the dual components follow from the hat transport
//! convention of [`crate::hat`].  With this convention `m² = 0` holds
//! exactly when `d² = 0`, `d` is a graded derivation of `μ`, and `μ` is
//! associative.

use exactnum::Scalar;
use graded::InvolutiveGradedSpace;
use tensoralg::word;

use crate::hat::HatTable;
use crate::structure::{AInftyStructure, Flags};
use crate::AInftyError;

/// Multiplication and differential tables on the basis of `V`, each output
/// a sparse combination `Σ c_k e_k`.  Absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DgaTable<F: Scalar> {
    /// `e_a · e_b`.
    pub products: Vec<((usize, usize), Vec<(usize, F)>)>,
    /// `d(e_a)`.
    pub differential: Vec<(usize, Vec<(usize, F)>)>,
}

impl<F: Scalar> DgaTable<F> {
    pub fn new() -> Self {
        DgaTable { products: Vec::new(), differential: Vec::new() }
    }

    pub fn product(mut self, a: usize, b: usize, out: Vec<(usize, F)>) -> Self {
        self.products.push(((a, b), out));
        self
    }

    pub fn diff(mut self, a: usize, out: Vec<(usize, F)>) -> Self {
        self.differential.push((a, out));
        self
    }

    /// The table of the product algebra `A × B`, with the basis of `B`
    /// placed after the `offset` basis vectors of `A`.
    pub fn direct_product(&self, other: &Self, offset: usize) -> Self {
        let shift = |out: &Vec<(usize, F)>| out.iter().map(|(k, c)| (k + offset, c.clone())).collect::<Vec<_>>();
        let mut t = self.clone();
        t.products.extend(other.products.iter().map(|((a, b), out)| ((a + offset, b + offset), shift(out))));
        t.differential.extend(other.differential.iter().map(|(a, out)| (a + offset, shift(out))));
        t
    }
}

/// One value `m̂ₙ(e_{a₁},…,e_{aₙ}) = Σ c_k e_k` of a hat-map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatEntry<F: Scalar> {
    pub args: Vec<usize>,
    pub out: Vec<(usize, F)>,
}

/// Build a structure from hat-map values.  Each value must have degree
/// `Σ|aᵢ| + 2 - n` and arity between `1` and `N`.
pub fn from_hat<F: Scalar>(
    base: InvolutiveGradedSpace<F>,
    max_weight: usize,
    entries: &[HatEntry<F>],
    flags: Flags,
) -> Result<AInftyStructure<F>, AInftyError> {
    let dim = base.dim();
    let name = |i: usize| base.space().name(i).to_string();
    for e in entries {
        let n = e.args.len();
        if n == 0 || n > max_weight {
            return Err(AInftyError::Schema(format!("hat-map arity {n} outside 1..={max_weight}")));
        }
        if e.args.iter().chain(e.out.iter().map(|(k, _)| k)).any(|&i| i >= dim) {
            return Err(AInftyError::Schema("hat-map entry refers to an unknown basis vector".into()));
        }
        let target = e.args.iter().map(|&a| base.degree(a)).sum::<i64>() + 2 - n as i64;
        for (k, c) in &e.out {
            if !c.is_zero() && base.degree(*k) != target {
                let args: Vec<String> = e.args.iter().map(|&a| name(a)).collect();
                return Err(AInftyError::Schema(format!(
                    "m̂{n}({}) has a component on {} of degree {}, expected degree {target}",
                    args.join(","),
                    name(*k),
                    base.degree(*k)
                )));
            }
        }
    }
    let table = HatTable::from_values(&base, entries.iter().map(|e| (word(&e.args), e.out.clone())));
    let alg = AInftyStructure::algebra_for(&base, max_weight)?;
    let images = table.to_images(&alg);
    AInftyStructure::new(base, max_weight, images, flags)
}

/// Import a DGA: `m̂₁ = d`, `m̂₂ = μ`, all higher hat-maps zero.  Products
/// must have degree 0 and the differential degree 1.
pub fn from_dga<F: Scalar>(
    table: &DgaTable<F>,
    base: InvolutiveGradedSpace<F>,
    max_weight: usize,
    flags: Flags,
) -> Result<AInftyStructure<F>, AInftyError> {
    let dim = base.dim();
    let name = |i: usize| base.space().name(i).to_string();
    let check = |ins: &[usize], out: &[(usize, F)], shift: i64, what: &str| -> Result<(), AInftyError> {
        if ins.iter().chain(out.iter().map(|(k, _)| k)).any(|&i| i >= dim) {
            return Err(AInftyError::Schema(format!("{what} entry refers to an unknown basis vector")));
        }
        let target = ins.iter().map(|&a| base.degree(a)).sum::<i64>() + shift;
        for (k, c) in out {
            if !c.is_zero() && base.degree(*k) != target {
                let ins: Vec<String> = ins.iter().map(|&a| name(a)).collect();
                return Err(AInftyError::Schema(format!(
                    "{what} of ({}) has a component on {} of degree {}, expected {target}",
                    ins.join(","),
                    name(*k),
                    base.degree(*k)
                )));
            }
        }
        Ok(())
    };
    let mut entries = Vec::new();
    for ((a, b), out) in &table.products {
        check(&[*a, *b], out, 0, "product")?;
        entries.push(HatEntry { args: vec![*a, *b], out: out.clone() });
    }
    for (a, out) in &table.differential {
        check(&[*a], out, 1, "differential")?;
        entries.push(HatEntry { args: vec![*a], out: out.clone() });
    }
    if max_weight < 2 {
        entries.retain(|e| e.args.len() <= max_weight);
    }
    from_hat(base, max_weight, &entries, flags)
}
