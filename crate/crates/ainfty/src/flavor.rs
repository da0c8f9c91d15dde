//! The flavored subspaces of derivations: all derivations, the
//! involution-invariant ones `Der₊`, the cyclic ones `Der^cycl`, and the
//! invariant cyclic ones `Der^cycl₊`.

use exactnum::{Echelon, Scalar, SparseVec};
use tensoralg::DerivationBasis;

use crate::cyclic::cyclic_subspace;
use crate::structure::{AInftyStructure, Flavor};
use crate::AInftyError;

/// A basis (as coordinates in the elementary basis of degree-`h`,
/// weight-`n` derivations) of the flavored subspace.  Basis vectors are in
/// reduced echelon form, so the result is canonical.
pub fn flavored_subspace<F: Scalar>(
    s: &AInftyStructure<F>,
    flavor: Flavor,
    degree: i64,
    weight: usize,
) -> Result<(DerivationBasis, Vec<SparseVec<F>>), AInftyError> {
    let alg = s.algebra();
    let (basis, spanning) = if flavor.cyclic() {
        cyclic_subspace(alg, s.base(), degree, weight)?
    } else {
        let b = DerivationBasis::new(alg, degree, [weight]);
        let units = (0..b.len()).map(SparseVec::unit).collect();
        (b, units)
    };
    let vectors: Vec<SparseVec<F>> = if flavor.involutive() {
        if flavor.cyclic() && !s.base().form_is_invariant() {
            return Err(AInftyError::Schema("the form is not invariant under the involution".into()));
        }
        let mut out = Vec::with_capacity(spanning.len());
        for v in &spanning {
            let xi = basis.derivation(alg, v);
            let (plus, _) = alg.plus_minus_split(&xi)?;
            out.push(basis.coordinates(&plus)?);
        }
        out
    } else {
        spanning
    };
    let ech = Echelon::from_vectors(basis.len(), &vectors);
    Ok((basis, ech.rows().to_vec()))
}
