//! Brute-force enumeration over small prime fields: the Maurer–Cartan set
//! over `F_p[ε]/(ε²)` and its gauge orbits are listed element by element,
//! and the orbit count is compared with `p^dim` of the infinitesimal moduli.

use std::collections::HashMap;

use ainfty::samples::{dual_numbers, ground_field, ground_field_zero};
use ainfty::{AInftyStructure, Flavor};
use deform::*;
use exactnum::{Fp, Scalar};

/// Number of gauge orbits on the MC set, found as connected components of
/// the graph joining `ξ` to `e^{εb}·ξ` for `b` running over a basis of `g⁰`.
fn orbit_count<const P: u64>(s: &AInftyStructure<Fp<P>>, flavor: Flavor) -> Option<(usize, usize)> {
    let c = DeformationContext::new(s.clone(), CoefficientRing::truncated(2).unwrap(), flavor).ok()?;
    let eps = c.ring().power(0, 1).unwrap();
    let ones = flavored_cochains(s, flavor, 1, s.max_weight()).unwrap();
    let zeros = flavored_cochains(s, flavor, 0, s.max_weight()).unwrap();
    let total = (P as usize).checked_pow(ones.len() as u32)?;
    assert!(total <= 50_000, "enumeration too large: {P}^{}", ones.len());

    let mut mc = Vec::new();
    for index in 0..total {
        let mut eta = RDerivation::zero(1);
        let mut rest = index;
        for b in &ones {
            let k = (rest % P as usize) as i64;
            rest /= P as usize;
            eta.add_term(eps.clone(), b, &Fp::<P>::from_i64(k)).unwrap();
        }
        if c.mc_check(&eta).unwrap().is_mc() {
            mc.push(eta);
        }
    }
    let position: HashMap<RDerivation<Fp<P>>, usize> = mc.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let mut parent: Vec<usize> = (0..mc.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, xi) in mc.iter().enumerate() {
        for b in &zeros {
            let moved = c.gauge(&RDerivation::term(eps.clone(), b.clone()), xi).unwrap();
            let j = *position.get(&moved).expect("gauge leaves the MC set");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let orbits = (0..mc.len()).filter(|&i| find(&mut parent, i) == i).count();
    Some((orbits, infinitesimal_moduli(s, flavor).unwrap().dim))
}

fn check<const P: u64>(s: AInftyStructure<Fp<P>>, name: &str) -> usize {
    let mut checked = 0;
    for flavor in Flavor::ALL {
        if let Some((orbits, dim)) = orbit_count(&s, flavor) {
            assert_eq!(orbits, (P as usize).pow(dim as u32), "{name}, {}, p = {P}", flavor.label());
            checked += 1;
        }
    }
    checked
}

#[test]
fn orbit_counts_over_f3() {
    assert!(check(ground_field_zero::<Fp<3>>(2), "zero product") > 0);
    assert!(check(ground_field_zero::<Fp<3>>(3), "zero product") > 0);
    assert!(check(ground_field::<Fp<3>>(2), "ground field") > 0);
    assert!(check(dual_numbers::<Fp<3>>(2), "dual numbers") > 0);
}

#[test]
fn orbit_counts_over_f5() {
    assert!(check(ground_field_zero::<Fp<5>>(2), "zero product") > 0);
    assert!(check(ground_field::<Fp<5>>(3), "ground field") > 0);
}
