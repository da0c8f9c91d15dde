//! The complexes by name, and cohomology tables with the stability probe.

use std::fmt;

use ainfty::AInftyStructure;
use exactnum::Scalar;
use tensoralg::Group;

use crate::blocks::Part;
use crate::complex::{filtration_piece, CochainComplex, CohomologyRow, CohomologyTable, Stability};
use crate::cyclic::coinvariant_complex;
use crate::derivations::{derivation_complex, DerivationKind};
use crate::CohomError;

/// The cohomology theories that can be computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Hochschild(Part),
    Cyclic,
    Dihedral,
    SkewDihedral,
    CyclicDerivations(Part),
}

impl Theory {
    pub const ALL: [Theory; 9] = [
        Theory::Hochschild(Part::All),
        Theory::Hochschild(Part::Plus),
        Theory::Hochschild(Part::Minus),
        Theory::Cyclic,
        Theory::Dihedral,
        Theory::SkewDihedral,
        Theory::CyclicDerivations(Part::All),
        Theory::CyclicDerivations(Part::Plus),
        Theory::CyclicDerivations(Part::Minus),
    ];

    /// Command-line name: `hh`, `hh+`, `hh-`, `hc`, `hd+`, `hd-`,
    /// `cycder`, `cycder+`, `cycder-`.
    pub fn name(self) -> String {
        match self {
            Theory::Hochschild(p) => format!("hh{}", p.suffix()),
            Theory::Cyclic => "hc".into(),
            Theory::Dihedral => "hd+".into(),
            Theory::SkewDihedral => "hd-".into(),
            Theory::CyclicDerivations(p) => format!("cycder{}", p.suffix()),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Theory::ALL.into_iter().find(|t| t.name() == s)
    }

    /// The two summands of a decomposable theory.
    pub fn summands(self) -> Option<(Theory, Theory)> {
        match self {
            Theory::Hochschild(Part::All) => Some((Theory::Hochschild(Part::Plus), Theory::Hochschild(Part::Minus))),
            Theory::Cyclic => Some((Theory::Dihedral, Theory::SkewDihedral)),
            Theory::CyclicDerivations(Part::All) => {
                Some((Theory::CyclicDerivations(Part::Plus), Theory::CyclicDerivations(Part::Minus)))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// How a complex was built, so that it can be rebuilt one weight higher.
#[derive(Clone, Debug)]
pub(crate) struct Recipe<F: Scalar> {
    structure: AInftyStructure<F>,
    theory: Theory,
}

/// Assemble the complex of a theory at truncation `N` over the degree
/// window `[a, b]`.
pub fn build<F: Scalar>(s: &AInftyStructure<F>, theory: Theory, max_weight: usize, window: (i64, i64)) -> Result<CochainComplex<F>, CohomError> {
    let mut c = match theory {
        Theory::Hochschild(part) => {
            derivation_complex(s, DerivationKind { part, cyclic: false }, max_weight, window, 1, format!("CH{}", part.suffix()))?
        }
        Theory::Cyclic => coinvariant_complex(s, Group::Cyclic, max_weight, window)?,
        Theory::Dihedral => coinvariant_complex(s, Group::Dihedral, max_weight, window)?,
        Theory::SkewDihedral => coinvariant_complex(s, Group::SkewDihedral, max_weight, window)?,
        Theory::CyclicDerivations(part) => {
            derivation_complex(s, DerivationKind { part, cyclic: true }, max_weight, window, 0, format!("Der^cycl{}", part.suffix()))?
        }
    };
    c.recipe = Some(Recipe { structure: s.clone(), theory });
    Ok(c)
}

/// Cohomology dimensions over the window of `c`, each degree flagged
/// stable when rebuilding the complex at `N + 1` (and taking the same
/// filtration piece) leaves the cochain dimension and the ranks of the
/// incoming and outgoing differentials unchanged.  If the rebuild is not
/// exact (the structure is not known to square to zero one weight higher)
/// every degree is flagged truncated and the reason is recorded.
pub fn cohomology_dims<F: Scalar>(c: &CochainComplex<F>) -> CohomologyTable {
    let probe: Result<Option<CochainComplex<F>>, CohomError> = match &c.recipe {
        None => Ok(None),
        Some(r) => build(&r.structure, r.theory, c.max_weight() + 1, c.window()).and_then(|p| match c.level() {
            Some(n) => filtration_piece(&p, n).map(Some),
            None => Ok(Some(p)),
        }),
    };
    let probe_note = match &probe {
        Err(e) => Some(format!("stability probe at N = {} unavailable: {e}", c.max_weight() + 1)),
        _ => None,
    };
    let rows = c
        .degrees()
        .map(|k| {
            let stability = match &probe {
                Err(_) => Stability::Truncated,
                Ok(None) => Stability::Unprobed,
                Ok(Some(p)) => {
                    if p.dim(k) == c.dim(k) && p.rank(k) == c.rank(k) && p.rank(k - 1) == c.rank(k - 1) {
                        Stability::Stable
                    } else {
                        Stability::Truncated
                    }
                }
            };
            CohomologyRow { degree: k, cochain_dim: c.dim(k), dim: c.cohomology_dim(k), stability }
        })
        .collect();
    CohomologyTable { label: c.label().to_string(), max_weight: c.max_weight(), rows, probe_note }
}
