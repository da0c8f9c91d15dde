//! The JSON description of an algebra and its conversion into a structure.
//!
//! Scalars are written as strings `"p/q"` (integers may also be bare JSON
//! numbers); matrices are row-major nested arrays.  Generators of
//! `Σ⁻¹V*` are named after the basis vectors of `V` they are dual to.

use std::collections::BTreeMap;

use ainfty::{from_dga, from_hat, AInftyStructure, DgaTable, Flags, HatEntry};
use deform::{CoefficientRing, DeformationContext, RDerivation};
use exactnum::{Matrix, Scalar};
use graded::{BasisElement, BilinearForm, GradedSpace, InvolutiveGradedSpace};
use serde::Deserialize;
use tensoralg::{word, Derivation, Tensor};

/// Default truncation weight when a file gives none.
pub const DEFAULT_TRUNCATION: usize = 5;

/// A scalar: a string `"p/q"` or a JSON integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn to_scalar<F: Scalar>(&self) -> Result<F, String> {
        match self {
            Coeff::Int(n) => Ok(F::from_i64(*n)),
            Coeff::Text(s) => F::parse(s).map_err(|e| format!("bad scalar {s:?}: {e}")),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    /// `"Q"` (default) or a small prime field `"F_p"`.
    #[serde(default)]
    pub field: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
    pub basis: Vec<BasisEntry>,
    /// `e_j* = Σ_i J[i][j] e_i`; identity when absent.
    #[serde(default)]
    pub involution: Option<Vec<Vec<Coeff>>>,
    #[serde(default)]
    pub form: Option<FormEntry>,
    /// Claimed refinements; by default involutive, and cyclic iff a form
    /// is given.
    #[serde(default)]
    pub flags: Option<FlagsEntry>,
    pub structure: StructureEntry,
    #[serde(default)]
    pub truncation: Option<usize>,
    /// Degree window `[a, b]`; `[0, N]` when absent.
    #[serde(default)]
    pub degrees: Option<[i64; 2]>,
    #[serde(default)]
    pub deformation: Option<DeformationEntry>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntry {
    pub degree: i64,
    pub gram: Vec<Vec<Coeff>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsEntry {
    #[serde(default)]
    pub involutive: bool,
    #[serde(default)]
    pub cyclic: bool,
}

/// How the structure is given.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum StructureEntry {
    /// `m = 0`.
    Zero,
    /// A differential graded algebra: products `e_a·e_b` and `d(e_a)`.
    Dga {
        #[serde(default)]
        products: Vec<ProductEntry>,
        #[serde(default)]
        differential: Vec<DifferentialEntry>,
    },
    /// Values of the operations `m̂ₙ(e_{a₁},…,e_{aₙ})`.
    Hat { entries: Vec<HatValue> },
    /// The dual components: `m(w_k)` as sums of words in the generators.
    Dual { images: BTreeMap<String, Vec<TermEntry>> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub out: BTreeMap<String, Coeff>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialEntry {
    pub of: String,
    pub out: BTreeMap<String, Coeff>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HatValue {
    pub args: Vec<String>,
    pub out: BTreeMap<String, Coeff>,
}

/// `coeff · w_{a₁}…w_{aₙ}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub word: Vec<String>,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationEntry {
    #[serde(default)]
    pub ring: Option<String>,
    #[serde(default)]
    pub flavor: Option<String>,
    /// The degree-1 element to test (zero when absent).
    #[serde(default)]
    pub eta: Vec<ElementTerm>,
    /// The degree-0 gauge parameter (zero when absent).
    #[serde(default)]
    pub y: Vec<ElementTerm>,
}

/// `monomial · ξ` with `ξ` given by its images on the generators.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementTerm {
    pub monomial: String,
    pub images: BTreeMap<String, Vec<TermEntry>>,
}

/// A schema or consistency error, located in the source when possible.
#[derive(Clone, Debug)]
pub struct InputError {
    pub message: String,
    pub line: Option<usize>,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// A parsed document together with its source text (for locating errors).
pub struct Input {
    pub doc: Document,
    source: String,
}

impl Input {
    pub fn parse(source: &str) -> Result<Self, InputError> {
        let doc: Document = serde_json::from_str(source)
            .map_err(|e| InputError { message: e.to_string().replace(&format!(" at line {} column {}", e.line(), e.column()), ""), line: Some(e.line()) })?;
        Ok(Input { doc, source: source.to_string() })
    }

    /// An error pointing at the first line mentioning `needle` (a quoted
    /// JSON string or key), if any.
    pub fn error(&self, needle: Option<&str>, message: impl Into<String>) -> InputError {
        let line = needle.and_then(|n| {
            let quoted = format!("\"{n}\"");
            self.source.lines().position(|l| l.contains(&quoted)).map(|i| i + 1)
        });
        InputError { message: message.into(), line }
    }

    pub fn field(&self) -> Result<Field, InputError> {
        match self.doc.field.as_deref().unwrap_or("Q") {
            "Q" => Ok(Field::Rationals),
            f => match f.strip_prefix("F_").and_then(|p| p.parse::<u64>().ok()) {
                Some(p) if SUPPORTED_PRIMES.contains(&p) => Ok(Field::Prime(p)),
                _ => Err(self.error(Some("field"), format!("unsupported field {f:?}; use \"Q\" or one of F_3, F_5, F_7, F_11, F_13"))),
            },
        }
    }

    /// Truncation weight: the command-line override, else the file's, else 5.
    pub fn truncation(&self, over: Option<usize>) -> Result<usize, InputError> {
        let n = over.or(self.doc.truncation).unwrap_or(DEFAULT_TRUNCATION);
        if n == 0 {
            return Err(self.error(Some("truncation"), "truncation must be at least 1"));
        }
        Ok(n)
    }

    /// Degree window: the command-line override, else the file's, else `[0, N]`.
    pub fn window(&self, over: Option<(i64, i64)>, n: usize) -> Result<(i64, i64), InputError> {
        let (a, b) = over.or(self.doc.degrees.map(|[a, b]| (a, b))).unwrap_or((0, n as i64));
        if a > b {
            return Err(self.error(Some("degrees"), format!("empty degree window {a}..{b}")));
        }
        Ok((a, b))
    }

    fn index(&self, space: &GradedSpace, name: &str, what: &str) -> Result<usize, InputError> {
        space.index_of(name).ok_or_else(|| self.error(Some(name), format!("{what} refers to undeclared basis vector {name:?}")))
    }

    fn matrix<F: Scalar>(&self, rows: &[Vec<Coeff>], dim: usize, what: &str) -> Result<Matrix<F>, InputError> {
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(self.error(Some(what), format!("{what} must be a {dim}x{dim} matrix")));
        }
        let mut m = Matrix::zeros(dim, dim);
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                m.set(i, j, c.to_scalar().map_err(|e| self.error(Some(what), e))?);
            }
        }
        Ok(m)
    }

    fn combination<F: Scalar>(&self, space: &GradedSpace, out: &BTreeMap<String, Coeff>, what: &str) -> Result<Vec<(usize, F)>, InputError> {
        out.iter()
            .map(|(name, c)| Ok((self.index(space, name, what)?, c.to_scalar().map_err(|e| self.error(Some(name), e))?)))
            .collect()
    }

    /// A sum of words in the generators.
    fn tensor<F: Scalar>(&self, space: &GradedSpace, terms: &[TermEntry]) -> Result<Tensor<F>, InputError> {
        let mut t = Tensor::zero();
        for term in terms {
            let letters = term.word.iter().map(|n| self.index(space, n, "word")).collect::<Result<Vec<_>, _>>()?;
            t.add_term(word(&letters), term.coeff.to_scalar().map_err(|e| self.error(term.word.first().map(String::as_str), e))?);
        }
        Ok(t)
    }

    pub fn base<F: Scalar>(&self) -> Result<InvolutiveGradedSpace<F>, InputError> {
        let basis = self.doc.basis.iter().map(|b| BasisElement { name: b.name.clone(), degree: b.degree }).collect();
        let space = GradedSpace::new(basis).map_err(|e| self.error(Some("basis"), e.to_string()))?;
        let dim = space.dim();
        let involution = match &self.doc.involution {
            Some(rows) => self.matrix(rows, dim, "involution")?,
            None => Matrix::identity(dim),
        };
        let form = match &self.doc.form {
            Some(f) => Some(BilinearForm::new(f.degree, self.matrix(&f.gram, dim, "gram")?)),
            None => None,
        };
        InvolutiveGradedSpace::new(space, involution, form).map_err(|e| self.error(Some("involution"), e.to_string()))
    }

    pub fn flags(&self) -> Flags {
        match &self.doc.flags {
            Some(f) => Flags { involutive: f.involutive, cyclic: f.cyclic },
            None => Flags { involutive: true, cyclic: self.doc.form.is_some() },
        }
    }

    /// The structure, built at truncation `max_weight`.  Files describe `m`
    /// completely (components above the listed ones are zero), so any
    /// truncation can be requested.
    pub fn structure<F: Scalar>(&self, max_weight: usize) -> Result<AInftyStructure<F>, InputError> {
        let base = self.base::<F>()?;
        let flags = self.flags();
        if flags.cyclic && base.form().is_none() {
            return Err(self.error(Some("flags"), "a cyclic structure needs a \"form\""));
        }
        let space = base.space().clone();
        let built = match &self.doc.structure {
            StructureEntry::Zero => AInftyStructure::zero(base, max_weight, flags),
            StructureEntry::Dga { products, differential } => {
                let mut table = DgaTable::new();
                for p in products {
                    let a = self.index(&space, &p.left, "product")?;
                    let b = self.index(&space, &p.right, "product")?;
                    table = table.product(a, b, self.combination(&space, &p.out, "product")?);
                }
                for d in differential {
                    let a = self.index(&space, &d.of, "differential")?;
                    table = table.diff(a, self.combination(&space, &d.out, "differential")?);
                }
                from_dga(&table, base, max_weight.max(2), flags).and_then(|s| s.retruncate(max_weight))
            }
            StructureEntry::Hat { entries } => {
                let mut values = Vec::new();
                let mut arity = 1;
                for e in entries {
                    let args = e.args.iter().map(|n| self.index(&space, n, "hat-map")).collect::<Result<Vec<_>, _>>()?;
                    arity = arity.max(args.len());
                    values.push(HatEntry { args, out: self.combination(&space, &e.out, "hat-map")? });
                }
                from_hat(base, max_weight.max(arity), &values, flags).and_then(|s| s.retruncate(max_weight))
            }
            StructureEntry::Dual { images } => {
                let mut tensors = vec![Tensor::zero(); space.dim()];
                let mut top = 1;
                for (name, terms) in images {
                    let k = self.index(&space, name, "image")?;
                    let t = self.tensor(&space, terms)?;
                    top = top.max(t.max_weight().unwrap_or(1));
                    tensors[k] = t;
                }
                AInftyStructure::new(base, max_weight.max(top), tensors, flags).and_then(|s| s.retruncate(max_weight))
            }
        };
        built.map_err(|e| self.error(Some("structure"), e.to_string()))
    }

    /// Deformation settings: ring and flavor from the command line, else
    /// from the file, else `eps^2` and the strongest flavor the flags claim.
    pub fn deformation_setup(&self, ring: Option<&str>, flavor: Option<&str>) -> Result<(CoefficientRing, ainfty::Flavor), InputError> {
        let entry = self.doc.deformation.clone().unwrap_or_default();
        let ring_text = ring.map(str::to_string).or(entry.ring).unwrap_or_else(|| "eps^2".into());
        let ring = CoefficientRing::parse(&ring_text).map_err(|e| self.error(Some("ring"), e.to_string()))?;
        let flags = self.flags();
        let flavor = match flavor.map(str::to_string).or(entry.flavor) {
            Some(f) => ainfty::Flavor::parse(&f)
                .ok_or_else(|| self.error(Some("flavor"), format!("unknown flavor {f:?}; use plain, inv, cyc or cycinv")))?,
            None => match (flags.involutive, flags.cyclic) {
                (true, true) => ainfty::Flavor::CyclicInvolutive,
                (true, false) => ainfty::Flavor::Involutive,
                (false, true) => ainfty::Flavor::Cyclic,
                (false, false) => ainfty::Flavor::Plain,
            },
        };
        Ok((ring, flavor))
    }

    /// The element `Σ monomial · ξ` of `Der ⊗ R₊` of the given degree.
    pub fn element<F: Scalar>(&self, c: &DeformationContext<F>, terms: &[ElementTerm], degree: i64) -> Result<RDerivation<F>, InputError> {
        let space = c.structure().base().space().clone();
        let mut out = RDerivation::zero(degree);
        for t in terms {
            let mono = c.ring().monomial(&t.monomial).map_err(|e| self.error(Some(&t.monomial), e.to_string()))?;
            let mut images = vec![Tensor::zero(); space.dim()];
            for (name, words) in &t.images {
                images[self.index(&space, name, "image")?] = self.tensor(&space, words)?;
            }
            let xi = Derivation::new(c.algebra(), degree, images).map_err(|e| self.error(Some(&t.monomial), e.to_string()))?;
            let term = c.element(mono, xi).map_err(|e| self.error(Some(&t.monomial), e.to_string()))?;
            out = out.add(&term).map_err(|e| self.error(Some(&t.monomial), e.to_string()))?;
        }
        Ok(out)
    }
}

/// Primes accepted for `"F_p"` fields.
pub const SUPPORTED_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
}
