//! Truncated polynomial coefficient rings
//! `R = k[ε₁,…,ε_r]/(ε₁^{q₁},…,ε_r^{q_r})`, augmented by `εᵢ ↦ 0`.
//! The maximal ideal `R₊` is spanned by the non-constant monomials.

use std::fmt;

use crate::DeformError;

/// An exponent vector; the constant monomial is all zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// A truncated polynomial ring in named nilpotent variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientRing {
    names: Vec<String>,
    bounds: Vec<u32>,
}

impl CoefficientRing {
    /// `k[ε]/(ε^q)`; `q = 1` is the ground field itself.
    pub fn truncated(q: u32) -> Result<Self, DeformError> {
        Self::new(vec![("eps".to_string(), q)])
    }

    /// Variables with their nilpotency bounds (`εᵢ^{qᵢ} = 0`, `qᵢ ≥ 1`).
    pub fn new(vars: Vec<(String, u32)>) -> Result<Self, DeformError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut bounds = Vec::with_capacity(vars.len());
        for (name, q) in vars {
            if q == 0 {
                return Err(DeformError::Ring(format!("variable {name} needs a bound ≥ 1")));
            }
            if name.is_empty() || names.contains(&name) {
                return Err(DeformError::Ring(format!("bad or repeated variable name {name:?}")));
            }
            names.push(name);
            bounds.push(q);
        }
        Ok(CoefficientRing { names, bounds })
    }

    /// Parse `eps^3`, or several factors `a^2*b^3` (also `,`-separated).
    /// A bare name means bound 2.
    pub fn parse(s: &str) -> Result<Self, DeformError> {
        let mut vars = Vec::new();
        for part in s.split(['*', ',']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(DeformError::Ring(format!("empty factor in {s:?}")));
            }
            let (name, q) = match part.split_once('^') {
                Some((n, q)) => {
                    let q: u32 = q.trim().parse().map_err(|_| DeformError::Ring(format!("bad exponent in {part:?}")))?;
                    (n.trim(), q)
                }
                None => (part, 2),
            };
            if !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(DeformError::Ring(format!("bad variable name {name:?}")));
            }
            vars.push((name.to_string(), q));
        }
        Self::new(vars)
    }

    pub fn variables(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn one(&self) -> Monomial {
        Monomial(vec![0; self.bounds.len()])
    }

    /// The monomial `εᵢ`, if `εᵢ ≠ 0` in `R`.
    pub fn variable(&self, i: usize) -> Option<Monomial> {
        let mut e = vec![0; self.bounds.len()];
        e[i] = 1;
        self.contains(&Monomial(e.clone())).then_some(Monomial(e))
    }

    /// `εᵢ^k`, if nonzero in `R`.
    pub fn power(&self, i: usize, k: u32) -> Option<Monomial> {
        let mut e = vec![0; self.bounds.len()];
        e[i] = k;
        let m = Monomial(e);
        self.contains(&m).then_some(m)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.0.len() == self.bounds.len() && m.0.iter().zip(&self.bounds).all(|(e, q)| e < q)
    }

    /// Product of monomials, `None` when it vanishes in `R`.
    pub fn multiply(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        let e: Vec<u32> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        let m = Monomial(e);
        self.contains(&m).then_some(m)
    }

    /// The least `L` with `(R₊)^L = 0`.
    pub fn nilpotency_order(&self) -> u32 {
        self.bounds.iter().map(|q| q - 1).sum::<u32>() + 1
    }

    /// `dim_k R`.
    pub fn dim(&self) -> usize {
        self.bounds.iter().map(|&q| q as usize).product()
    }

    /// All monomials of `R`, constant first, in increasing total degree.
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out = vec![Vec::new()];
        for &q in &self.bounds {
            out = out
                .into_iter()
                .flat_map(|e: Vec<u32>| {
                    (0..q).map(move |k| {
                        let mut f = e.clone();
                        f.push(k);
                        f
                    })
                })
                .collect();
        }
        let mut ms: Vec<Monomial> = out.into_iter().map(Monomial).collect();
        ms.sort_by_key(|m| (m.total_degree(), m.clone()));
        ms
    }

    /// The monomials spanning `R₊`.
    pub fn ideal_monomials(&self) -> Vec<Monomial> {
        self.monomials().into_iter().filter(|m| !m.is_constant()).collect()
    }

    /// Parse a monomial such as `1`, `eps`, `eps^2` or `a*b^2` (also `·`).
    /// Monomials that vanish in `R` are rejected.
    pub fn monomial(&self, s: &str) -> Result<Monomial, DeformError> {
        let mut e = vec![0u32; self.names.len()];
        if s.trim() != "1" {
            for part in s.split(['*', '·']) {
                let part = part.trim();
                let (name, k) = match part.split_once('^') {
                    Some((n, k)) => {
                        let k: u32 = k.trim().parse().map_err(|_| DeformError::Ring(format!("bad exponent in {part:?}")))?;
                        (n.trim(), k)
                    }
                    None => (part, 1),
                };
                let i = self
                    .names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| DeformError::Ring(format!("unknown variable {name:?} in monomial {s:?}")))?;
                e[i] += k;
            }
        }
        let m = Monomial(e);
        if !self.contains(&m) {
            return Err(DeformError::Ring(format!("monomial {s:?} vanishes in {self}")));
        }
        Ok(m)
    }

    pub fn label(&self, m: &Monomial) -> String {
        let factors: Vec<String> = self
            .names
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e > 0)
            .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("·")
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.names.iter().zip(&self.bounds).map(|(n, q)| format!("{n}^{q}")).collect();
        write!(f, "k[{}]/({})", self.names.join(","), rels.join(","))
    }
}
